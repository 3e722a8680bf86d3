import math

import pytest

import palcomp


def test_counts_match_known_values():
    assert palcomp.count(8, 2) == 54
    assert palcomp.count(8, 3) == 26
    assert palcomp.count(8, 2, method="oracle") == 54
    assert palcomp.count(8, 3, method="closed") == 26
    assert palcomp.count(8, "inf") == 16
    assert palcomp.count(8, None) == 16


def test_counts_are_exact_python_ints():
    # 2 * 3^(floor(n/2) - 1) for m=2, far past double precision
    assert palcomp.count(200, 2) == 2 * 3**99
    assert palcomp.count(201, 1) == 2**200


def test_count_series():
    assert palcomp.count_series(3, 8) == [0, 1, 2, 2, 4, 6, 10, 16, 26]
    assert palcomp.count_series("inf", 6) == [0, 1, 2, 2, 4, 4, 8]


def test_enumeration_agrees_with_counts():
    for n in range(1, 11):
        comps = palcomp.palindromic_compositions(n, 3)
        assert len(comps) == palcomp.count(n, 3)
        assert all(sum(c) == n for c in comps)
        assert all(palcomp.is_palindromic(c, 3) for c in comps)


def test_mod2_bijection_round_trip():
    assert palcomp.word_to_composition("01221") == [1, 2, 2, 6, 1]
    assert palcomp.word_to_composition("111", "marked") == [4, 4]
    assert palcomp.composition_to_word([1, 2, 2, 6, 1]) == ("01221", "plain")
    assert palcomp.composition_to_word([4, 4]) == ("111", "marked")
    assert palcomp.parity_lift([1, 2, 2, 6, 1]) == [1, 2, 3, 6, 1]
    assert palcomp.parity_drop([1, 2, 3, 6, 1]) == [1, 2, 2, 6, 1]


def test_mod3_bijection_round_trip():
    word = [1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1]
    assert palcomp.m3_forward(word) == [1, 1, 5, 2, 2, 1, 4]
    assert palcomp.m3_inverse([1, 1, 5, 2, 2, 1, 4]) == word
    assert palcomp.m3_inverse([1, 6, 1]) == [2, 1, 1, 1, 1, 1, 1]
    domain = palcomp.two_one_domain(8)
    assert len(domain) == palcomp.count(8, 3)
    images = [tuple(palcomp.m3_forward(w)) for w in domain]
    assert len(set(images)) == len(images)


def test_involution_pairs_everything():
    partner, rule = palcomp.involution_partner([1, 2], 1)
    assert partner == [2, 1] and rule == "swap"
    for sigma in palcomp.palindromic_compositions(7, 3):
        partner, _ = palcomp.involution_partner(sigma, 3)
        assert partner != sigma
        assert palcomp.involution_partner(partner, 3)[0] == sigma


def test_stabilization():
    assert [palcomp.stabilization_threshold(n) for n in range(1, 7)] == [1, 1, 2, 3, 4, 5]
    assert palcomp.is_count_stabilized(6, 5)
    assert not palcomp.is_count_stabilized(6, 4)


def test_asymptotics():
    row = palcomp.asymptotics(2)
    assert row["growth"] == pytest.approx(math.sqrt(3), abs=1e-12)
    assert row["c"] == pytest.approx((3 + math.sqrt(3)) / 9, abs=1e-12)
    assert row["d"] == pytest.approx((3 - math.sqrt(3)) / 9, abs=1e-12)
    assert palcomp.asymptotics("inf")["growth"] == pytest.approx(math.sqrt(2), abs=1e-15)


def test_property_suite_and_goldens():
    results = palcomp.verify(10, 4)
    assert results and all(r["passed"] for r in results)
    goldens = palcomp.verify_goldens()
    assert goldens["table1"]["passed"] and goldens["table1"]["cells"] == 162
    assert goldens["table2"]["passed"] and goldens["table2"]["cells"] == 54


def test_domain_errors_become_value_errors():
    with pytest.raises(ValueError):
        palcomp.count(0, 2)
    with pytest.raises(ValueError):
        palcomp.count(8, "x")
    with pytest.raises(ValueError):
        palcomp.count(8, 5, method="closed")
    with pytest.raises(ValueError):
        palcomp.count(30, 2, method="oracle")
    with pytest.raises(ValueError):
        palcomp.m3_inverse([1, 3])
    with pytest.raises(ValueError):
        palcomp.composition_to_word([3])
