#include "doctest.h"
#include "palcomp/counting.hpp"
#include "palcomp/oracle.hpp"
#include "palcomp/verification.hpp"

#include <stdexcept>

using namespace palcomp;

TEST_SUITE("counting") {

TEST_CASE("generating function coefficients") {
  const RationalGF f2 = generating_function(2);
  CHECK(f2.num == std::vector<BigInt>{0, 1, 2, -1}); // q + 2q^2 - q^3
  CHECK(f2.den == std::vector<BigInt>{1, 0, -3});    // 1 - 2q^2 - q^2

  const RationalGF f1 = generating_function(1);
  CHECK(f1.num == std::vector<BigInt>{0, 1, 1});   // q + 2q^2 - q^2
  CHECK(f1.den == std::vector<BigInt>{1, -1, -2}); // 1 - q - 2q^2

  const RationalGF f5 = generating_function(5);
  CHECK(f5.num == std::vector<BigInt>{0, 1, 2, 0, 0, 0, -1});
  CHECK(f5.den == std::vector<BigInt>{1, 0, -2, 0, 0, -1});

  CHECK_THROWS_AS(generating_function(0), std::invalid_argument);
}

TEST_CASE("leading sequences") {
  CHECK(recurrence_counts(2, 8) ==
        std::vector<BigInt>{0, 1, 2, 2, 6, 6, 18, 18, 54});
  CHECK(recurrence_counts(3, 8) ==
        std::vector<BigInt>{0, 1, 2, 2, 4, 6, 10, 16, 26});
  CHECK(recurrence_counts(1, 5) == std::vector<BigInt>{0, 1, 2, 4, 8, 16});
  CHECK(recurrence_count(8, 2) == 54);
  CHECK(recurrence_count(8, 3) == 26);
  CHECK_THROWS_AS(recurrence_count(0, 2), std::invalid_argument);
}

TEST_CASE("fibonacci and pell") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(17) == 1597);
  CHECK(pell(1) == 1);
  CHECK(pell(2) == 2);
  CHECK(pell(6) == 70);
  CHECK(pell(5) == 2 * pell(4) + pell(3));
  CHECK_THROWS_AS(fibonacci(0), std::invalid_argument);
  CHECK_THROWS_AS(pell(-1), std::invalid_argument);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_available(Modulus::finite(3)));
  CHECK(closed_form_available(Modulus::infinity()));
  CHECK_FALSE(closed_form_available(Modulus::finite(5)));
  CHECK_THROWS_AS(closed_form_count(6, Modulus::finite(5)), std::invalid_argument);

  CHECK(closed_form_count(1, Modulus::finite(2)) == 1);
  CHECK(closed_form_count(7, Modulus::finite(2)) == 18); // 2 * 3^2
  CHECK(closed_form_count(8, Modulus::finite(3)) == 26); // 2 * fib(7)
  CHECK(closed_form_count(9, Modulus::finite(4)) == 24); // 2 * pell(4)
  CHECK(closed_form_count(9, Modulus::finite(1)) == 256);
  CHECK(closed_form_count(9, Modulus::infinity()) == 16);

  for (int m = 1; m <= 4; ++m) {
    const auto rec = recurrence_counts(m, 64);
    for (int n = 1; n <= 64; ++n) CHECK(closed_form_count(n, Modulus::finite(m)) == rec[n]);
  }
}

TEST_CASE("counts agree with the oracle") {
  for (int m = 1; m <= 7; ++m) {
    const auto rec = recurrence_counts(m, 12);
    for (int n = 1; n <= 12; ++n) CHECK(oracle_count(n, Modulus::finite(m)) == rec[n]);
  }
}

TEST_CASE("pair series construction identity") {
  for (int m = 1; m <= 8; ++m) CHECK(check_gf_construction(m, 80));
  CHECK_THROWS_AS(congruent_pair_series(4, 5), std::invalid_argument); // order < m+2
  CHECK_THROWS_AS(congruent_pair_series(0, 10), std::invalid_argument);
}

TEST_CASE("pair series low coefficients") {
  // q^2/(1-q^2) alone until the first mixed pair enters at q^(m+2).
  const TruncatedSeries g = congruent_pair_series(3, 8);
  CHECK(g.coeffs == std::vector<BigInt>{0, 0, 1, 0, 1, 2, 1, 2, 3});
}

TEST_CASE("method names") {
  CHECK(method_name(CountMethod::oracle) == "oracle");
  CHECK(method_name(parse_method("recurrence")) == "recurrence");
  CHECK(parse_method("closed") == CountMethod::closed);
  CHECK_THROWS_AS(parse_method("magic"), std::invalid_argument);
}

TEST_CASE("count table") {
  const CountTable table = make_count_table(
      {Modulus::finite(2), Modulus::finite(3)}, 8,
      {CountMethod::oracle, CountMethod::recurrence, CountMethod::closed}, 24);
  CHECK(table.cells.size() == 2 * 8 * 3);
  for (const auto& cell : table.cells) CHECK(cell.agree);
  // Ordered by (m, n, method); last cell is pc(8,3) via the closed form.
  const CountCell& last = table.cells.back();
  CHECK(last.n == 8);
  CHECK(last.m == Modulus::finite(3));
  CHECK(last.method == CountMethod::closed);
  CHECK(last.value == 26);

  CHECK_THROWS_AS(make_count_table({Modulus::infinity()}, 6, {CountMethod::recurrence}, 24),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_count_table({Modulus::finite(5)}, 6, {CountMethod::closed}, 24),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_count_table({Modulus::finite(2)}, 30, {CountMethod::oracle}, 24),
                  OracleCapError);
  CHECK_THROWS_AS(make_count_table({}, 6, {CountMethod::recurrence}, 24),
                  std::invalid_argument);
  CHECK_NOTHROW(make_count_table({Modulus::infinity()}, 40, {CountMethod::closed}, 24));
}

TEST_CASE("count growth never exceeds all compositions") {
  const PropertyCheck check = check_count_parity_and_bounds(120, 8);
  INFO(check.detail);
  CHECK(check.passed);
}

} // TEST_SUITE
