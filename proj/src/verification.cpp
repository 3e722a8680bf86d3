#include "palcomp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>

#include "palcomp/asymptotics.hpp"
#include "palcomp/bijection_m2.hpp"
#include "palcomp/bijection_m3.hpp"
#include "palcomp/counting.hpp"
#include "palcomp/golden_tables.hpp"
#include "palcomp/structural.hpp"

namespace palcomp {
namespace {

PropertyCheck start(std::string name) {
  PropertyCheck check;
  check.name = std::move(name);
  return check;
}

void fail(PropertyCheck& check, const std::string& message) {
  if (check.passed) {
    check.passed = false;
    check.detail = message;
  }
}

void summarize(PropertyCheck& check, const std::string& ok_detail) {
  if (check.passed) check.detail = ok_detail;
}

std::vector<TernaryWord> all_ternary_words(int length) {
  std::vector<TernaryWord> out;
  std::size_t total = 1;
  for (int i = 0; i < length; ++i) total *= 3;
  out.reserve(total);
  std::vector<int> symbols(length, 0);
  for (std::size_t v = 0; v < total; ++v) {
    std::size_t rest = v;
    for (int i = length - 1; i >= 0; --i) {
      symbols[i] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    out.emplace_back(symbols);
  }
  return out;
}

std::vector<Composition> sorted(std::vector<Composition> list) {
  std::sort(list.begin(), list.end());
  return list;
}

} // namespace

PropertyCheck check_predicate_invariants(int n_max, int m_max, int cap) {
  PropertyCheck check = start("predicate_invariants");
  const int n_hi = std::min(n_max, 10);
  long swept = 0;
  for (int n = 1; n <= n_hi && check.passed; ++n) {
    auto stream = enumerate_compositions(n, cap);
    while (auto sigma = stream.next()) {
      ++swept;
      const Composition rev = sigma->reversed();
      const bool exact = is_palindrome(*sigma);
      if (exact != is_palindromic_mod(*sigma, Modulus::infinity())) {
        fail(check, "infinity disagrees with exact palindromicity on " +
                        format_composition(*sigma));
        break;
      }
      for (int m = 1; m <= m_max; ++m) {
        const Modulus mod = Modulus::finite(m);
        const bool pal = is_palindromic_mod(*sigma, mod);
        if (pal != is_palindromic_mod(rev, mod)) {
          fail(check, "reversal invariance fails at " + format_composition(*sigma) +
                          " mod " + std::to_string(m));
          break;
        }
        if (m == 1 && !pal) {
          fail(check, "mod-1 universality fails at " + format_composition(*sigma));
          break;
        }
        if (exact && !pal) {
          fail(check, "exact palindrome not palindromic mod " + std::to_string(m) + ": " +
                          format_composition(*sigma));
          break;
        }
        for (int d = 1; d <= m; ++d) {
          if (m % d == 0 && pal && !is_palindromic_mod(*sigma, Modulus::finite(d))) {
            fail(check, "divisor monotonicity fails at " + format_composition(*sigma) +
                            " for " + std::to_string(d) + " | " + std::to_string(m));
            break;
          }
        }
        if (!check.passed) break;
      }
      if (!check.passed) break;
    }
  }
  summarize(check, std::to_string(swept) + " compositions swept, n <= " +
                       std::to_string(n_hi) + ", m <= " + std::to_string(m_max));
  return check;
}

PropertyCheck check_enumeration_cardinality(int n_max, int cap) {
  PropertyCheck check = start("enumeration_cardinality");
  const int n_hi = std::min(n_max, 16);
  for (int n = 1; n <= n_hi && check.passed; ++n) {
    auto stream = enumerate_compositions(n, cap);
    std::vector<Composition> seen;
    seen.reserve(stream.total());
    while (auto sigma = stream.next()) {
      if (sigma->total() != n) {
        fail(check, format_composition(*sigma) + " does not sum to " + std::to_string(n));
        break;
      }
      seen.push_back(std::move(*sigma));
    }
    if (!check.passed) break;
    if (seen.size() != (std::uint64_t(1) << (n - 1))) {
      fail(check, "n=" + std::to_string(n) + " yielded " + std::to_string(seen.size()) +
                      " compositions, expected 2^" + std::to_string(n - 1));
      break;
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      fail(check, "duplicate composition at n=" + std::to_string(n));
      break;
    }
  }
  // Canonical order is part of the contract.
  if (check.passed) {
    std::vector<std::string> order;
    auto stream = enumerate_compositions(3, cap);
    while (auto sigma = stream.next()) order.push_back(format_composition(*sigma));
    const std::vector<std::string> expected{"3", "2,1", "1,2", "1,1,1"};
    if (order != expected) fail(check, "canonical order broken at n=3");
  }
  summarize(check, "n <= " + std::to_string(n_hi) +
                       ": 2^(n-1) distinct compositions each, canonical order verified");
  return check;
}

PropertyCheck check_oracle_counts(int n_max, int m_max, int cap) {
  PropertyCheck check = start("oracle_counts");
  const int n_hi = std::min(n_max, 14);
  for (int n = 1; n <= n_hi && check.passed; ++n) {
    if (oracle_count(n, Modulus::finite(1), cap) != BigInt(1) << (n - 1)) {
      fail(check, "mod-1 count at n=" + std::to_string(n) + " is not 2^(n-1)");
      break;
    }
    const BigInt palindromes = oracle_count_palindromes(n, cap);
    if (palindromes != BigInt(1) << (n / 2)) {
      fail(check, "palindrome count at n=" + std::to_string(n) + " is not 2^floor(n/2)");
      break;
    }
    for (int m = std::max(1, n - 1); m <= n + 1; ++m) {
      if (oracle_count(n, Modulus::finite(m), cap) != palindromes) {
        fail(check, "count(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                        ") differs from the palindrome count");
        break;
      }
    }
    for (int m = 1; m <= m_max && check.passed; ++m) {
      const Modulus mod = Modulus::finite(m);
      if (BigInt(oracle_list(n, mod, cap).size()) != oracle_count(n, mod, cap)) {
        fail(check, "list/count mismatch at n=" + std::to_string(n) + ", m=" +
                        std::to_string(m));
        break;
      }
    }
  }
  summarize(check, "n <= " + std::to_string(n_hi) + ": mod-1, plateau, and filter laws hold");
  return check;
}

PropertyCheck check_oracle_vs_recurrence(int n_max, int m_max, int cap) {
  PropertyCheck check = start("oracle_vs_recurrence");
  int cells = 0;
  for (int m = 1; m <= m_max && check.passed; ++m) {
    const std::vector<BigInt> rec = recurrence_counts(m, n_max);
    for (int n = 1; n <= n_max; ++n) {
      ++cells;
      if (oracle_count(n, Modulus::finite(m), cap) != rec[n]) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) +
                        ") oracle != recurrence");
        break;
      }
    }
  }
  summarize(check, std::to_string(cells) + " cells agree, n <= " + std::to_string(n_max) +
                       ", m <= " + std::to_string(m_max));
  return check;
}

PropertyCheck check_closed_vs_recurrence(int n_max) {
  PropertyCheck check = start("closed_vs_recurrence");
  for (int m = 1; m <= 4 && check.passed; ++m) {
    const std::vector<BigInt> rec = recurrence_counts(m, n_max);
    for (int n = 1; n <= n_max; ++n) {
      if (closed_form_count(n, Modulus::finite(m)) != rec[n]) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) +
                        ") closed != recurrence");
        break;
      }
    }
  }
  summarize(check, "m in {1,2,3,4}, n <= " + std::to_string(n_max) + " (exact big integers)");
  return check;
}

PropertyCheck check_reference_counts() {
  PropertyCheck check = start("reference_counts");
  if (recurrence_count(8, 2) != 54) fail(check, "pc(8,2) != 54");
  if (recurrence_count(8, 3) != 26) fail(check, "pc(8,3) != 26");
  const std::vector<BigInt> m2 = recurrence_counts(2, 6);
  const std::vector<BigInt> want2{0, 1, 2, 2, 6, 6, 18};
  if (!std::equal(want2.begin() + 1, want2.end(), m2.begin() + 1))
    fail(check, "mod-2 sequence does not begin 1,2,2,6,6,18");
  const std::vector<BigInt> m3 = recurrence_counts(3, 6);
  const std::vector<BigInt> want3{0, 1, 2, 2, 4, 6, 10};
  if (!std::equal(want3.begin() + 1, want3.end(), m3.begin() + 1))
    fail(check, "mod-3 sequence does not begin 1,2,2,4,6,10");
  summarize(check, "pc(8,2)=54, pc(8,3)=26, leading sequences exact");
  return check;
}

PropertyCheck check_count_parity_and_bounds(int n_max, int m_max) {
  PropertyCheck check = start("count_parity_and_bounds");
  const std::vector<BigInt> free = recurrence_counts(1, n_max);
  for (int m = 1; m <= m_max && check.passed; ++m) {
    const std::vector<BigInt> rec = recurrence_counts(m, n_max);
    for (int n = 2; n <= n_max; ++n) {
      if (rec[n] % 2 != 0) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) + ") is odd");
        break;
      }
      if (rec[n] > free[n]) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) + ") exceeds 2^(n-1)");
        break;
      }
    }
  }
  summarize(check, "counts even (n >= 2) and dominated by 2^(n-1), n <= " +
                       std::to_string(n_max) + ", m <= " + std::to_string(m_max));
  return check;
}

PropertyCheck check_even_modulus_plateau(int half_max, int m_max) {
  PropertyCheck check = start("even_modulus_plateau");
  for (int m = 2; m <= m_max && check.passed; m += 2) {
    const std::vector<BigInt> rec = recurrence_counts(m, 2 * half_max + 1);
    for (int k = 1; k <= half_max; ++k) {
      if (rec[2 * k] != rec[2 * k + 1]) {
        fail(check, "pc(" + std::to_string(2 * k) + "," + std::to_string(m) + ") != pc(" +
                        std::to_string(2 * k + 1) + "," + std::to_string(m) + ")");
        break;
      }
    }
  }
  summarize(check, "pc(2k,m) = pc(2k+1,m) for even m <= " + std::to_string(m_max) +
                       ", k <= " + std::to_string(half_max));
  return check;
}

PropertyCheck check_pair_series_identity(int m_max, int order) {
  PropertyCheck check = start("pair_series_identity");
  for (int m = 1; m <= m_max; ++m) {
    if (!check_gf_construction(m, order)) {
      fail(check, "series construction identity fails for m=" + std::to_string(m));
      break;
    }
  }
  summarize(check, "identity exact to order " + std::to_string(order) + " for m <= " +
                       std::to_string(m_max));
  return check;
}

PropertyCheck check_pell_identity(int half_max) {
  PropertyCheck check = start("pell_identity");
  const std::vector<BigInt> rec = recurrence_counts(4, 2 * half_max + 1);
  for (int k = 1; k <= half_max; ++k) {
    const BigInt expected = 2 * pell(k);
    if (rec[2 * k] != expected || rec[2 * k + 1] != expected) {
      fail(check, "pc(" + std::to_string(2 * k) + ",4) != 2*pell(" + std::to_string(k) + ")");
      break;
    }
  }
  summarize(check, "pc(2k,4) = pc(2k+1,4) = 2*pell(k) for k <= " + std::to_string(half_max));
  return check;
}

PropertyCheck check_mod2_bijection(int half_max, int cap) {
  PropertyCheck check = start("mod2_bijection");
  const Modulus two = Modulus::finite(2);
  long pairs = 0;
  for (int n = 1; n <= half_max && check.passed; ++n) {
    std::vector<Composition> images;
    for (const TernaryWord& word : all_ternary_words(n - 1)) {
      for (FamilyTag family : {FamilyTag::plain, FamilyTag::marked}) {
        ++pairs;
        const Composition sigma = word_to_composition(word, family);
        if (sigma.total() != 2 * n) {
          fail(check, "image of word " + format_ternary_word(word) + " does not sum to 2n");
          break;
        }
        if (!is_palindromic_mod(sigma, two)) {
          fail(check, "image of word " + format_ternary_word(word) +
                          " is not palindromic mod 2");
          break;
        }
        const TripleSeq triples = word_to_triples(word);
        std::int64_t bc = 0;
        for (const Triple& t : triples) bc += t.b + t.c;
        if (sigma.total() != 2 * bc) {
          fail(check, "sum law 2(sum b + sum c) broken at word " + format_ternary_word(word));
          break;
        }
        const WordFamily back = composition_to_word(sigma);
        if (back.word != word || back.family != family) {
          fail(check, "word round trip broken at " + format_ternary_word(word));
          break;
        }
        images.push_back(sigma);
      }
      if (!check.passed) break;
    }
    if (!check.passed) break;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      fail(check, "images collide at n=" + std::to_string(n));
      break;
    }
    if (images != sorted(oracle_list(2 * n, two, cap))) {
      fail(check, "images differ from the mod-2 compositions of " + std::to_string(2 * n));
      break;
    }
    for (const Composition& sigma : images) {
      const WordFamily wf = composition_to_word(sigma);
      if (word_to_composition(wf.word, wf.family) != sigma) {
        fail(check, "composition round trip broken at " + format_composition(sigma));
        break;
      }
    }
  }
  summarize(check, std::to_string(pairs) + " (word, family) pairs, half-n <= " +
                       std::to_string(half_max) + ": injective, onto, both round trips");
  return check;
}

PropertyCheck check_mod2_parity_lift(int half_max, int cap) {
  PropertyCheck check = start("mod2_parity_lift");
  const Modulus two = Modulus::finite(2);
  for (int n = 1; n <= half_max && check.passed; ++n) {
    const std::vector<Composition> even = oracle_list(2 * n, two, cap);
    std::vector<Composition> lifted;
    lifted.reserve(even.size());
    for (const Composition& sigma : even) {
      Composition up = lift_parity(sigma);
      if (drop_parity(up) != sigma) {
        fail(check, "drop(lift) != id at " + format_composition(sigma));
        break;
      }
      lifted.push_back(std::move(up));
    }
    if (!check.passed) break;
    std::sort(lifted.begin(), lifted.end());
    if (lifted != sorted(oracle_list(2 * n + 1, two, cap))) {
      fail(check, "lift is not onto the mod-2 compositions of " + std::to_string(2 * n + 1));
      break;
    }
  }
  summarize(check, "lift/drop bijective between totals 2n and 2n+1, n <= " +
                       std::to_string(half_max));
  return check;
}

PropertyCheck check_mod3_bijection(int n_max, int cap) {
  PropertyCheck check = start("mod3_bijection");
  const Modulus three = Modulus::finite(3);
  long words = 0;
  for (int n = 2; n <= n_max && check.passed; ++n) {
    const std::vector<TwoOneWord> domain = two_one_domain(n);
    if (BigInt(domain.size()) != 2 * fibonacci(n - 1)) {
      fail(check, "|domain(" + std::to_string(n) + ")| != 2*fib(n-1)");
      break;
    }
    std::vector<Composition> images;
    images.reserve(domain.size());
    for (const TwoOneWord& a : domain) {
      ++words;
      const Composition b = m3_forward(a);
      if (b.total() != n) {
        fail(check, "image of " + format_two_one_word(a) + " does not sum to n");
        break;
      }
      if (m3_inverse(b) != a) {
        fail(check, "inverse(forward) != id at " + format_two_one_word(a));
        break;
      }
      images.push_back(b);
    }
    if (!check.passed) break;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      fail(check, "images collide at n=" + std::to_string(n));
      break;
    }
    if (images != sorted(oracle_list(n, three, cap))) {
      fail(check, "images differ from the mod-3 compositions of " + std::to_string(n));
      break;
    }
    for (const Composition& b : images) {
      if (m3_forward(m3_inverse(b)) != b) {
        fail(check, "forward(inverse) != id at " + format_composition(b));
        break;
      }
    }
  }
  summarize(check, std::to_string(words) + " domain words, 2 <= n <= " + std::to_string(n_max) +
                       ": bijective with two-sided inverse");
  return check;
}

PropertyCheck check_mod3_statistics(int n_max) {
  PropertyCheck check = start("mod3_statistics");
  for (int n = 2; n <= n_max && check.passed; ++n) {
    for (const TwoOneWord& a : two_one_domain(n)) {
      const M3Decomposition d = m3_decompose(a);
      std::int64_t covered = d.trailing_ones;
      for (const TwoOneWord& seg : d.segments) {
        const SegmentStats s = segment_stats(seg);
        covered += s.ones + 2 * s.twos;
        if (s.ones != s.leading_ones + s.twos - 1 || s.length != s.leading_ones + 2 * s.twos - 1) {
          fail(check, "segment shape law fails in " + format_two_one_word(a));
          break;
        }
        const M3Triple t = m3_segment_triple(seg);
        if (t.d % 3 != 0 || t.e % 3 != 0 || (t.d != 0 && t.e != 0)) {
          fail(check, "triple congruence fails in " + format_two_one_word(a));
          break;
        }
      }
      if (!check.passed) break;
      if (covered != a.total()) {
        fail(check, "decomposition does not cover " + format_two_one_word(a));
        break;
      }
    }
  }
  summarize(check, "segment stats, coverage, and triple congruence hold for 2 <= n <= " +
                       std::to_string(n_max));
  return check;
}

PropertyCheck check_parity_bijection_even_m(int half_max, int m_max, int cap) {
  PropertyCheck check = start("parity_bijection_even_m");
  for (int m = 2; m <= m_max && check.passed; m += 2) {
    const Modulus mod = Modulus::finite(m);
    for (int n = 1; n <= half_max; ++n) {
      const std::vector<Composition> even = oracle_list(2 * n, mod, cap);
      const std::vector<Composition> odd = oracle_list(2 * n + 1, mod, cap);
      std::vector<Composition> lifted;
      lifted.reserve(even.size());
      for (const Composition& sigma : even) {
        Composition up = parity_lift(sigma, mod);
        if (parity_drop(up, mod) != sigma) {
          fail(check, "drop(lift) != id at " + format_composition(sigma) + " mod " +
                          std::to_string(m));
          break;
        }
        lifted.push_back(std::move(up));
      }
      if (!check.passed) break;
      std::sort(lifted.begin(), lifted.end());
      if (lifted != sorted(odd)) {
        fail(check, "lift not onto at 2n=" + std::to_string(2 * n) + ", m=" +
                        std::to_string(m));
        break;
      }
      for (const Composition& tau : odd) {
        if (parity_lift(parity_drop(tau, mod), mod) != tau) {
          fail(check, "lift(drop) != id at " + format_composition(tau) + " mod " +
                          std::to_string(m));
          break;
        }
      }
      if (!check.passed) break;
    }
  }
  summarize(check, "even m <= " + std::to_string(m_max) + ", half-n <= " +
                       std::to_string(half_max) + ": lift/drop two-sided bijection");
  return check;
}

PropertyCheck check_involution(int n_max, int m_max, int cap) {
  PropertyCheck check = start("involution");
  std::map<PairRule, long> usage;
  auto partner_rule = [](PairRule rule) {
    switch (rule) {
      case PairRule::swap: return PairRule::swap;
      case PairRule::split_even_center: return PairRule::merge_ends;
      case PairRule::merge_ends: return PairRule::split_even_center;
      case PairRule::split_odd_center: return PairRule::merge_center_one;
      case PairRule::merge_center_one: return PairRule::split_odd_center;
    }
    return PairRule::swap;
  };
  for (int m = 1; m <= m_max && check.passed; ++m) {
    const Modulus mod = Modulus::finite(m);
    for (int n = 2; n <= n_max; ++n) {
      const std::vector<Composition> members = sorted(oracle_list(n, mod, cap));
      if (members.size() % 2 != 0) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) + ") is odd");
        break;
      }
      for (const Composition& sigma : members) {
        const InvolutionStep step = involution_partner(sigma, mod);
        ++usage[step.rule];
        if (step.partner == sigma) {
          fail(check, "fixed point at " + format_composition(sigma) + " mod " +
                          std::to_string(m));
          break;
        }
        if (!std::binary_search(members.begin(), members.end(), step.partner)) {
          fail(check, "partner of " + format_composition(sigma) + " leaves the set mod " +
                          std::to_string(m));
          break;
        }
        const InvolutionStep back = involution_partner(step.partner, mod);
        if (back.partner != sigma || back.rule != partner_rule(step.rule)) {
          fail(check, "involution breaks at " + format_composition(sigma) + " mod " +
                          std::to_string(m));
          break;
        }
      }
      if (!check.passed) break;
    }
  }
  if (check.passed) {
    std::string counts;
    for (const auto& [rule, count] : usage) {
      if (!counts.empty()) counts += ", ";
      counts += pair_rule_name(rule) + "=" + std::to_string(count);
    }
    check.detail = "fixed-point-free involution, 2 <= n <= " + std::to_string(n_max) +
                   ", m <= " + std::to_string(m_max) + "; rule usage: " + counts;
  }
  return check;
}

PropertyCheck check_stabilization(int n_max, int cap) {
  PropertyCheck check = start("stabilization");
  std::string thresholds;
  for (int n = 1; n <= n_max && check.passed; ++n) {
    const BigInt plateau = BigInt(1) << (n / 2);
    const int t = stabilization_threshold(n, cap);
    if (!thresholds.empty()) thresholds += ",";
    thresholds += std::to_string(t);
    if (t != std::max(n - 1, 1)) {
      fail(check, "threshold(" + std::to_string(n) + ") = " + std::to_string(t) +
                      ", expected " + std::to_string(std::max(n - 1, 1)));
      break;
    }
    for (int m = std::max(n - 1, 1); m <= n + 2; ++m) {
      if (oracle_count(n, Modulus::finite(m), cap) != plateau) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(m) +
                        ") misses the plateau");
        break;
      }
      if (!is_count_stabilized(n, Modulus::finite(m))) {
        fail(check, "stabilized(" + std::to_string(n) + "," + std::to_string(m) +
                        ") reports false on the plateau");
        break;
      }
    }
    if (!check.passed) break;
    if (n >= 4) {
      if (oracle_count(n, Modulus::finite(n - 2), cap) == plateau) {
        fail(check, "pc(" + std::to_string(n) + "," + std::to_string(n - 2) +
                        ") unexpectedly equals 2^floor(n/2)");
        break;
      }
      if (is_count_stabilized(n, Modulus::finite(n - 2))) {
        fail(check, "stabilized(" + std::to_string(n) + "," + std::to_string(n - 2) +
                        ") reports true below the threshold");
        break;
      }
    }
    if (!is_count_stabilized(n, Modulus::infinity())) {
      fail(check, "stabilized(" + std::to_string(n) + ", inf) is false");
      break;
    }
  }
  summarize(check, "measured thresholds for n=1.." + std::to_string(n_max) + ": " + thresholds);
  return check;
}

PropertyCheck check_asymptotic_constants() {
  PropertyCheck check = start("asymptotic_constants");
  auto prof = [](int m) { return asymptotic_profile(Modulus::finite(m)); };
  const AsymptoticProfile p1 = prof(1), p2 = prof(2), p3 = prof(3), p4 = prof(4);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  struct Row {
    const char* what;
    double got;
    double want;
    double tol;
  };
  const Row rows[] = {
      {"growth(1)", p1.growth, 2.0, 1e-10},
      {"growth(2)", p2.growth, std::sqrt(3.0), 1e-10},
      {"growth(3)", p3.growth, phi, 1e-10},
      {"c(1)", p1.c, 0.5, 1e-9},
      {"d(1)", p1.d, 0.0, 1e-12},
      {"c(2)", p2.c, (3 + std::sqrt(3.0)) / 9, 1e-9},
      {"d(2)", p2.d, (3 - std::sqrt(3.0)) / 9, 1e-9},
      {"c(3)", p3.c, (5 - std::sqrt(5.0)) / 5, 1e-9},
      {"d(3)", p3.d, 0.0, 1e-9},
      {"growth(4)", p4.growth, 1.55, 5e-3},
      {"c(4)", p4.c, 0.58, 5e-3},
      {"d(4)", p4.d, 0.13, 5e-3},
  };
  for (const Row& row : rows) {
    if (std::abs(row.got - row.want) > row.tol) {
      fail(check, std::string(row.what) + " = " + std::to_string(row.got) + ", expected " +
                      std::to_string(row.want) + " within " + std::to_string(row.tol));
      break;
    }
  }
  summarize(check, "growth rates and residue constants match the exact forms (m <= 4)");
  return check;
}

PropertyCheck check_asymptotic_invariants() {
  PropertyCheck check = start("asymptotic_invariants");
  const double sqrt2 = std::sqrt(2.0);
  for (int m = 1; m <= 64 && check.passed; ++m) {
    const RootBracket root = dominant_root(m);
    if (std::abs(gf_denominator(root.value, m)) > 1e-10)
      fail(check, "root residual too large at m=" + std::to_string(m));
  }
  double prev = 3.0;
  for (int m = 1; m <= 32 && check.passed; ++m) {
    const double growth = 1 / dominant_root(m).value;
    if (!(growth > sqrt2 && growth <= 2.0 + 1e-12))
      fail(check, "growth rate outside (sqrt 2, 2] at m=" + std::to_string(m));
    else if (!(growth < prev))
      fail(check, "growth rate not strictly decreasing at m=" + std::to_string(m));
    prev = growth;
    const ResidueConstants rc = residue_constants(m);
    if (m % 2 == 1 && rc.d != 0.0)
      fail(check, "d nonzero for odd m=" + std::to_string(m));
    if (m % 2 == 0 && !(rc.d > 0))
      fail(check, "d not positive for even m=" + std::to_string(m));
  }
  for (int m : {32, 64}) {
    if (!check.passed) break;
    const double growth = 1 / dominant_root(m).value;
    const ResidueConstants rc = residue_constants(m);
    if (std::abs(growth - sqrt2) > 0.01 || std::abs(rc.c - (2 + sqrt2) / 4) > 0.01 ||
        std::abs(rc.d - (2 - sqrt2) / 4) > 0.01)
      fail(check, "m=" + std::to_string(m) + " constants not near the limit row");
  }
  summarize(check, "residuals <= 1e-10 (m <= 64); growth strictly decreasing in (sqrt 2, 2]; "
                   "limit row approached");
  return check;
}

PropertyCheck check_asymptotic_errors(int m_lo, int m_hi, int n_lo, int n_hi, double tol) {
  PropertyCheck check = start("asymptotic_errors");
  double worst = 0;
  for (int m = m_lo; m <= m_hi; ++m) {
    const ErrorReport report = asymptotic_error_report(Modulus::finite(m), n_lo, n_hi);
    worst = std::max(worst, report.max_err);
    if (report.max_err >= tol) {
      fail(check, "max error " + std::to_string(report.max_err) + " at m=" + std::to_string(m) +
                      " breaches " + std::to_string(tol));
      break;
    }
  }
  if (check.passed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    check.detail = "max |pc(n,m) alpha^n - (c +/- d)| = " + std::string(buf) + " for m in " +
                   std::to_string(m_lo) + ".." + std::to_string(m_hi) + ", n in " +
                   std::to_string(n_lo) + ".." + std::to_string(n_hi);
  }
  return check;
}

PropertyCheck check_golden_table1() {
  PropertyCheck check = start("golden_table1");
  const GoldenCheck g = verify_table1();
  if (!g.passed) fail(check, g.first_mismatch);
  summarize(check, std::to_string(g.cells) + " cells reproduced");
  return check;
}

PropertyCheck check_golden_table2() {
  PropertyCheck check = start("golden_table2");
  const GoldenCheck g = verify_table2();
  if (!g.passed) fail(check, g.first_mismatch);
  summarize(check, std::to_string(g.cells) + " cells reproduced");
  return check;
}

std::vector<PropertyCheck> run_verification_suite(int n_max, int m_max, int cap) {
  if (n_max < 2 || m_max < 1) throw std::invalid_argument("need n_max >= 2 and m_max >= 1");
  std::vector<PropertyCheck> out;
  out.push_back(check_predicate_invariants(n_max, m_max, cap));
  out.push_back(check_enumeration_cardinality(n_max, cap));
  out.push_back(check_oracle_counts(n_max, m_max, cap));
  out.push_back(check_oracle_vs_recurrence(std::min(n_max, 18), m_max, cap));
  out.push_back(check_closed_vs_recurrence(200));
  out.push_back(check_reference_counts());
  out.push_back(check_count_parity_and_bounds(200, m_max));
  out.push_back(check_even_modulus_plateau(100, m_max));
  out.push_back(check_pair_series_identity(10, 200));
  out.push_back(check_pell_identity(30));
  out.push_back(check_mod2_bijection(std::clamp(n_max / 2, 1, 10), cap));
  out.push_back(check_mod2_parity_lift(std::clamp(n_max / 2, 1, 10), cap));
  out.push_back(check_mod3_bijection(std::min(n_max, 18), cap));
  out.push_back(check_mod3_statistics(std::min(n_max, 14)));
  out.push_back(check_parity_bijection_even_m(std::clamp(n_max / 2, 1, 9),
                                              std::min(m_max, 10), cap));
  out.push_back(check_involution(std::min(n_max, 14), std::min(m_max, 6), cap));
  out.push_back(check_stabilization(std::min(n_max, 16), cap));
  out.push_back(check_asymptotic_constants());
  out.push_back(check_asymptotic_invariants());
  out.push_back(check_asymptotic_errors(2, 4, 30, 60, 1e-3));
  out.push_back(check_golden_table1());
  out.push_back(check_golden_table2());
  return out;
}

} // namespace palcomp
