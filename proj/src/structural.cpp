#include "palcomp/structural.hpp"

#include <stdexcept>

#include "palcomp/counting.hpp"

namespace palcomp {
namespace {

void check_even_modulus(const Modulus& m) {
  if (m.is_infinite() || m.value() % 2 != 0)
    throw std::invalid_argument("parity lift/drop requires an even finite modulus");
}

} // namespace

Composition parity_lift(const Composition& sigma, const Modulus& m) {
  check_even_modulus(m);
  if (sigma.total() % 2 != 0) throw std::invalid_argument("parity lift expects an even total");
  if (!is_palindromic_mod(sigma, m))
    throw std::invalid_argument("composition is not palindromic mod " + m.str());
  auto parts = sigma.parts();
  if (parts.size() % 2 == 1)
    ++parts[parts.size() / 2];
  else
    parts.insert(parts.begin() + parts.size() / 2, 1);
  return Composition(std::move(parts));
}

Composition parity_drop(const Composition& sigma, const Modulus& m) {
  check_even_modulus(m);
  if (sigma.total() % 2 != 1) throw std::invalid_argument("parity drop expects an odd total");
  if (!is_palindromic_mod(sigma, m))
    throw std::invalid_argument("composition is not palindromic mod " + m.str());
  auto parts = sigma.parts();
  // Mirror pairs are congruent mod an even m, so they sum evenly: an odd
  // total forces an odd length and an odd center.
  const std::size_t mid = parts.size() / 2;
  if (parts[mid] == 1)
    parts.erase(parts.begin() + mid);
  else
    --parts[mid];
  return Composition(std::move(parts));
}

std::string pair_rule_name(PairRule rule) {
  switch (rule) {
    case PairRule::swap: return "swap";
    case PairRule::split_even_center: return "split_even_center";
    case PairRule::merge_ends: return "merge_ends";
    case PairRule::split_odd_center: return "split_odd_center";
    case PairRule::merge_center_one: return "merge_center_one";
  }
  return "?";
}

InvolutionStep involution_partner(const Composition& sigma, const Modulus& m) {
  if (sigma.total() < 2)
    throw std::invalid_argument("no partner exists for compositions of 1");
  if (!is_palindromic_mod(sigma, m))
    throw std::invalid_argument("composition is not palindromic mod " + m.str());
  auto parts = sigma.parts();
  const std::size_t k = parts.size();

  for (std::size_t i = 0, j = k; i < j; ++i, --j) {
    if (parts[i] != parts[j - 1]) {
      std::swap(parts[i], parts[j - 1]);
      return {Composition(std::move(parts)), PairRule::swap};
    }
  }

  if (k % 2 == 1) {
    const std::int64_t c = parts[k / 2];
    if (c % 2 == 0) {
      parts.erase(parts.begin() + k / 2);
      parts.insert(parts.begin(), c / 2);
      parts.push_back(c / 2);
      return {Composition(std::move(parts)), PairRule::split_even_center};
    }
    if (c >= 3) {
      parts[k / 2] = (c - 1) / 2;
      parts.insert(parts.begin() + k / 2 + 1, {1, (c - 1) / 2});
      return {Composition(std::move(parts)), PairRule::split_odd_center};
    }
    // center 1; total >= 2 forces length >= 3
    const std::int64_t x = parts[k / 2 - 1];
    parts[k / 2 - 1] = 2 * x + 1;
    parts.erase(parts.begin() + k / 2, parts.begin() + k / 2 + 2);
    return {Composition(std::move(parts)), PairRule::merge_center_one};
  }

  const std::int64_t x = parts.front();
  parts.erase(parts.begin());
  parts.pop_back();
  parts.insert(parts.begin() + parts.size() / 2, 2 * x);
  return {Composition(std::move(parts)), PairRule::merge_ends};
}

bool is_count_stabilized(int n, const Modulus& m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt plateau = BigInt(1) << (n / 2);
  if (m.is_infinite()) return true;
  return recurrence_count(n, static_cast<int>(m.value())) == plateau;
}

int stabilization_threshold(int n, int cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt plateau = BigInt(1) << (n / 2);
  // Mirror pairs differ by at most n-2, so any m >= n-1 forces exact equality.
  int threshold = n > 2 ? n - 1 : 1;
  if (oracle_count(n, Modulus::finite(threshold), cap) != plateau)
    throw std::logic_error("stabilization bound violated");
  for (int m = threshold - 1; m >= 1; --m) {
    if (oracle_count(n, Modulus::finite(m), cap) == plateau)
      threshold = m;
    else
      break;
  }
  return threshold;
}

} // namespace palcomp
