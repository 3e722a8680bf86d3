#pragma once

#include <vector>

#include "palcomp/bigint.hpp"

namespace palcomp {

/// Power series truncated at a fixed order: coefficients of q^0 .. q^order.
struct TruncatedSeries {
  int order = 0;
  std::vector<BigInt> coeffs; // size order+1

  TruncatedSeries() : coeffs(1) {}
  explicit TruncatedSeries(int order_) : order(order_), coeffs(order_ + 1) {}
  /// Polynomial constructor: low coefficients given, rest zero (truncates if longer).
  TruncatedSeries(std::vector<BigInt> low, int order_);

  const BigInt& at(int k) const { return coeffs[k]; }
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Multiplicative inverse; requires constant term 1 (or -1).
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// A rational generating function num/den with den[0] == 1, coefficients low-to-high.
struct RationalGF {
  std::vector<BigInt> num;
  std::vector<BigInt> den;
};

/// Exact expansion of num/den to the given order via the linear recurrence
/// den[0]*a_n = num[n] - sum_{j>=1} den[j]*a_{n-j}.
TruncatedSeries expand(const RationalGF& gf, int order);

} // namespace palcomp
