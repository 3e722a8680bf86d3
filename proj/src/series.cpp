#include "palcomp/series.hpp"

#include <stdexcept>

namespace palcomp {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> low, int order_) : order(order_) {
  low.resize(order_ + 1);
  coeffs = std::move(low);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order, b.order));
  for (int k = 0; k <= r.order; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order, b.order));
  for (int k = 0; k <= r.order; ++k) r.coeffs[k] = a.coeffs[k] - b.coeffs[k];
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j <= r.order; ++j) {
      if (b.coeffs[j] == 0) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a.coeffs[0] != 1 && a.coeffs[0] != -1)
    throw std::invalid_argument("series reciprocal requires unit constant term");
  const BigInt c0 = a.coeffs[0];
  TruncatedSeries r(a.order);
  r.coeffs[0] = c0; // 1/1 or 1/-1
  for (int n = 1; n <= a.order; ++n) {
    BigInt acc = 0;
    for (int j = 1; j <= n; ++j) acc += a.coeffs[j] * r.coeffs[n - j];
    r.coeffs[n] = -c0 * acc;
  }
  return r;
}

TruncatedSeries expand(const RationalGF& gf, int order) {
  if (gf.den.empty() || gf.den[0] != 1)
    throw std::invalid_argument("rational expansion requires den[0] == 1");
  TruncatedSeries r(order);
  for (int n = 0; n <= order; ++n) {
    BigInt acc = n < static_cast<int>(gf.num.size()) ? gf.num[n] : BigInt(0);
    const int jmax = std::min<int>(n, static_cast<int>(gf.den.size()) - 1);
    for (int j = 1; j <= jmax; ++j) acc -= gf.den[j] * r.coeffs[n - j];
    r.coeffs[n] = std::move(acc);
  }
  return r;
}

} // namespace palcomp
