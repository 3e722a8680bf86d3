#include "palcomp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "palcomp/counting.hpp"

namespace palcomp {
namespace {

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
}

// N(q) = q + 2q^2 - q^(m+1), the generating-function numerator.
double gf_numerator(double q, int m) { return q + 2 * q * q - std::pow(q, m + 1); }

// d/dq of the denominator.
double gf_denominator_deriv(double q, int m) { return -4 * q - m * std::pow(q, m - 1); }

} // namespace

double gf_denominator(double q, int m) {
  check_m(m);
  return 1 - 2 * q * q - std::pow(q, m);
}

RootBracket dominant_root(int m) {
  check_m(m);
  double lo = 0.0, hi = 1.0; // f(0) = 1 > 0, f(1) = -2 < 0
  for (int iter = 0; iter < 200 && hi - lo > 1e-17; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f = gf_denominator(mid, m);
    if (f == 0.0) return RootBracket{mid, mid, mid};
    if (f > 0)
      lo = mid;
    else
      hi = mid;
  }
  return RootBracket{0.5 * (lo + hi), lo, hi};
}

ResidueConstants residue_constants(int m) {
  check_m(m);
  const double alpha = dominant_root(m).value;
  ResidueConstants r;
  r.c = -gf_numerator(alpha, m) / (alpha * gf_denominator_deriv(alpha, m));
  if (m % 2 == 0)
    r.d = gf_numerator(-alpha, m) / (alpha * gf_denominator_deriv(-alpha, m));
  return r;
}

AsymptoticProfile asymptotic_profile(const Modulus& m) {
  AsymptoticProfile p;
  p.m = m;
  if (m.is_infinite()) {
    const double s = std::sqrt(2.0);
    p.alpha = 1 / s;
    p.alpha_lo = p.alpha_hi = p.alpha;
    p.growth = s;
    p.c = (2 + s) / 4;
    p.d = (2 - s) / 4;
    return p;
  }
  const int mv = static_cast<int>(m.value());
  const RootBracket root = dominant_root(mv);
  const ResidueConstants rc = residue_constants(mv);
  p.alpha = root.value;
  p.alpha_lo = root.lo;
  p.alpha_hi = root.hi;
  p.growth = 1 / root.value;
  p.c = rc.c;
  p.d = rc.d;
  return p;
}

ErrorReport asymptotic_error_report(const Modulus& m, int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  const AsymptoticProfile p = asymptotic_profile(m);
  std::vector<BigInt> counts;
  if (!m.is_infinite())
    counts = recurrence_counts(static_cast<int>(m.value()), n_hi);
  const BigInt guard = BigInt(1) << 52;
  ErrorReport r;
  r.m = m;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  const int quartile_start = n_hi - (n_hi - n_lo + 1) / 4 + 1;
  for (int n = n_lo; n <= n_hi; ++n) {
    const BigInt pc = m.is_infinite() ? closed_form_count(n, m) : counts[n];
    if (pc > guard)
      throw std::domain_error("precision guard: pc(" + std::to_string(n) + "," + m.str() +
                              ") exceeds 2^52; doubles cannot represent it exactly");
    const double expected = p.c + (n % 2 == 0 ? p.d : -p.d);
    const double err = std::abs(pc.convert_to<double>() * std::pow(p.alpha, n) - expected);
    r.max_err = std::max(r.max_err, err);
    if (n >= quartile_start) r.max_err_top_quartile = std::max(r.max_err_top_quartile, err);
  }
  return r;
}

} // namespace palcomp
