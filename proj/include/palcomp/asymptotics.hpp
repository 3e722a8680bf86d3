#pragma once

#include "palcomp/composition.hpp"

namespace palcomp {

/// The generating-function denominator 1 - 2q^2 - q^m, strictly decreasing on
/// (0,1) with a unique positive root alpha_m there.
double gf_denominator(double q, int m);

struct RootBracket {
  double value = 0;
  double lo = 0;
  double hi = 0;
};

/// Bisection on [0,1]; the bracket narrows to ~1 ulp (or collapses on an
/// exact zero, e.g. alpha_1 = 1/2).
RootBracket dominant_root(int m);

/// pc(n,m) ~ (c + (-1)^n d) * alpha^(-n): c from the residue at alpha,
/// d from the residue at -alpha (a pole only when m is even; d=0 for odd m).
struct ResidueConstants {
  double c = 0;
  double d = 0;
};

ResidueConstants residue_constants(int m);

struct AsymptoticProfile {
  Modulus m = Modulus::infinity();
  double alpha = 0;
  double alpha_lo = 0;
  double alpha_hi = 0;
  double growth = 0; // 1/alpha
  double c = 0;
  double d = 0;
};

/// Finite m via root finding + residues; infinity analytically
/// (alpha = 1/sqrt(2), c = (2+sqrt(2))/4, d = (2-sqrt(2))/4).
AsymptoticProfile asymptotic_profile(const Modulus& m);

struct ErrorReport {
  Modulus m = Modulus::infinity();
  int n_lo = 0;
  int n_hi = 0;
  double max_err = 0;              // max |pc(n,m) alpha^n - (c + (-1)^n d)| over the range
  double max_err_top_quartile = 0; // same, over the last quarter of the range
};

/// Compares exact counts against the predicted constants. Throws if any
/// pc(n,m) in range exceeds 2^52 (doubles would silently lose precision).
ErrorReport asymptotic_error_report(const Modulus& m, int n_lo, int n_hi);

} // namespace palcomp
