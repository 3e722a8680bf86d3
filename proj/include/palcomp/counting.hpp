#pragma once

#include <string>
#include <vector>

#include "palcomp/bigint.hpp"
#include "palcomp/composition.hpp"
#include "palcomp/series.hpp"

namespace palcomp {

/// F_m(q) = (q + 2q^2 - q^(m+1)) / (1 - 2q^2 - q^m): the generating function
/// whose q^n coefficient counts compositions of n palindromic mod m.
RationalGF generating_function(int m);

/// Coefficients 0..n_max of F_m, computed exactly.
std::vector<BigInt> recurrence_counts(int m, int n_max);

/// Single coefficient; prefer recurrence_counts when sweeping n.
BigInt recurrence_count(int n, int m);

/// Closed forms: m=1 -> 2^(n-1); m=2 -> 2*3^(floor(n/2)-1); m=3 -> 2*fib(n-1);
/// m=4 -> 2*pell(floor(n/2)); infinity -> 2^floor(n/2). n=1 gives 1 throughout.
/// Throws for other moduli.
BigInt closed_form_count(int n, const Modulus& m);
bool closed_form_available(const Modulus& m);

/// fib(1)=fib(2)=1; pell(1)=1, pell(2)=2, pell(k)=2*pell(k-1)+pell(k-2).
BigInt fibonacci(int k);
BigInt pell(int k);

/// G_m = q^2/(1-q^2) + 2 q^2/(1-q^2) * q^m/(1-q^m): series over mirror pairs
/// with congruent parts. Needs order >= m+2 to see any mixed-pair term.
TruncatedSeries congruent_pair_series(int m, int order);

/// Checks F_m == G_m/(1-G_m) * 1/(1-q) + q/(1-q) coefficient-for-coefficient.
bool check_gf_construction(int m, int order);

enum class CountMethod { oracle, recurrence, closed };

std::string method_name(CountMethod method);
CountMethod parse_method(const std::string& name); // "oracle" | "recurrence" | "closed"

struct CountCell {
  int n;
  Modulus m;
  CountMethod method;
  BigInt value;
  bool agree; // all methods computed for this (n, m) produced the same value
};

struct CountTable {
  std::vector<CountCell> cells; // ordered by (m, n, method)
};

/// Computes pc(n, m) for 1 <= n <= n_max, every modulus, every method given.
/// Methods must be applicable: oracle needs n_max <= cap, recurrence needs a
/// finite modulus, closed needs m in {1,2,3,4,inf}.
CountTable make_count_table(const std::vector<Modulus>& moduli, int n_max,
                            const std::vector<CountMethod>& methods,
                            int oracle_cap);

} // namespace palcomp
