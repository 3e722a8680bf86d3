#pragma once

#include <string>
#include <vector>

#include "palcomp/oracle.hpp"

namespace palcomp {

struct PropertyCheck {
  std::string name;
  bool passed = true;
  std::string detail; // counts swept, first failure, per-rule usage, ...
};

// composition_core
PropertyCheck check_predicate_invariants(int n_max, int m_max, int cap = kDefaultOracleCap);

// oracle
PropertyCheck check_enumeration_cardinality(int n_max, int cap = kDefaultOracleCap);
PropertyCheck check_oracle_counts(int n_max, int m_max, int cap = kDefaultOracleCap);

// counting
PropertyCheck check_oracle_vs_recurrence(int n_max, int m_max, int cap = kDefaultOracleCap);
PropertyCheck check_closed_vs_recurrence(int n_max);
PropertyCheck check_reference_counts();
PropertyCheck check_count_parity_and_bounds(int n_max, int m_max);
PropertyCheck check_even_modulus_plateau(int half_max, int m_max);
PropertyCheck check_pair_series_identity(int m_max, int order);
PropertyCheck check_pell_identity(int half_max);

// bijection_m2
PropertyCheck check_mod2_bijection(int half_max, int cap = kDefaultOracleCap);
PropertyCheck check_mod2_parity_lift(int half_max, int cap = kDefaultOracleCap);

// bijection_m3
PropertyCheck check_mod3_bijection(int n_max, int cap = kDefaultOracleCap);
PropertyCheck check_mod3_statistics(int n_max);

// structural
PropertyCheck check_parity_bijection_even_m(int half_max, int m_max, int cap = kDefaultOracleCap);
PropertyCheck check_involution(int n_max, int m_max, int cap = kDefaultOracleCap);
PropertyCheck check_stabilization(int n_max, int cap = kDefaultOracleCap);

// asymptotics
PropertyCheck check_asymptotic_constants();
PropertyCheck check_asymptotic_invariants();
PropertyCheck check_asymptotic_errors(int m_lo, int m_hi, int n_lo, int n_hi, double tol);

// golden fixtures
PropertyCheck check_golden_table1();
PropertyCheck check_golden_table2();

/// The full desk-scale suite for the CLI: every module's properties, with
/// sweep ranges clamped by n_max/m_max where they are scalable.
std::vector<PropertyCheck> run_verification_suite(int n_max, int m_max,
                                                  int cap = kDefaultOracleCap);

} // namespace palcomp
