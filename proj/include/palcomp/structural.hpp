#pragma once

#include <string>

#include "palcomp/bigint.hpp"
#include "palcomp/composition.hpp"
#include "palcomp/oracle.hpp"

namespace palcomp {

/// For even finite m: mod-m palindromic compositions of even 2N correspond to
/// those of 2N+1 by growing the center. Even-length inputs gain a central 1;
/// odd-length inputs get center+1.
Composition parity_lift(const Composition& sigma, const Modulus& m);

/// Inverse of parity_lift: a central 1 is deleted, a center >= 2 is decremented.
/// Input must have odd total (its length and center are then forced odd).
Composition parity_drop(const Composition& sigma, const Modulus& m);

enum class PairRule {
  swap,              // not an exact palindrome: swap the outermost unequal pair
  split_even_center, // odd-length palindrome, even center c: remove it, append c/2 at both ends
  merge_ends,        // even-length palindrome: remove both end parts x, insert 2x centrally
  split_odd_center,  // odd center c >= 3: replace it by (c-1)/2, 1, (c-1)/2
  merge_center_one,  // center 1: replace the central x,1,x block by 2x+1
};

std::string pair_rule_name(PairRule rule);

struct InvolutionStep {
  Composition partner;
  PairRule rule;
};

/// A fixed-point-free involution on mod-m palindromic compositions of n >= 2,
/// witnessing that their count is even. Applying it to the partner returns
/// the original; rules pair up as swap<->swap, split_even_center<->merge_ends,
/// split_odd_center<->merge_center_one.
InvolutionStep involution_partner(const Composition& sigma, const Modulus& m);

/// Whether pc(n, m) has reached its large-m plateau 2^floor(n/2).
bool is_count_stabilized(int n, const Modulus& m);

/// Least m such that pc(n, m') = 2^floor(n/2) for every m' >= m, measured by
/// oracle sweep (n <= cap). Works out to max(n-1, 1).
int stabilization_threshold(int n, int cap = kDefaultOracleCap);

} // namespace palcomp
