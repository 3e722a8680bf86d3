#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "palcomp/bigint.hpp"
#include "palcomp/composition.hpp"

namespace palcomp {

/// Exhaustive enumeration is capped: 2^(n-1) compositions of n get expensive fast.
inline constexpr int kDefaultOracleCap = 24;

class OracleCapError : public std::runtime_error {
public:
  OracleCapError(int n, int cap)
      : std::runtime_error("n=" + std::to_string(n) + " exceeds the oracle cap " +
                           std::to_string(cap) + "; raise --oracle-cap to override") {}
};

/// Streams the 2^(n-1) compositions of n in canonical order: composition v
/// (0 <= v < 2^(n-1)) cuts after cell i exactly when bit n-1-i of v is set,
/// so v=0 is (n) and v=2^(n-1)-1 is (1,1,...,1).
class CompositionStream {
public:
  CompositionStream(int n, int cap = kDefaultOracleCap);

  std::optional<Composition> next();
  std::uint64_t total() const { return end_; }

private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

CompositionStream enumerate_compositions(int n, int cap = kDefaultOracleCap);

/// Number of compositions of n palindromic mod m, by filtering the full stream.
BigInt oracle_count(int n, const Modulus& m, int cap = kDefaultOracleCap);

/// The compositions themselves, in canonical order.
std::vector<Composition> oracle_list(int n, const Modulus& m, int cap = kDefaultOracleCap);

/// Exact palindromes only; equals 2^floor(n/2).
BigInt oracle_count_palindromes(int n, int cap = kDefaultOracleCap);

} // namespace palcomp
