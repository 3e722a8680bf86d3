#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palcomp {

/// A modulus for part congruence: either a finite integer m >= 1 or infinity,
/// where congruence mod infinity means exact equality.
class Modulus {
public:
  static Modulus finite(std::int64_t m);
  static Modulus infinity() { return Modulus(kInf); }

  /// Accepts a positive integer or "inf"/"infinity".
  static Modulus parse(std::string_view text);

  bool is_infinite() const { return value_ == kInf; }
  std::int64_t value() const; // finite moduli only
  bool congruent(std::int64_t a, std::int64_t b) const {
    return is_infinite() ? a == b : (a - b) % value_ == 0;
  }
  std::string str() const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

private:
  static constexpr std::int64_t kInf = -1;
  explicit Modulus(std::int64_t v) : value_(v) {}
  std::int64_t value_;
};

/// A composition: an ordered sequence of positive integer parts.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<std::int64_t> parts); // rejects nonpositive parts

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t total() const { return total_; }
  std::int64_t part(std::size_t i) const { return parts_[i]; } // 0-based
  bool empty() const { return parts_.empty(); }

  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<std::int64_t> parts_;
  std::int64_t total_ = 0;
};

/// sigma_i == sigma_{k-i+1} for every i (exact mirror symmetry).
bool is_palindrome(const Composition& sigma);

/// sigma_i == sigma_{k-i+1} (mod m) for every i.
bool is_palindromic_mod(const Composition& sigma, const Modulus& m);

/// Parses "1,2,2,6,1" (whitespace around tokens tolerated).
Composition parse_composition(std::string_view text);

/// Formats as "1,2,2,6,1".
std::string format_composition(const Composition& sigma);

} // namespace palcomp
