#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "palcomp/composition.hpp"

namespace palcomp {

/// A composition with parts in {1,2}.
class TwoOneWord {
public:
  TwoOneWord() = default;
  explicit TwoOneWord(std::vector<int> parts); // rejects parts outside {1,2}

  const std::vector<int>& parts() const { return parts_; }
  std::int64_t total() const { return total_; }

  friend bool operator==(const TwoOneWord&, const TwoOneWord&) = default;

private:
  std::vector<int> parts_;
  std::int64_t total_ = 0;
};

TwoOneWord parse_two_one_word(std::string_view text); // "1,1,2,1,2"
std::string format_two_one_word(const TwoOneWord& word);

/// The bijection's domain: {1,2}-compositions beginning (1,1) or (2).
bool in_two_one_domain(const TwoOneWord& word);

/// All domain words summing to n, (1,1)-prefix family first then (2)-prefix,
/// lexicographic within each family. There are 2*fib(n-1) of them.
std::vector<TwoOneWord> two_one_domain(int n);

struct SegmentStats {
  std::int64_t length = 0;
  std::int64_t ones = 0;
  std::int64_t twos = 0;
  std::int64_t leading_ones = 0; // ones before the first two
};

SegmentStats segment_stats(const TwoOneWord& segment);

/// (c,d,e) with d or e a multiple of 3: the mirror pair of the image is
/// (c+d, c+e).
struct M3Triple {
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;

  friend bool operator==(const M3Triple&, const M3Triple&) = default;
};

std::string format_m3_triples(const std::vector<M3Triple>& triples);

struct M3Decomposition {
  std::vector<TwoOneWord> segments; // each contains at least one two
  std::int64_t trailing_ones = 0;   // the all-ones tail, possibly empty
};

/// Greedy left-to-right split: a segment is 1^o 2 (1 2)^(t-1), extended while
/// the next two symbols read (1,2); leftover ones form the tail.
M3Decomposition m3_decompose(const TwoOneWord& word);

std::string format_m3_decomposition(const M3Decomposition& d);

/// Segment 1^o 2 (1 2)^(t-1) -> (o/2+1, 3(t-1), 0) for even o,
/// ((o-1)/2, 0, 3t) for odd o.
M3Triple m3_segment_triple(const TwoOneWord& segment);

/// Lays pairs (c+d, c+e) outside-in; a nonzero trailing length becomes the
/// center part.
Composition m3_assemble(const std::vector<M3Triple>& triples, std::int64_t trailing_ones);

/// The full map onto mod-3 palindromic compositions of the same total.
Composition m3_forward(const TwoOneWord& word);

/// Inverse: pairs decode to segments, the center to the all-ones tail.
TwoOneWord m3_inverse(const Composition& sigma);

} // namespace palcomp
