#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "palcomp/composition.hpp"

namespace palcomp {

/// A word over {0,1,2} of length n-1 encoding a mod-2 palindromic composition
/// of 2n. The empty word (n=1) encodes (2).
class TernaryWord {
public:
  TernaryWord() = default;
  explicit TernaryWord(std::vector<int> symbols); // rejects symbols outside {0,1,2}

  const std::vector<int>& symbols() const { return symbols_; }
  int n() const { return static_cast<int>(symbols_.size()) + 1; }

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

private:
  std::vector<int> symbols_;
};

/// Parses a digit string like "01221"; "" is the empty word.
TernaryWord parse_ternary_word(std::string_view text);
std::string format_ternary_word(const TernaryWord& word);

/// One mirror pair (or the center) of the target composition: the pair is
/// (b+2c, b) when d=0 and (b, b+2c) when d=1; a final (b, c=0, d=0) is the
/// lone center part 2b.
struct Triple {
  std::int64_t b = 1;
  std::int64_t c = 0;
  int d = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

using TripleSeq = std::vector<Triple>;

enum class FamilyTag { plain, marked };

std::string format_triples(const TripleSeq& triples); // "(1,0,0),(2,2,1)"

/// Scans the word left to right: 0 starts a fresh triple, 2 bumps c, 1 bumps b
/// unless it follows a 2, in which case it sets d and starts a fresh triple.
TripleSeq word_to_triples(const TernaryWord& word);

/// Sets d=1 on the final triple (which always carries d=0 after scanning).
TripleSeq mark_last(TripleSeq triples);

/// Rebuilds the word; requires the final triple unmarked.
TernaryWord triples_to_word(const TripleSeq& triples);

/// Lays mirror pairs outside-in; the final triple becomes the center part 2b
/// (d=0, c=0), the innermost pair (b+2c, b) (d=0, c>0), or (b, b+2c) (d=1).
Composition triples_to_composition(const TripleSeq& triples);

/// Inverse reading, pairing parts outside-in. Requires an even total and
/// mod-2 palindromicity.
TripleSeq composition_to_triples(const Composition& sigma);

Composition word_to_composition(const TernaryWord& word, FamilyTag family);

struct WordFamily {
  TernaryWord word;
  FamilyTag family;
};

WordFamily composition_to_word(const Composition& sigma);

/// The 2n <-> 2n+1 parity companion: grow/shrink the center by one.
Composition lift_parity(const Composition& sigma);
Composition drop_parity(const Composition& sigma);

} // namespace palcomp
