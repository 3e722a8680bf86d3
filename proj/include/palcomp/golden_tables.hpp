#pragma once

#include <span>
#include <string>

namespace palcomp {

/// One family line of the mod-2 fixture: a ternary word with its triple
/// sequence and its images of 8 and 9 (n = 4).
struct Table1Row {
  const char* word;
  const char* family; // "plain" | "marked"
  const char* triples;
  const char* comp_even; // composition of 2n
  const char* comp_odd;  // composition of 2n+1
};

/// One row of the mod-3 fixture: a domain word of 8, its decomposition, and
/// its image.
struct Table2Row {
  const char* word;
  const char* decomposition;
  const char* image;
};

std::span<const Table1Row> table1_rows(); // 54 lines (27 words x 2 families)
std::span<const Table2Row> table2_rows(); // 26 rows

struct GoldenCheck {
  bool passed = true;
  int cells = 0;
  int mismatches = 0;
  std::string first_mismatch;
};

/// Regenerates every cell from the algorithms and diffs against the fixture.
GoldenCheck verify_table1();
GoldenCheck verify_table2();

} // namespace palcomp
