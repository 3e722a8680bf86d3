#include "palcomp/golden_tables.hpp"

#include <algorithm>

#include "palcomp/bijection_m2.hpp"
#include "palcomp/bijection_m3.hpp"
#include "palcomp/oracle.hpp"

namespace palcomp {
namespace {

constexpr Table1Row kTable1[] = {
    {"000", "plain", "(1,0,0),(1,0,0),(1,0,0),(1,0,0)", "1,1,1,2,1,1,1", "1,1,1,3,1,1,1"},
    {"000", "marked", "(1,0,0),(1,0,0),(1,0,0),(1,0,1)", "1,1,1,1,1,1,1,1", "1,1,1,1,1,1,1,1,1"},
    {"001", "plain", "(1,0,0),(1,0,0),(2,0,0)", "1,1,4,1,1", "1,1,5,1,1"},
    {"001", "marked", "(1,0,0),(1,0,0),(2,0,1)", "1,1,2,2,1,1", "1,1,2,1,2,1,1"},
    {"002", "plain", "(1,0,0),(1,0,0),(1,1,0)", "1,1,3,1,1,1", "1,1,3,1,1,1,1"},
    {"002", "marked", "(1,0,0),(1,0,0),(1,1,1)", "1,1,1,3,1,1", "1,1,1,1,3,1,1"},
    {"010", "plain", "(1,0,0),(2,0,0),(1,0,0)", "1,2,2,2,1", "1,2,3,2,1"},
    {"010", "marked", "(1,0,0),(2,0,0),(1,0,1)", "1,2,1,1,2,1", "1,2,1,1,1,2,1"},
    {"011", "plain", "(1,0,0),(3,0,0)", "1,6,1", "1,7,1"},
    {"011", "marked", "(1,0,0),(3,0,1)", "1,3,3,1", "1,3,1,3,1"},
    {"012", "plain", "(1,0,0),(2,1,0)", "1,4,2,1", "1,4,1,2,1"},
    {"012", "marked", "(1,0,0),(2,1,1)", "1,2,4,1", "1,2,1,4,1"},
    {"020", "plain", "(1,0,0),(1,1,0),(1,0,0)", "1,3,2,1,1", "1,3,3,1,1"},
    {"020", "marked", "(1,0,0),(1,1,0),(1,0,1)", "1,3,1,1,1,1", "1,3,1,1,1,1,1"},
    {"021", "plain", "(1,0,0),(1,1,1),(1,0,0)", "1,1,2,3,1", "1,1,3,3,1"},
    {"021", "marked", "(1,0,0),(1,1,1),(1,0,1)", "1,1,1,1,3,1", "1,1,1,1,1,3,1"},
    {"022", "plain", "(1,0,0),(1,2,0)", "1,5,1,1", "1,5,1,1,1"},
    {"022", "marked", "(1,0,0),(1,2,1)", "1,1,5,1", "1,1,1,5,1"},
    {"100", "plain", "(2,0,0),(1,0,0),(1,0,0)", "2,1,2,1,2", "2,1,3,1,2"},
    {"100", "marked", "(2,0,0),(1,0,0),(1,0,1)", "2,1,1,1,1,2", "2,1,1,1,1,1,2"},
    {"101", "plain", "(2,0,0),(2,0,0)", "2,4,2", "2,5,2"},
    {"101", "marked", "(2,0,0),(2,0,1)", "2,2,2,2", "2,2,1,2,2"},
    {"102", "plain", "(2,0,0),(1,1,0)", "2,3,1,2", "2,3,1,1,2"},
    {"102", "marked", "(2,0,0),(1,1,1)", "2,1,3,2", "2,1,1,3,2"},
    {"110", "plain", "(3,0,0),(1,0,0)", "3,2,3", "3,3,3"},
    {"110", "marked", "(3,0,0),(1,0,1)", "3,1,1,3", "3,1,1,1,3"},
    {"111", "plain", "(4,0,0)", "8", "9"},
    {"111", "marked", "(4,0,1)", "4,4", "4,1,4"},
    {"112", "plain", "(3,1,0)", "5,3", "5,1,3"},
    {"112", "marked", "(3,1,1)", "3,5", "3,1,5"},
    {"120", "plain", "(2,1,0),(1,0,0)", "4,2,2", "4,3,2"},
    {"120", "marked", "(2,1,0),(1,0,1)", "4,1,1,2", "4,1,1,1,2"},
    {"121", "plain", "(2,1,1),(1,0,0)", "2,2,4", "2,3,4"},
    {"121", "marked", "(2,1,1),(1,0,1)", "2,1,1,4", "2,1,1,1,4"},
    {"122", "plain", "(2,2,0)", "6,2", "6,1,2"},
    {"122", "marked", "(2,2,1)", "2,6", "2,1,6"},
    {"200", "plain", "(1,1,0),(1,0,0),(1,0,0)", "3,1,2,1,1", "3,1,3,1,1"},
    {"200", "marked", "(1,1,0),(1,0,0),(1,0,1)", "3,1,1,1,1,1", "3,1,1,1,1,1,1"},
    {"201", "plain", "(1,1,0),(2,0,0)", "3,4,1", "3,5,1"},
    {"201", "marked", "(1,1,0),(2,0,1)", "3,2,2,1", "3,2,1,2,1"},
    {"202", "plain", "(1,1,0),(1,1,0)", "3,3,1,1", "3,3,1,1,1"},
    {"202", "marked", "(1,1,0),(1,1,1)", "3,1,3,1", "3,1,1,3,1"},
    {"210", "plain", "(1,1,1),(1,0,0),(1,0,0)", "1,1,2,1,3", "1,1,3,1,3"},
    {"210", "marked", "(1,1,1),(1,0,0),(1,0,1)", "1,1,1,1,1,3", "1,1,1,1,1,1,3"},
    {"211", "plain", "(1,1,1),(2,0,0)", "1,4,3", "1,5,3"},
    {"211", "marked", "(1,1,1),(2,0,1)", "1,2,2,3", "1,2,1,2,3"},
    {"212", "plain", "(1,1,1),(1,1,0)", "1,3,1,3", "1,3,1,1,3"},
    {"212", "marked", "(1,1,1),(1,1,1)", "1,1,3,3", "1,1,1,3,3"},
    {"220", "plain", "(1,2,0),(1,0,0)", "5,2,1", "5,3,1"},
    {"220", "marked", "(1,2,0),(1,0,1)", "5,1,1,1", "5,1,1,1,1"},
    {"221", "plain", "(1,2,1),(1,0,0)", "1,2,5", "1,3,5"},
    {"221", "marked", "(1,2,1),(1,0,1)", "1,1,1,5", "1,1,1,1,5"},
    {"222", "plain", "(1,3,0)", "7,1", "7,1,1"},
    {"222", "marked", "(1,3,1)", "1,7", "1,1,7"},
};

// Source row 10 prints the image of (1,1,1,2,2,1) as (1,1,1,4), which sums to
// 7, not 8; the assembly rules force (1,1,1,1,4) and that value is stored.
constexpr Table2Row kTable2[] = {
    {"1,1,1,1,1,1,1,1", "(1,1,1,1,1,1,1,1)", "8"},
    {"1,1,2,1,1,1,1", "(1,1,2)+(1,1,1,1)", "2,4,2"},
    {"1,1,1,2,1,1,1", "(1,1,1,2)+(1,1,1)", "1,3,4"},
    {"1,1,1,1,2,1,1", "(1,1,1,1,2)+(1,1)", "3,2,3"},
    {"1,1,1,1,1,2,1", "(1,1,1,1,1,2)+(1)", "2,1,5"},
    {"1,1,1,1,1,1,2", "(1,1,1,1,1,1,2)", "4,4"},
    {"1,1,2,2,1,1", "(1,1,2)+(2)+(1,1)", "2,1,2,1,2"},
    {"1,1,2,1,2,1", "(1,1,2,1,2)+(1)", "5,1,2"},
    {"1,1,2,1,1,2", "(1,1,2)+(1,1,2)", "2,2,2,2"},
    {"1,1,1,2,2,1", "(1,1,1,2)+(2)+(1)", "1,1,1,1,4"},
    {"1,1,1,2,1,2", "(1,1,1,2,1,2)", "1,7"},
    {"1,1,1,1,2,2", "(1,1,1,1,2)+(2)", "3,1,1,3"},
    {"1,1,2,2,2", "(1,1,2)+(2)+(2)", "2,1,1,1,1,2"},
    {"2,1,1,1,1,1,1", "(2)+(1,1,1,1,1,1)", "1,6,1"},
    {"2,2,1,1,1,1", "(2)+(2)+(1,1,1,1)", "1,1,4,1,1"},
    {"2,1,2,1,1,1", "(2,1,2)+(1,1,1)", "4,3,1"},
    {"2,1,1,2,1,1", "(2)+(1,1,2)+(1,1)", "1,2,2,2,1"},
    {"2,1,1,1,2,1", "(2)+(1,1,1,2)+(1)", "1,1,1,4,1"},
    {"2,1,1,1,1,2", "(2)+(1,1,1,1,2)", "1,3,3,1"},
    {"2,2,2,1,1", "(2)+(2)+(2)+(1,1)", "1,1,1,2,1,1,1"},
    {"2,2,1,2,1", "(2)+(2,1,2)+(1)", "1,4,1,1,1"},
    {"2,2,1,1,2", "(2)+(2)+(1,1,2)", "1,1,2,2,1,1"},
    {"2,1,2,2,1", "(2,1,2)+(2)+(1)", "4,1,1,1,1"},
    {"2,1,2,1,2", "(2,1,2,1,2)", "7,1"},
    {"2,1,1,2,2", "(2)+(1,1,2)+(2)", "1,2,1,1,2,1"},
    {"2,2,2,2", "(2)+(2)+(2)+(2)", "1,1,1,1,1,1,1,1"},
};

void record(GoldenCheck& check, const std::string& where, const std::string& expected,
            const std::string& actual) {
  ++check.cells;
  if (expected == actual) return;
  ++check.mismatches;
  check.passed = false;
  if (check.first_mismatch.empty())
    check.first_mismatch = where + ": expected " + expected + ", got " + actual;
}

} // namespace

std::span<const Table1Row> table1_rows() { return kTable1; }
std::span<const Table2Row> table2_rows() { return kTable2; }

GoldenCheck verify_table1() {
  GoldenCheck check;
  for (const Table1Row& row : kTable1) {
    const TernaryWord word = parse_ternary_word(row.word);
    TripleSeq triples = word_to_triples(word);
    const bool marked = std::string_view(row.family) == "marked";
    if (marked) triples = mark_last(std::move(triples));
    const std::string where = std::string(row.word) + "/" + row.family;
    record(check, where + "/triples", row.triples, format_triples(triples));
    const Composition even = triples_to_composition(triples);
    record(check, where + "/even", row.comp_even, format_composition(even));
    record(check, where + "/odd", row.comp_odd, format_composition(lift_parity(even)));
  }
  return check;
}

GoldenCheck verify_table2() {
  GoldenCheck check;
  std::vector<Composition> images;
  for (const Table2Row& row : kTable2) {
    const TwoOneWord word = parse_two_one_word(row.word);
    const std::string where = std::string("a=") + row.word;
    record(check, where + "/decomposition", row.decomposition,
           format_m3_decomposition(m3_decompose(word)));
    const Composition image = m3_forward(word);
    record(check, where + "/image", row.image, format_composition(image));
    images.push_back(image);
  }
  // The word column must be exactly the domain of 8, and the images must
  // exactly cover the mod-3 palindromic compositions of 8.
  const auto domain = two_one_domain(8);
  ++check.cells;
  bool domain_ok = domain.size() == std::size(kTable2);
  if (domain_ok) {
    std::vector<TwoOneWord> fixture_words;
    for (const Table2Row& row : kTable2) fixture_words.push_back(parse_two_one_word(row.word));
    auto key = [](const TwoOneWord& w) { return w.parts(); };
    std::vector<std::vector<int>> lhs, rhs;
    for (const auto& w : fixture_words) lhs.push_back(key(w));
    for (const auto& w : domain) rhs.push_back(key(w));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    domain_ok = lhs == rhs;
  }
  if (!domain_ok) {
    ++check.mismatches;
    check.passed = false;
    if (check.first_mismatch.empty())
      check.first_mismatch = "fixture word column differs from the domain of 8";
  }
  ++check.cells;
  std::vector<Composition> expected_images = oracle_list(8, Modulus::finite(3));
  std::sort(images.begin(), images.end());
  std::sort(expected_images.begin(), expected_images.end());
  if (images != expected_images) {
    ++check.mismatches;
    check.passed = false;
    if (check.first_mismatch.empty())
      check.first_mismatch = "image column does not cover the mod-3 palindromic compositions of 8";
  }
  return check;
}

} // namespace palcomp
