#include "doctest.h"
#include "palcomp/bijection_m2.hpp"
#include "palcomp/verification.hpp"

#include <stdexcept>

using namespace palcomp;

TEST_SUITE("bijection_m2") {

TEST_CASE("word parsing") {
  CHECK(parse_ternary_word("01221").symbols() == std::vector<int>{0, 1, 2, 2, 1});
  CHECK(parse_ternary_word("").symbols().empty());
  CHECK(parse_ternary_word("").n() == 1);
  CHECK(format_ternary_word(parse_ternary_word("2021")) == "2021");
  CHECK_THROWS_AS(parse_ternary_word("013"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ternary_word("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(TernaryWord({0, 5}), std::invalid_argument);
}

TEST_CASE("word scan") {
  // 0 opens a fresh triple, 2 widens the pair, 1 grows the small part --
  // except right after a 2, where it closes the triple with the flip flag.
  CHECK(format_triples(word_to_triples(parse_ternary_word("01221"))) ==
        "(1,0,0),(2,2,1),(1,0,0)");
  CHECK(format_triples(word_to_triples(parse_ternary_word(""))) == "(1,0,0)");
  CHECK(format_triples(word_to_triples(parse_ternary_word("111"))) == "(4,0,0)");
  CHECK(format_triples(word_to_triples(parse_ternary_word("212"))) ==
        "(1,1,1),(1,1,0)");
  CHECK(format_triples(word_to_triples(parse_ternary_word("2121"))) ==
        "(1,1,1),(1,1,1),(1,0,0)");
  CHECK(format_triples(word_to_triples(parse_ternary_word("000"))) ==
        "(1,0,0),(1,0,0),(1,0,0),(1,0,0)");
}

TEST_CASE("marking") {
  TripleSeq marked = mark_last(word_to_triples(parse_ternary_word("111")));
  CHECK(format_triples(marked) == "(4,0,1)");
  CHECK_THROWS_AS(mark_last(std::move(marked)), std::invalid_argument);
  CHECK_THROWS_AS(mark_last(TripleSeq{}), std::invalid_argument);
}

TEST_CASE("triples to composition") {
  const TernaryWord w = parse_ternary_word("01221");
  CHECK(format_composition(word_to_composition(w, FamilyTag::plain)) == "1,2,2,6,1");
  CHECK(format_composition(word_to_composition(w, FamilyTag::marked)) == "1,2,1,1,6,1");

  CHECK(format_composition(word_to_composition(parse_ternary_word("111"), FamilyTag::plain)) ==
        "8");
  CHECK(format_composition(word_to_composition(parse_ternary_word("111"), FamilyTag::marked)) ==
        "4,4");
  // The empty word covers both compositions of 2.
  CHECK(format_composition(word_to_composition(parse_ternary_word(""), FamilyTag::plain)) == "2");
  CHECK(format_composition(word_to_composition(parse_ternary_word(""), FamilyTag::marked)) ==
        "1,1");
}

TEST_CASE("malformed triples are rejected") {
  CHECK_THROWS_AS(triples_to_composition(TripleSeq{}), std::invalid_argument);
  CHECK_THROWS_AS(triples_to_composition({Triple{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(triples_to_composition({Triple{1, -1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(triples_to_composition({Triple{1, 0, 2}}), std::invalid_argument);
  // A non-final flip needs a widened pair (it encodes a 1 after a 2).
  CHECK_THROWS_AS(triples_to_composition({Triple{1, 0, 1}, Triple{1, 0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(triples_to_word({Triple{2, 1, 1}}), std::invalid_argument);
}

TEST_CASE("inverse reading") {
  const WordFamily wf = composition_to_word(parse_composition("8"));
  CHECK(format_ternary_word(wf.word) == "111");
  CHECK(wf.family == FamilyTag::plain);

  const WordFamily wf2 = composition_to_word(parse_composition("1,2,2,6,1"));
  CHECK(format_ternary_word(wf2.word) == "01221");
  CHECK(wf2.family == FamilyTag::plain);

  const WordFamily wf3 = composition_to_word(parse_composition("4,4"));
  CHECK(format_ternary_word(wf3.word) == "111");
  CHECK(wf3.family == FamilyTag::marked);

  CHECK_THROWS_AS(composition_to_triples(parse_composition("3")), std::invalid_argument);
  CHECK_THROWS_AS(composition_to_triples(parse_composition("1,3,2")), std::invalid_argument);
}

TEST_CASE("parity companion") {
  CHECK(format_composition(lift_parity(parse_composition("1,2,2,6,1"))) == "1,2,3,6,1");
  CHECK(format_composition(lift_parity(parse_composition("4,4"))) == "4,1,4");
  CHECK(format_composition(lift_parity(parse_composition("2"))) == "3");
  CHECK(drop_parity(parse_composition("4,1,4")) == parse_composition("4,4"));
  CHECK(drop_parity(parse_composition("3")) == parse_composition("2"));
  CHECK_THROWS_AS(lift_parity(parse_composition("3")), std::invalid_argument);
  CHECK_THROWS_AS(drop_parity(parse_composition("4,4")), std::invalid_argument);
}

TEST_CASE("full sweep") {
  const PropertyCheck bij = check_mod2_bijection(7);
  INFO(bij.detail);
  CHECK(bij.passed);
  const PropertyCheck lift = check_mod2_parity_lift(7);
  INFO(lift.detail);
  CHECK(lift.passed);
}

} // TEST_SUITE
