#include "doctest.h"
#include "palcomp/composition.hpp"

#include <stdexcept>

using namespace palcomp;

TEST_SUITE("composition") {

TEST_CASE("modulus parsing") {
  CHECK(Modulus::parse("5").value() == 5);
  CHECK(Modulus::parse("inf").is_infinite());
  CHECK(Modulus::parse("infinity").is_infinite());
  CHECK(Modulus::parse("2").str() == "2");
  CHECK(Modulus::infinity().str() == "inf");
  CHECK_THROWS_AS(Modulus::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::parse("-3"), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::parse("3x"), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::finite(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::infinity().value(), std::invalid_argument);
}

TEST_CASE("congruence") {
  const Modulus two = Modulus::finite(2);
  CHECK(two.congruent(1, 3));
  CHECK(two.congruent(4, 2));
  CHECK_FALSE(two.congruent(1, 2));
  CHECK(Modulus::finite(1).congruent(7, 1));
  CHECK(Modulus::infinity().congruent(5, 5));
  CHECK_FALSE(Modulus::infinity().congruent(5, 7));
}

TEST_CASE("composition basics") {
  const Composition c({3, 1, 2});
  CHECK(c.total() == 6);
  CHECK(c.length() == 3);
  CHECK(c.part(0) == 3);
  CHECK(c.reversed() == Composition({2, 1, 3}));
  CHECK(c.reversed().reversed() == c);
  CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
  CHECK(Composition().empty());
  CHECK(Composition(std::vector<std::int64_t>{}).total() == 0);
}

TEST_CASE("palindromicity predicates") {
  CHECK(is_palindrome(Composition({1, 2, 1})));
  CHECK_FALSE(is_palindrome(Composition({1, 2})));
  CHECK(is_palindrome(Composition({4})));

  // 1,5,3 pairs 1 with 3 (both odd) around the free center 5.
  CHECK(is_palindromic_mod(Composition({1, 5, 3}), Modulus::finite(2)));
  CHECK_FALSE(is_palindromic_mod(Composition({2, 1}), Modulus::finite(2)));
  CHECK(is_palindromic_mod(Composition({2, 1}), Modulus::finite(1)));
  CHECK(is_palindromic_mod(Composition({1, 4, 7}), Modulus::finite(3)));
  CHECK_FALSE(is_palindromic_mod(Composition({1, 4, 7}), Modulus::infinity()));
  CHECK(is_palindromic_mod(Composition({3, 1, 3}), Modulus::infinity()));
}

TEST_CASE("every exact palindrome is palindromic mod anything") {
  const Composition sigma({2, 5, 5, 2});
  for (int m = 1; m <= 9; ++m) CHECK(is_palindromic_mod(sigma, Modulus::finite(m)));
  CHECK(is_palindromic_mod(sigma, Modulus::infinity()));
}

TEST_CASE("parsing round trip") {
  CHECK(parse_composition("3,1,2") == Composition({3, 1, 2}));
  CHECK(parse_composition(" 3 , 1 ,\t2 ") == Composition({3, 1, 2}));
  CHECK(parse_composition("8") == Composition({8}));
  CHECK(format_composition(parse_composition("1,2,2,6,1")) == "1,2,2,6,1");
  CHECK(format_composition(Composition()) == "");
}

TEST_CASE("parsing errors name the offending token") {
  CHECK_THROWS_WITH_AS(parse_composition("1,x,2"), "bad composition part #2: 'x'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_composition("1,,2"), "bad composition part #2: ''",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_composition("1,0"), "composition part #2 must be positive",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("  "), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition("1,2,"), std::invalid_argument);
}

} // TEST_SUITE
