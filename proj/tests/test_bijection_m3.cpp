#include "doctest.h"
#include "palcomp/bijection_m3.hpp"
#include "palcomp/counting.hpp"
#include "palcomp/verification.hpp"

#include <stdexcept>

using namespace palcomp;

TEST_SUITE("bijection_m3") {

TEST_CASE("word parsing and domain") {
  CHECK(parse_two_one_word("1,1,2").parts() == std::vector<int>{1, 1, 2});
  CHECK(parse_two_one_word("2").total() == 2);
  CHECK_THROWS_AS(parse_two_one_word("1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_two_one_word(""), std::invalid_argument);
  CHECK_THROWS_AS(TwoOneWord({1, 0}), std::invalid_argument);

  CHECK(in_two_one_domain(parse_two_one_word("2,1,2")));
  CHECK(in_two_one_domain(parse_two_one_word("1,1,2,1")));
  CHECK_FALSE(in_two_one_domain(parse_two_one_word("1,2,1")));
  CHECK_FALSE(in_two_one_domain(parse_two_one_word("1")));
  CHECK_FALSE(in_two_one_domain(TwoOneWord()));
}

TEST_CASE("domain enumeration") {
  const auto d4 = two_one_domain(4);
  REQUIRE(d4.size() == 4); // 2 * fib(3)
  CHECK(format_two_one_word(d4[0]) == "1,1,1,1");
  CHECK(format_two_one_word(d4[1]) == "1,1,2");
  CHECK(format_two_one_word(d4[2]) == "2,1,1");
  CHECK(format_two_one_word(d4[3]) == "2,2");

  for (int n = 2; n <= 16; ++n)
    CHECK(BigInt(two_one_domain(n).size()) == 2 * fibonacci(n - 1));
  CHECK_THROWS_AS(two_one_domain(1), std::invalid_argument);
}

TEST_CASE("greedy segmentation") {
  // Maximal runs of the shape 1^o 2 (1 2)^(t-1); leftover ones trail.
  const auto d = m3_decompose(parse_two_one_word("1,1,1,2,2,1,1,2,1,2,1,1"));
  REQUIRE(d.segments.size() == 3);
  CHECK(format_two_one_word(d.segments[0]) == "1,1,1,2");
  CHECK(format_two_one_word(d.segments[1]) == "2");
  CHECK(format_two_one_word(d.segments[2]) == "1,1,2,1,2");
  CHECK(d.trailing_ones == 2);
  CHECK(format_m3_decomposition(d) == "(1,1,1,2)+(2)+(1,1,2,1,2)+(1,1)");

  const auto all_ones = m3_decompose(parse_two_one_word("1,1,1,1"));
  CHECK(all_ones.segments.empty());
  CHECK(all_ones.trailing_ones == 4);

  const auto chain = m3_decompose(parse_two_one_word("2,1,2,1,2"));
  REQUIRE(chain.segments.size() == 1);
  CHECK(format_two_one_word(chain.segments[0]) == "2,1,2,1,2");
  CHECK(chain.trailing_ones == 0);

  CHECK_THROWS_AS(m3_decompose(parse_two_one_word("1,2,1")), std::invalid_argument);
}

TEST_CASE("segment statistics and triples") {
  const SegmentStats s = segment_stats(parse_two_one_word("1,1,2,1,2"));
  CHECK(s.length == 5);
  CHECK(s.ones == 3);
  CHECK(s.twos == 2);
  CHECK(s.leading_ones == 2);

  // even run of leading ones: (o/2+1, 3(t-1), 0); odd run: ((o-1)/2, 0, 3t)
  CHECK(m3_segment_triple(parse_two_one_word("1,1,2,1,2")) == M3Triple{2, 3, 0});
  CHECK(m3_segment_triple(parse_two_one_word("1,1,1,2")) == M3Triple{1, 0, 3});
  CHECK(m3_segment_triple(parse_two_one_word("2")) == M3Triple{1, 0, 0});
  CHECK(m3_segment_triple(parse_two_one_word("2,1,2,1,2")) == M3Triple{1, 6, 0});
  CHECK(format_m3_triples({M3Triple{1, 0, 3}, M3Triple{1, 0, 0}}) == "(1,0,3),(1,0,0)");

  CHECK_THROWS_AS(m3_segment_triple(parse_two_one_word("1,1")), std::invalid_argument);
  CHECK_THROWS_AS(m3_segment_triple(parse_two_one_word("2,2")), std::invalid_argument);
}

TEST_CASE("assembly") {
  CHECK(format_composition(m3_assemble({M3Triple{1, 0, 3}, M3Triple{1, 0, 0},
                                        M3Triple{2, 3, 0}},
                                       2)) == "1,1,5,2,2,1,4");
  CHECK(format_composition(m3_assemble({}, 5)) == "5");
  CHECK(format_composition(m3_assemble({M3Triple{1, 6, 0}}, 0)) == "7,1");

  CHECK_THROWS_AS(m3_assemble({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(m3_assemble({M3Triple{0, 0, 3}}, 0), std::invalid_argument); // part c+d = 0
  CHECK_THROWS_AS(m3_assemble({M3Triple{1, 2, 0}}, 0), std::invalid_argument); // d not 3k
  CHECK_THROWS_AS(m3_assemble({M3Triple{1, 3, 3}}, 0), std::invalid_argument); // both sides
  CHECK_THROWS_AS(m3_assemble({M3Triple{1, 0, 0}}, -1), std::invalid_argument);
}

TEST_CASE("worked example round trip") {
  const TwoOneWord a = parse_two_one_word("1,1,1,2,2,1,1,2,1,2,1,1");
  const Composition b = m3_forward(a);
  CHECK(format_composition(b) == "1,1,5,2,2,1,4");
  CHECK(m3_inverse(b) == a);

  CHECK(format_composition(m3_forward(parse_two_one_word("2,1,2,1,2"))) == "7,1");
  CHECK(format_two_one_word(m3_inverse(parse_composition("1,6,1"))) == "2,1,1,1,1,1,1");
  CHECK(format_two_one_word(m3_inverse(parse_composition("8"))) == "1,1,1,1,1,1,1,1");
}

TEST_CASE("inverse domain errors") {
  CHECK_THROWS_AS(m3_inverse(parse_composition("1,2")), std::invalid_argument);
  CHECK_THROWS_AS(m3_inverse(parse_composition("1")), std::invalid_argument);
  CHECK_THROWS_AS(m3_forward(parse_two_one_word("1,2")), std::invalid_argument);
}

TEST_CASE("full sweep") {
  const PropertyCheck bij = check_mod3_bijection(14);
  INFO(bij.detail);
  CHECK(bij.passed);
  const PropertyCheck stats = check_mod3_statistics(12);
  INFO(stats.detail);
  CHECK(stats.passed);
}

} // TEST_SUITE
