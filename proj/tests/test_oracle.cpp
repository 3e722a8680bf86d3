#include "doctest.h"
#include "palcomp/oracle.hpp"

#include <string>
#include <vector>

using namespace palcomp;

TEST_SUITE("oracle") {

TEST_CASE("canonical enumeration order") {
  auto stream = enumerate_compositions(3);
  std::vector<std::string> seen;
  while (auto c = stream.next()) seen.push_back(format_composition(*c));
  CHECK(seen == std::vector<std::string>{"3", "2,1", "1,2", "1,1,1"});

  auto one = enumerate_compositions(1);
  CHECK(one.total() == 1);
  CHECK(*one.next() == Composition({1}));
  CHECK_FALSE(one.next().has_value());
}

TEST_CASE("stream size is 2^(n-1)") {
  for (int n = 1; n <= 12; ++n) {
    auto stream = enumerate_compositions(n);
    CHECK(stream.total() == std::uint64_t(1) << (n - 1));
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    CHECK(count == std::uint64_t(1) << (n - 1));
  }
}

TEST_CASE("reference counts") {
  CHECK(oracle_count(8, Modulus::finite(2)) == 54);
  CHECK(oracle_count(8, Modulus::finite(3)) == 26);
  CHECK(oracle_count(8, Modulus::finite(1)) == 128);
  CHECK(oracle_count(8, Modulus::infinity()) == 16);
  CHECK(oracle_count_palindromes(6) == 8);
  CHECK(oracle_count(1, Modulus::finite(5)) == 1);
}

TEST_CASE("list agrees with count and is filtered") {
  const Modulus three = Modulus::finite(3);
  const auto list = oracle_list(8, three);
  CHECK(BigInt(list.size()) == oracle_count(8, three));
  for (const auto& sigma : list) {
    CHECK(sigma.total() == 8);
    CHECK(is_palindromic_mod(sigma, three));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(enumerate_compositions(0), std::invalid_argument);
  CHECK_THROWS_AS(oracle_count(-2, Modulus::finite(1)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_count(30, Modulus::finite(2)), OracleCapError);
  CHECK_THROWS_AS(oracle_count(30, Modulus::finite(2), 25), OracleCapError);
  CHECK_NOTHROW(enumerate_compositions(26, 26)); // a raised cap admits larger n
  CHECK_THROWS_AS(oracle_count(5, Modulus::finite(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle_count(5, Modulus::finite(2), 63), std::invalid_argument);
  CHECK_THROWS_WITH(oracle_count(30, Modulus::finite(2)),
                    "n=30 exceeds the oracle cap 24; raise --oracle-cap to override");
}

} // TEST_SUITE
