#include "doctest.h"
#include "palcomp/series.hpp"

#include <stdexcept>

using namespace palcomp;

namespace {

TruncatedSeries poly(std::vector<BigInt> low, int order) {
  return TruncatedSeries(std::move(low), order);
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("construction pads and truncates") {
  const TruncatedSeries s = poly({1, 2}, 4);
  CHECK(s.coeffs == std::vector<BigInt>{1, 2, 0, 0, 0});
  const TruncatedSeries t = poly({1, 2, 3, 4}, 1);
  CHECK(t.coeffs == std::vector<BigInt>{1, 2});
}

TEST_CASE("ring operations") {
  const TruncatedSeries a = poly({1, 1}, 6);  // 1 + q
  const TruncatedSeries b = poly({1, -1}, 6); // 1 - q
  CHECK(series_mul(a, b).coeffs == std::vector<BigInt>{1, 0, -1, 0, 0, 0, 0});
  CHECK(series_add(a, b).coeffs == std::vector<BigInt>{2, 0, 0, 0, 0, 0, 0});
  CHECK(series_sub(a, b).coeffs == std::vector<BigInt>{0, 2, 0, 0, 0, 0, 0});
}

TEST_CASE("multiplication truncates to the smaller order") {
  const TruncatedSeries a = poly({0, 1}, 3);
  const TruncatedSeries b = poly({0, 1}, 9);
  CHECK(series_mul(a, b).order == 3);
  CHECK(series_mul(a, b).coeffs == std::vector<BigInt>{0, 0, 1, 0});
}

TEST_CASE("reciprocal") {
  const TruncatedSeries geom = series_reciprocal(poly({1, -1}, 5)); // 1/(1-q)
  CHECK(geom.coeffs == std::vector<BigInt>{1, 1, 1, 1, 1, 1});

  const TruncatedSeries s = poly({1, 3, -2, 7}, 8);
  const TruncatedSeries prod = series_mul(s, series_reciprocal(s));
  CHECK(prod.coeffs == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  const TruncatedSeries neg = series_reciprocal(poly({-1, 1}, 3)); // 1/(q-1)
  CHECK(neg.coeffs == std::vector<BigInt>{-1, -1, -1, -1});

  CHECK_THROWS_AS(series_reciprocal(poly({0, 1}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(series_reciprocal(poly({2, 1}, 3)), std::invalid_argument);
}

TEST_CASE("rational expansion") {
  RationalGF geom;
  geom.num = {1};
  geom.den = {1, -2}; // 1/(1-2q)
  CHECK(expand(geom, 6).coeffs == std::vector<BigInt>{1, 2, 4, 8, 16, 32, 64});

  RationalGF fib;
  fib.num = {0, 1};
  fib.den = {1, -1, -1}; // q/(1-q-q^2)
  CHECK(expand(fib, 8).coeffs == std::vector<BigInt>{0, 1, 1, 2, 3, 5, 8, 13, 21});

  RationalGF bad;
  bad.num = {1};
  bad.den = {2, 1};
  CHECK_THROWS_AS(expand(bad, 3), std::invalid_argument);
  bad.den.clear();
  CHECK_THROWS_AS(expand(bad, 3), std::invalid_argument);
}

TEST_CASE("numerator shorter or longer than the order") {
  RationalGF gf;
  gf.num = {0, 0, 0, 0, 0, 1}; // q^5 alone, order below its degree
  gf.den = {1};
  CHECK(expand(gf, 3).coeffs == std::vector<BigInt>{0, 0, 0, 0});
  CHECK(expand(gf, 5).coeffs == std::vector<BigInt>{0, 0, 0, 0, 0, 1});
}

} // TEST_SUITE
