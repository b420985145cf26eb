#include "catpart/counting.hpp"
#include "catpart/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace catpart;
using namespace catpart::counting;

TEST_CASE("binomial agrees with Pascal's triangle") {
  const auto rows = oracle::pascal(80);
  for (int n = 0; n <= 80; ++n) {
    for (int r = -1; r <= n + 1; ++r) CHECK(binomial(n, r) == oracle::choose(rows, n, r));
  }
}

TEST_CASE("binomial small values") {
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), Error);
}

TEST_CASE("no overflow at n = 1000") {
  const auto c = catalan(1000);
  CHECK(c > 0);
  CHECK(c * 1001 == binomial(2000, 1000));
  CHECK(to_decimal(c).size() == 598);
}

TEST_CASE("catalan agrees with the convolution recurrence") {
  const auto c = oracle::segner(100);
  for (int n = 0; n <= 100; ++n) CHECK(catalan(n) == c[n]);
  CHECK(to_decimal(catalan(4)) == "14");
  CHECK(to_decimal(catalan(0)) == "1");
}

TEST_CASE("ballot numbers count forests of plane trees") {
  CHECK(to_decimal(ballot(2, 1)) == "5");
  for (int m = 1; m <= 20; ++m) CHECK(ballot(1, m - 1) == m);
  for (int ell = 1; ell <= 12; ++ell) {
    CHECK(ballot(ell, 0) == catalan(ell));
    for (int m = 1; m <= 7; ++m) CHECK(ballot(ell, m - 1) == oracle::forest_count(m, ell));
  }
}

TEST_CASE("generalized catalan with k = 2") {
  for (int n = 0; n <= 15; ++n) {
    CHECK(generalized_catalan(2, 1, n) == catalan(n));
    for (int g = 1; g <= 6; ++g) CHECK(generalized_catalan(2, g, n) == oracle::forest_count(g, n));
  }
  for (int k = 1; k <= 4; ++k) {
    for (int g = 1; g <= 4; ++g) CHECK(generalized_catalan(k, g, 0) == 1);
  }
  // k-ary trees: C_{3,1}(n) = binomial(3n, n) / (2n + 1)
  CHECK(to_decimal(generalized_catalan(3, 1, 4)) == "55");
}

TEST_CASE("arguments outside the formulas' domains are rejected") {
  CHECK_THROWS_AS(catalan(-1), Error);
  CHECK_THROWS_AS(ballot(-1, 0), Error);
}
