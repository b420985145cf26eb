#include "catpart/error.hpp"
#include "catpart/partition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace catpart;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<BoundedPartition>& list) {
  std::vector<std::vector<int>> out;
  for (const auto& mu : list) out.push_back(mu.parts());
  return out;
}

}  // namespace

TEST_CASE("partition construction rejects malformed sequences") {
  CHECK_THROWS_AS(Partition({}), Error);
  CHECK_THROWS_AS(Partition({2, 3}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(BoundedPartition({4, 1}, 3), Error);
  CHECK_THROWS_AS(SquarePartition(std::vector<int>{3, 2, 2}), Error);
  CHECK_THROWS_AS(SquarePartition(std::vector<int>{2, 2, 1}), Error);
  const Partition p({3, 1, 1});
  CHECK(p(1) == 3);
  CHECK(p(3) == 1);
  CHECK_THROWS_AS(p(0), Error);
  CHECK_THROWS_AS(p(4), Error);
  CHECK(p.to_string() == "3,1,1");
}

TEST_CASE("gamma is an order-reversing involution") {
  CHECK(gamma(5, 1) == 5);
  CHECK(gamma(5, 3) == 3);
  CHECK_THROWS_AS(gamma(5, 6), Error);
  for (int m = 1; m <= 9; ++m) {
    for (int i = 1; i <= m; ++i) {
      CHECK(gamma(m, gamma(m, i)) == i);
      if (i < m) CHECK(gamma(m, i) > gamma(m, i + 1));
    }
  }
}

TEST_CASE("tau on worked values") {
  CHECK(tau(BoundedPartition({3, 1, 1}, 3)).parts() == std::vector<int>{3, 3, 1});
  CHECK(tau(BoundedPartition({3, 2, 1}, 3)).parts() == std::vector<int>{3, 2, 1});
  CHECK(tau(BoundedPartition({2, 2, 2, 2}, 4)).parts() == std::vector<int>{3, 3, 3, 3});
  CHECK(tau(BoundedPartition({11, 11, 11, 11, 10, 9, 9, 9, 9, 9, 9, 7, 7, 3}, 14)).parts() ==
        std::vector<int>{12, 8, 8, 6, 6, 6, 6, 6, 6, 5, 4, 4, 4, 4});
  // the bound matters
  CHECK(tau(BoundedPartition({1}, 1)).parts() == std::vector<int>{1});
  CHECK(tau(BoundedPartition({1}, 3)).parts() == std::vector<int>{3});
}

TEST_CASE("tau is an involution on every P^{n,k} and a pointwise composite with gamma") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 6; ++k) {
      std::set<std::vector<int>> images;
      for (const auto& mu : enumerate_pnk(n, k)) {
        const auto t = tau(mu);
        CHECK(tau(t) == mu);
        CHECK(t.bound() == k);
        for (int i = 1; i <= n; ++i) CHECK(t(i) == gamma(k, mu(gamma(n, i))));
        images.insert(t.parts());
      }
      CHECK(images.size() == oracle::all_pnk(n, k).size());
    }
  }
}

TEST_CASE("enumerate_pnk matches the odometer oracle in canonical order") {
  const auto rows = oracle::pascal(20);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 6; ++k) {
      auto expected = oracle::all_pnk(n, k);
      std::sort(expected.begin(), expected.end(), std::greater<>());
      const auto got = parts_of(enumerate_pnk(n, k));
      CHECK(got == expected);
      CHECK(got.size() == oracle::choose(rows, n + k - 1, n));
    }
  }
  CHECK(enumerate_pnk(4, 4).size() == 35);
  CHECK(enumerate_pnk(2, 3).front().parts() == std::vector<int>{3, 3});
}

TEST_CASE("enumerate_square is the square slice of P^{k,k}") {
  CHECK(enumerate_square(1).size() == 1);
  CHECK(enumerate_square(2).size() == 1);
  CHECK(enumerate_square(3).size() == 3);
  CHECK(enumerate_square(4).size() == 10);
  for (int k = 1; k <= 7; ++k) {
    std::vector<std::vector<int>> filtered;
    auto all = oracle::all_pnk(k, k);
    std::sort(all.begin(), all.end(), std::greater<>());
    for (const auto& p : all) {
      if (p.front() == k && p.back() == 1) filtered.push_back(p);
    }
    std::vector<std::vector<int>> got;
    for (const auto& lambda : enumerate_square(k)) got.push_back(lambda.parts());
    CHECK(got == filtered);
  }
}

TEST_CASE("tau permutes square partitions and self-duality is tau-fixedness") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& lambda : enumerate_square(k)) {
      const auto dual = tau(lambda);
      CHECK(is_square(dual.value()));
      CHECK(is_self_dual(lambda) == (dual == lambda));
    }
  }
  CHECK(is_self_dual(SquarePartition(std::vector<int>{3, 2, 1})));
  CHECK_FALSE(is_self_dual(SquarePartition(std::vector<int>{3, 1, 1})));
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_pnk(10, 10, 1000), Error);
  try {
    enumerate_pnk(10, 10, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
  CHECK(enumerate_pnk(3, 3, 10).size() == 10);
}

TEST_CASE("parse_partition") {
  CHECK(parse_partition("7, 6,5 ,3").parts() == std::vector<int>{7, 6, 5, 3});
  CHECK_THROWS_AS(parse_partition("3,x"), Error);
  CHECK_THROWS_AS(parse_partition(""), Error);
  CHECK_THROWS_AS(parse_partition("1,2"), Error);
}
