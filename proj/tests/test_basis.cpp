#include <doctest.h>

#include "capelli/prng.hpp"
#include "capelli/weight_basis.hpp"

using namespace capelli;

TEST_CASE("enumerate_basis examples") {
  // M=N=2, m=n=(1,1): the two permutation matrices
  const auto b = enumerate_basis(2, 2, {1, 1}, {1, 1});
  REQUIRE(b.dim() == 2);
  CHECK(b.tables[0] == std::vector<int>{0, 1, 1, 0});
  CHECK(b.tables[1] == std::vector<int>{1, 0, 0, 1});

  // M=2, N=3, m=(2,1), n=(1,1,1): row 2 places a single 1 in one of 3 columns
  CHECK(enumerate_basis(2, 3, {2, 1}, {1, 1, 1}).dim() == 3);
  CHECK(enumerate_basis(3, 2, {1, 1, 1}, {2, 1}).dim() == 3);

  // single-cell case
  const auto single = enumerate_basis(1, 1, {5}, {5});
  REQUIRE(single.dim() == 1);
  CHECK(single.tables[0] == std::vector<int>{5});

  CHECK_THROWS_AS(enumerate_basis(2, 2, {1, 1}, {2, 1}), WeightMismatch);
  CHECK_THROWS_AS(enumerate_basis(2, 2, {1}, {1}), WeightMismatch);
}

TEST_CASE("tables are lex-sorted and indexed") {
  const auto b = enumerate_basis(2, 2, {2, 2}, {2, 2});
  CHECK(b.dim() == 3);
  for (int i = 1; i < b.dim(); ++i)
    CHECK(b.tables[static_cast<size_t>(i - 1)] < b.tables[static_cast<size_t>(i)]);
  for (int i = 0; i < b.dim(); ++i) CHECK(b.index.at(b.tables[static_cast<size_t>(i)]) == i);
}

TEST_CASE("counting oracle agrees with enumeration on random margins") {
  SplitMix64 rng(314);
  for (int t = 0; t < 30; ++t) {
    const int M = 1 + static_cast<int>(rng.next_in(0, 2));
    const int N = 1 + static_cast<int>(rng.next_in(0, 2));
    std::vector<int> m(static_cast<size_t>(M)), n(static_cast<size_t>(N));
    int total = 0;
    for (auto& v : m) {
      v = static_cast<int>(rng.next_in(0, 2));
      total += v;
    }
    // distribute the same total over n
    int left = total;
    for (size_t i = 0; i + 1 < n.size(); ++i) {
      n[i] = static_cast<int>(rng.next_in(0, left));
      left -= n[i];
    }
    n.back() = left;
    const auto b = enumerate_basis(M, N, m, n);
    CHECK(static_cast<long>(b.dim()) == count_tables(m, n));
  }
  // acceptance-case dimensions
  CHECK(count_tables({1, 1}, {1, 1}) == 2);
  CHECK(count_tables({2, 1}, {1, 1, 1}) == 3);
  CHECK(count_tables({1, 1, 1}, {2, 1}) == 3);
}

TEST_CASE("auto-small weights") {
  std::vector<int> m, n;
  auto_small_weights(2, 2, m, n);
  CHECK(m == std::vector<int>{1, 1});
  CHECK(n == std::vector<int>{1, 1});
  auto_small_weights(2, 3, m, n);
  CHECK(m == std::vector<int>{2, 1});
  CHECK(n == std::vector<int>{1, 1, 1});
  auto_small_weights(3, 2, m, n);
  CHECK(m == std::vector<int>{1, 1, 1});
  CHECK(n == std::vector<int>{2, 1});
  // the cap shrinks the balanced total until the basis fits
  auto_small_weights(5, 5, m, n, 10);
  CHECK(count_tables(m, n) <= 10);
  CHECK(m == std::vector<int>{1, 1, 1, 0, 0});
  auto_small_weights(5, 5, m, n);  // uncapped: k = 5
  CHECK(count_tables(m, n) == 120);
}
