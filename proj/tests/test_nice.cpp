#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "corepart/moments.hpp"
#include "corepart/nice.hpp"

using namespace corepart;

TEST_CASE("validation of the two nice conditions") {
  CHECK_NOTHROW(NiceSubset(3, 4, {2, 0, 3, 0}));
  CHECK_THROWS_AS(NiceSubset(3, 4, {1, 1, 0, 0}), std::invalid_argument);  // consecutive
  CHECK_THROWS_AS(NiceSubset(3, 4, {4, 0, 0, 0}), std::invalid_argument);  // too tall
  CHECK_THROWS_AS(NiceSubset(3, 4, {1, 0, 0}), std::invalid_argument);     // wrong width
  CHECK(is_nice({{1, 1}, {2, 1}, {1, 3}}, 2, 3));
  CHECK_FALSE(is_nice({{2, 1}}, 2, 3));            // not downward-closed
  CHECK_FALSE(is_nice({{1, 1}, {1, 2}}, 2, 3));    // consecutive columns
}

TEST_CASE("grids of width 2 with d = 3") {
  auto plus = enumerate_nice_plus(3, 2);
  CHECK(plus.size() == 7);  // {}, 3 in column 1, 3 in column 2
  auto minus = enumerate_nice_minus(3, 2);
  CHECK(minus.size() == 6);
  for (const auto& I : minus) CHECK_FALSE(I.contains(3, 2));
}

TEST_CASE("counts satisfy the two-term recursions") {
  for (long long d = 1; d <= 3; ++d)
    for (long long n = 0; n <= 8; ++n) {
      CHECK(BigInt(enumerate_nice_plus(d, n).size()) == m_seq(d, n + 1));
      if (n >= 1) CHECK(BigInt(enumerate_nice_minus(d, n).size()) == n_seq(d, n + 1));
    }
  // d = 1 gives Fibonacci numbers
  std::vector<std::size_t> fib;
  for (long long n = 1; n <= 5; ++n) fib.push_back(enumerate_nice_plus(1, n).size());
  CHECK(fib == std::vector<std::size_t>{2, 3, 5, 8, 13});
}

TEST_CASE("sigma and cardinality on an explicit subset") {
  // heights (2,0): cells (1,1),(2,1); sigma_m = (0m+1) + (1m+1) = m+2
  NiceSubset I(3, 2, {2, 0});
  CHECK(I.cardinality() == 2);
  CHECK(I.sigma(3) == 5);
  CHECK(I.sigma(0) == 2);
  auto cells = I.cells();
  CHECK(cells == std::vector<GridCell>{{1, 1}, {2, 1}});
}

TEST_CASE("psi sends (6,4,2) to a column of height 3") {
  Partition p({6, 4, 2});
  // beta = {8,5,2} = {(i-1)*3 + 2 : i = 1..3}
  NiceSubset I = psi(p, 3);
  CHECK(I.heights() == std::vector<long long>{0, 3});
  CHECK(I.sigma(3) == 15);
  CHECK(psi_inverse(I, 3) == p);
}

TEST_CASE("psi is a size-respecting bijection") {
  for (long long d = 1; d <= 3; ++d)
    for (long long n = 2; n <= 6; ++n) {
      auto cores = enumerate_core(n, d * n + 1, true);
      std::set<NiceSubset> images;
      for (const auto& p : cores) {
        NiceSubset I = psi(p, n);
        CHECK(psi_inverse(I, n) == p);
        // |lambda| = sigma_n(I) - C(|I|,2) + ... checked via the beta identity
        BigInt y = I.cardinality();
        CHECK(BigInt(p.size()) == I.sigma(n) - y * (y - 1) / 2);
        images.insert(I);
      }
      CHECK(images.size() == cores.size());
      auto all = enumerate_nice_plus(d, n - 1);
      CHECK(images.size() == all.size());
    }
}

TEST_CASE("psi rejects non-core beta-sets") {
  CHECK_THROWS_AS(psi(Partition({3}), 3), std::invalid_argument);  // beta = {3}
}
