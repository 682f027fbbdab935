#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corepart/partition.hpp"

using namespace corepart;

TEST_CASE("hook lengths and beta-set of (6,3,3,2)") {
  Partition p({6, 3, 3, 2});
  auto hooks = hook_lengths(p);
  CHECK(hooks == std::vector<std::vector<long long>>{
                     {9, 8, 6, 3, 2, 1}, {5, 4, 2}, {4, 3, 1}, {2, 1}});
  CHECK(beta_set(p) == BetaSet{9, 5, 4, 2});
  CHECK(p.size() == 14);
  CHECK(size_from_beta(beta_set(p)) == 14);
}

TEST_CASE("beta-set round-trips") {
  for (auto parts : std::vector<std::vector<long long>>{
           {}, {1}, {5, 3, 1}, {6, 3, 3, 2}, {10, 10, 4, 2, 1, 1}}) {
    Partition p(parts);
    CHECK(partition_from_beta(beta_set(p)) == p);
  }
  CHECK_THROWS_AS(partition_from_beta(BetaSet{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_beta(BetaSet{-1}), std::invalid_argument);
}

TEST_CASE("distinct parts criterion matches its beta-set form") {
  for (auto parts : std::vector<std::vector<long long>>{
           {}, {1}, {2, 1}, {2, 2}, {5, 3, 1}, {5, 3, 3}, {6, 4, 2}, {4, 4, 4}}) {
    Partition p(parts);
    CHECK(has_distinct_parts(p) == has_distinct_parts_beta(p));
  }
  CHECK(has_distinct_parts(Partition({5, 3, 1})));
  CHECK_FALSE(has_distinct_parts(Partition({5, 3, 3})));
}

TEST_CASE("abacus condition agrees with hook lengths") {
  std::vector<Partition> sample = {Partition(), Partition({1}), Partition({3, 1}),
                                   Partition({6, 4, 2}), Partition({6, 3, 3, 2}),
                                   Partition({5, 3, 1}), Partition({7, 5, 2, 1})};
  for (const auto& p : sample)
    for (long long t = 1; t <= 12; ++t) CHECK(is_t_core(p, t) == is_t_core_hooks(p, t));
}

TEST_CASE("(3,4)-cores") {
  auto all = enumerate_core(3, 4, false);
  CHECK(all.size() == 5);
  long long total = 0, mx = 0;
  for (const auto& p : all) {
    total += p.size();
    mx = std::max(mx, p.size());
  }
  CHECK(mx == 5);                      // the staircase (3,2) has size 5
  CHECK(Rational(total, 5) == 2);      // average size (t1+t2+1)(t1-1)(t2-1)/24 = 2

  auto distinct = enumerate_core(3, 4, true);
  CHECK(distinct.size() == 3);         // empty, (1), (2)
}

TEST_CASE("semigroup enumeration matches the size-bounded oracle") {
  for (auto [t1, t2] : std::vector<std::pair<long long, long long>>{
           {2, 3}, {3, 4}, {2, 5}, {3, 5}, {4, 5}, {3, 7}}) {
    for (bool distinct : {false, true}) {
      auto fast = enumerate_core(t1, t2, distinct);
      auto slow = enumerate_core_by_size(t1, t2, distinct);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("core counts match the two classical formulas") {
  for (long long t1 = 2; t1 <= 5; ++t1)
    for (long long t2 = t1 + 1; t1 + t2 <= 12; ++t2) {
      if (std::gcd(t1, t2) != 1) continue;
      auto all = enumerate_core(t1, t2, false);
      // Anderson: C(t1+t2, t1)/(t1+t2)
      CHECK(BigInt(all.size()) == binomial(t1 + t2, t1) / (t1 + t2));
      long long total = 0, mx = 0;
      for (const auto& p : all) {
        total += p.size();
        mx = std::max(mx, p.size());
      }
      CHECK(mx == (t1 * t1 - 1) * (t2 * t2 - 1) / 24);
      CHECK(Rational(total) / Rational(all.size()) ==
            Rational((t1 + t2 + 1) * (t1 - 1) * (t2 - 1), 24));
    }
}

TEST_CASE("input validation and budget") {
  CHECK_THROWS_AS(enumerate_core(2, 4, false), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_core(4, 5, false, 10), BudgetExceeded);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}
