#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corepart/asymptotics.hpp"

using namespace corepart;

TEST_CASE("decimal conversions") {
  CHECK(to_decimal(Rational(1, 4)) == Decimal("0.25"));
  QuadraticNumber alpha(Rational(1, 2), Rational(1, 2), 5);
  Decimal a = to_decimal(alpha);
  CHECK(abs(a * a - a - 1) < Decimal("1e-90"));
}

TEST_CASE("mean size over the golden family approaches n^2/10") {
  auto trace = moment_ratio_in_n(Family::Plus, 1, 1, {20, 40, 80, 160});
  CHECK(trace.error_strictly_decreasing());
  CHECK(trace.last_error() < Decimal("0.1"));
}

TEST_CASE("second moment approaches n^4/100") {
  auto trace = moment_ratio_in_n(Family::Plus, 1, 2, {20, 40, 80});
  CHECK(trace.error_strictly_decreasing());
}

TEST_CASE("ratio in d stabilizes at fixed n") {
  auto trace = moment_ratio_in_d(Family::Plus, 6, 1, {4, 8, 16, 32});
  CHECK(trace.differences_shrinking());
}

TEST_CASE("G against its golden-ratio leading term") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    auto trace = g_ratio_check(a, b, {40, 80, 160});
    CHECK(trace.error_strictly_decreasing());
  }
}

TEST_CASE("trace input validation") {
  CHECK_THROWS_AS(moment_ratio_in_n(Family::Plus, 1, 1, {10, 10}), std::invalid_argument);
  CHECK_THROWS_AS(moment_ratio_in_d(Family::Plus, 1, 1, {2, 3}), std::invalid_argument);
}
