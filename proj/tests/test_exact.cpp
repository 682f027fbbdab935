#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corepart/exact.hpp"

using namespace corepart;

namespace {
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}
QuadraticNumber random_quad(std::mt19937& rng, const BigInt& D) {
  return {random_rational(rng), random_rational(rng), D};
}
}  // namespace

TEST_CASE("binomial and powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(-1, 2), std::invalid_argument);
  CHECK(int_pow(BigInt(2), 10) == 1024);
  CHECK(int_pow(BigInt(7), 0) == 1);
  CHECK(int_pow(BigInt(0), 0) == 1);
  CHECK(rat_pow(Rational(1, 2), 3) == Rational(1, 8));
}

TEST_CASE("quadratic field axioms on random samples") {
  std::mt19937 rng(12345);
  const BigInt D = 5;
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_quad(rng, D);
    auto y = random_quad(rng, D);
    auto z = random_quad(rng, D);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - y) + y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK(x.norm() == (x * x.conjugate()).rational_part());
    CHECK((x * x.conjugate()).surd_part() == 0);
  }
}

TEST_CASE("quadratic field specifics") {
  const BigInt D = 5;
  QuadraticNumber alpha(Rational(1, 2), Rational(1, 2), D);  // (1+sqrt5)/2
  CHECK(alpha * alpha == QuadraticNumber(Rational(3, 2), Rational(1, 2), D));
  CHECK(alpha * alpha == alpha + QuadraticNumber::from_rational(1, D));
  CHECK(alpha.norm() == Rational(-1));
  CHECK(alpha.inverse() == QuadraticNumber(Rational(-1, 2), Rational(1, 2), D));
  // formal square discriminant stays formal
  QuadraticNumber formal(Rational(1), Rational(1), 9);
  CHECK(formal.surd_part() == 1);
  CHECK(formal.normalize_if_square() == QuadraticNumber(Rational(4), Rational(0), 9));
  CHECK_THROWS_AS(alpha + formal, std::invalid_argument);
}

TEST_CASE("polynomials") {
  Poly p({1, 2, 3});        // 1 + 2q + 3q^2
  Poly q({0, -1});          // -q
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK((p * q).coeffs() == std::vector<Rational>{0, -1, -2, -3});
  CHECK(p.eval(Rational(2)) == 17);
  CHECK(p.pow(0) == Poly::constant(1));
  CHECK((p - p).is_zero());
  CHECK(Poly({0, 0, Rational(0)}).is_zero());
  CHECK(Poly::monomial(Rational(5), 3).coeffs() == std::vector<Rational>{0, 0, 0, 5});
}

TEST_CASE("series expansion of 1/(1-q-q^2) gives Fibonacci") {
  auto s = rational_expand(Poly::constant(1), Poly({1, -1, -1}), 5);
  CHECK(s.coeffs() == std::vector<Rational>{1, 1, 2, 3, 5, 8});
}

TEST_CASE("expand round-trips against the denominator") {
  Poly numer({2, 0, 1});
  Poly denom({1, -3, 0, 5});
  auto s = rational_expand(numer, denom, 12);
  // multiply back and compare with numer up to the order
  TruncatedSeries d = TruncatedSeries::from_poly(denom, 12);
  TruncatedSeries back = s * d;
  for (std::size_t i = 0; i <= 12; ++i) CHECK(back.coeff(i) == numer.coeff(i));
  CHECK_THROWS_AS(rational_expand(numer, Poly({0, 1}), 3), std::domain_error);
}
