#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corepart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// C(n, k) for integer n (possibly negative upper index is not needed here).
BigInt binomial(const BigInt& n, std::uint64_t k);

BigInt int_pow(const BigInt& base, std::uint64_t e);
Rational rat_pow(const Rational& base, std::uint64_t e);

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)).
/// D is carried formally: no simplification happens when D is a perfect
/// square unless normalize_if_square() is called explicitly.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational rational_part, Rational surd_part, BigInt discriminant);

  static QuadraticNumber from_rational(Rational r, BigInt discriminant);
  static QuadraticNumber sqrt_disc(BigInt discriminant);  // sqrt(D) itself

  const Rational& rational_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  const BigInt& discriminant() const { return disc_; }

  bool is_rational() const { return surd_ == 0; }
  bool is_zero() const { return rat_ == 0 && surd_ == 0; }

  QuadraticNumber conjugate() const { return {rat_, -surd_, disc_}; }
  Rational norm() const { return rat_ * rat_ - Rational(disc_) * surd_ * surd_; }
  QuadraticNumber inverse() const;

  /// Collapses the surd part into the rational part when D is a perfect
  /// square. Optional; arithmetic never calls this.
  QuadraticNumber normalize_if_square() const;

  QuadraticNumber operator-() const { return {-rat_, -surd_, disc_}; }
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  QuadraticNumber operator/(const QuadraticNumber& o) const;
  bool operator==(const QuadraticNumber& o) const;

  std::string str() const;

 private:
  void check_same_field(const QuadraticNumber& o) const;

  Rational rat_;
  Rational surd_;
  BigInt disc_;
};

QuadraticNumber quad_pow(const QuadraticNumber& x, std::uint64_t e);

/// Dense univariate polynomial in q over the rationals. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(Rational c);
  static Poly monomial(Rational c, std::size_t power);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly pow(std::uint64_t e) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Formal power series truncated at a fixed order: coefficients 0..order.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);
  static TruncatedSeries from_poly(const Poly& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(std::size_t i) const { return c_.at(i); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

/// First order+1 coefficients of numer/denom as a formal power series.
/// Throws std::domain_error("non-invertible series") when the constant
/// term of denom is zero.
TruncatedSeries rational_expand(const Poly& numer, const Poly& denom, std::size_t order);

}  // namespace corepart
