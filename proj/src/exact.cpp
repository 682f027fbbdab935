#include "corepart/exact.hpp"

#include <sstream>

namespace corepart {

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (BigInt(k) > n) return 0;
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - BigInt(i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

BigInt int_pow(const BigInt& base, std::uint64_t e) {
  BigInt result = 1, b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational rat_pow(const Rational& base, std::uint64_t e) {
  Rational result = 1, b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational surd_part, BigInt discriminant)
    : rat_(std::move(rational_part)), surd_(std::move(surd_part)), disc_(std::move(discriminant)) {
  if (disc_ <= 0) throw std::invalid_argument("QuadraticNumber: discriminant must be positive");
}

QuadraticNumber QuadraticNumber::from_rational(Rational r, BigInt discriminant) {
  return {std::move(r), Rational(0), std::move(discriminant)};
}

QuadraticNumber QuadraticNumber::sqrt_disc(BigInt discriminant) {
  return {Rational(0), Rational(1), std::move(discriminant)};
}

void QuadraticNumber::check_same_field(const QuadraticNumber& o) const {
  if (disc_ != o.disc_)
    throw std::invalid_argument("QuadraticNumber: mixed discriminants " + disc_.str() + " and " +
                                o.disc_.str());
}

QuadraticNumber QuadraticNumber::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("QuadraticNumber: inverse of zero-norm element");
  return {rat_ / n, -surd_ / n, disc_};
}

QuadraticNumber QuadraticNumber::normalize_if_square() const {
  BigInt root = boost::multiprecision::sqrt(disc_);
  if (root * root != disc_) return *this;
  return {rat_ + surd_ * Rational(root), Rational(0), disc_};
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  check_same_field(o);
  return {rat_ + o.rat_, surd_ + o.surd_, disc_};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
  check_same_field(o);
  return {rat_ - o.rat_, surd_ - o.surd_, disc_};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  check_same_field(o);
  return {rat_ * o.rat_ + Rational(disc_) * surd_ * o.surd_, rat_ * o.surd_ + surd_ * o.rat_,
          disc_};
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
  return disc_ == o.disc_ && rat_ == o.rat_ && surd_ == o.surd_;
}

std::string QuadraticNumber::str() const {
  std::ostringstream out;
  out << rat_ << " + " << surd_ << "*sqrt(" << disc_ << ")";
  return out.str();
}

QuadraticNumber quad_pow(const QuadraticNumber& x, std::uint64_t e) {
  QuadraticNumber result = QuadraticNumber::from_rational(1, x.discriminant());
  QuadraticNumber b = x;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t power) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = Poly::constant(1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
  c_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t order) {
  return TruncatedSeries(p.coeffs(), order);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t ord = std::min(order(), o.order());
  std::vector<Rational> v(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) v[i] = c_[i] + o.c_[i];
  return TruncatedSeries(std::move(v), ord);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  std::size_t ord = std::min(order(), o.order());
  std::vector<Rational> v(ord + 1);
  for (std::size_t i = 0; i <= ord; ++i) v[i] = c_[i] - o.c_[i];
  return TruncatedSeries(std::move(v), ord);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t ord = std::min(order(), o.order());
  std::vector<Rational> v(ord + 1, Rational(0));
  for (std::size_t i = 0; i <= ord; ++i)
    for (std::size_t j = 0; i + j <= ord && j <= o.order(); ++j) v[i + j] += c_[i] * o.c_[j];
  return TruncatedSeries(std::move(v), ord);
}

TruncatedSeries rational_expand(const Poly& numer, const Poly& denom, std::size_t order) {
  if (denom.coeff(0) == 0) throw std::domain_error("non-invertible series");
  const Rational d0 = denom.coeff(0);
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = numer.coeff(n);
    for (std::size_t j = 1; j <= n && static_cast<int>(j) <= denom.degree(); ++j)
      acc -= denom.coeff(j) * out[n - j];
    out[n] = acc / d0;
  }
  return TruncatedSeries(std::move(out), order);
}

}  // namespace corepart
