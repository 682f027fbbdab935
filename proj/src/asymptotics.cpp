#include "corepart/asymptotics.hpp"

#include <sstream>

namespace corepart {

Decimal to_decimal(const Rational& r) {
  return Decimal(numerator(r)) / Decimal(denominator(r));
}

Decimal to_decimal(const QuadraticNumber& x) {
  Decimal root = sqrt(Decimal(x.discriminant()));
  return to_decimal(x.rational_part()) + to_decimal(x.surd_part()) * root;
}

bool RatioTrace::error_strictly_decreasing() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (abs(points[i].ratio - 1) >= abs(points[i - 1].ratio - 1)) return false;
  return true;
}

bool RatioTrace::differences_shrinking() const {
  for (std::size_t i = 2; i < points.size(); ++i)
    if (abs(points[i].ratio - points[i - 1].ratio) >
        abs(points[i - 1].ratio - points[i - 2].ratio))
      return false;
  return true;
}

Decimal RatioTrace::last_error() const {
  if (points.empty()) throw std::logic_error("RatioTrace: empty trace");
  return abs(points.back().ratio - 1);
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

void check_increasing(const std::vector<long long>& list, const char* who) {
  for (std::size_t i = 1; i < list.size(); ++i)
    if (list[i] <= list[i - 1])
      throw std::invalid_argument(std::string(who) + ": parameter list must be increasing");
}

}  // namespace

RatioTrace moment_ratio_in_n(Family family, long long d, int k,
                             const std::vector<long long>& nList) {
  check_increasing(nList, "moment_ratio_in_n");
  RatioTrace trace;
  const bool golden = (d == 1 && family == Family::Plus);
  for (long long n : nList) {
    MomentResult mr = moment(family, d, n, k);
    Rational prediction = rat_pow(Rational(n), static_cast<std::uint64_t>(2 * k));
    if (golden) prediction /= rat_pow(Rational(10), static_cast<std::uint64_t>(k));
    Decimal ratio = to_decimal(mr.expectation / prediction);
    trace.points.push_back({n, rational_str(mr.expectation), rational_str(prediction), ratio});
  }
  return trace;
}

RatioTrace moment_ratio_in_d(Family family, long long n, int k,
                             const std::vector<long long>& dList) {
  if (n < 2) throw std::invalid_argument("moment_ratio_in_d: need n >= 2");
  check_increasing(dList, "moment_ratio_in_d");
  RatioTrace trace;
  for (long long d : dList) {
    MomentResult mr = moment(family, d, n, k);
    Rational prediction = rat_pow(Rational(d), static_cast<std::uint64_t>(2 * k));
    Decimal ratio = to_decimal(mr.expectation / prediction);
    trace.points.push_back({d, rational_str(mr.expectation), rational_str(prediction), ratio});
  }
  return trace;
}

RatioTrace g_ratio_check(int a, int b, const std::vector<long long>& nList) {
  check_increasing(nList, "g_ratio_check");
  RatioTrace trace;
  const BigInt D = 5;
  const QuadraticNumber alpha(Rational(1, 2), Rational(1, 2), D);  // golden ratio
  const QuadraticNumber sqrt5 = QuadraticNumber::sqrt_disc(D);
  GTable table;
  for (long long n : nList) {
    BigInt g = g_dp({Family::Plus, 1, 0, a, b, n}, table);
    // prediction: 2^{-a} 5^{-(a+b+1)/2} n^{2a+b} alpha^{n+2-a-b}
    QuadraticNumber pred = quad_pow(sqrt5, static_cast<std::uint64_t>(a + b + 1)).inverse();
    pred = pred * QuadraticNumber::from_rational(
                      rat_pow(Rational(1, 2), static_cast<std::uint64_t>(a)) *
                          rat_pow(Rational(n), static_cast<std::uint64_t>(2 * a + b)),
                      D);
    long long e = n + 2 - a - b;
    QuadraticNumber alpha_pow = e >= 0 ? quad_pow(alpha, static_cast<std::uint64_t>(e))
                                       : quad_pow(alpha, static_cast<std::uint64_t>(-e)).inverse();
    pred = pred * alpha_pow;
    Decimal ratio = Decimal(g) / to_decimal(pred);
    trace.points.push_back({n, g.str(), pred.str(), ratio});
  }
  return trace;
}

}  // namespace corepart
