#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "corepart/moments.hpp"

namespace corepart {

/// 100 decimal digits of working precision; conversions from exact values
/// happen only at the final comparison step.
using Decimal = boost::multiprecision::cpp_dec_float_100;

Decimal to_decimal(const Rational& r);
Decimal to_decimal(const QuadraticNumber& x);

struct RatioPoint {
  long long param = 0;
  std::string exact_value;      // the exact quantity, as a rational string
  std::string predicted_value;  // the leading-term prediction
  Decimal ratio;                // exact / predicted
};

struct RatioTrace {
  std::vector<RatioPoint> points;

  /// True when |ratio - 1| strictly decreases along the trace.
  bool error_strictly_decreasing() const;
  /// True when successive ratio differences shrink (stabilization).
  bool differences_shrinking() const;
  Decimal last_error() const;
};

/// E[X^k] / n^{2k} along nList; for d = 1 in the plus family the ratio is
/// additionally scaled by 10^k so it tends to 1.
RatioTrace moment_ratio_in_n(Family family, long long d, int k,
                             const std::vector<long long>& nList);

/// E[X^k] / d^{2k} along dList at fixed n.
RatioTrace moment_ratio_in_d(Family family, long long n, int k,
                             const std::vector<long long>& dList);

/// G^+_{1,0,a,b}(n) against its golden-ratio leading term
/// 2^{-a} 5^{-(a+b+1)/2} n^{2a+b} alpha^{n+2-a-b}; ratio tends to 1.
RatioTrace g_ratio_check(int a, int b, const std::vector<long long>& nList);

}  // namespace corepart
