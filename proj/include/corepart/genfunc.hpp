#pragma once

#include "corepart/exact.hpp"
#include "corepart/moments.hpp"
#include "corepart/report.hpp"

namespace corepart {

/// Numerator / denominator pair; denominator must have a nonzero constant
/// term so the quotient is expandable as a power series.
struct RationalFunction {
  Poly numerator;
  Poly denominator;

  TruncatedSeries expand(std::size_t order) const {
    return rational_expand(numerator, denominator, order);
  }
};

/// 1 - q - d q^2, the common denominator of every generating function here.
Poly psi_denominator(long long d);

/// Series of sum_n G^+_{d,m,a,b}(n) q^n computed coefficient by coefficient
/// from the recursion.
TruncatedSeries psi_series_dp(long long d, long long m, int a, int b, std::size_t order);

/// The four (a,b) instances with explicit closed forms.
enum class PsiForm { A0B0, A1B0, A0B1, A0B2 };

/// Builds the explicit rational-function combination for the given instance
/// and expands it; agrees with psi_series_dp term by term.
TruncatedSeries psi_closed(long long d, long long m, PsiForm which, std::size_t order);

enum class ExpandMethod { Direct, PartialFraction, MBasis };

/// Expansion of 1/(1-q-dq^2)^k by the chosen method. The partial-fraction
/// route works in Q(sqrt(1+4d)) and throws std::logic_error if a surd part
/// fails to cancel; MBasis is only available for k in {1,2,3}.
TruncatedSeries inv_power_expand(long long d, int k, std::size_t order, ExpandMethod method);

/// Checkable consequence of the generating-function structure theorem:
/// (1-q-dq^2)^{2a+b+1} * Psi_{d,m',a,b} is a polynomial in q (tail zero
/// beyond index 2a+b+3 up to the tested order) whose coefficients have
/// degree <= 2a+b in m, tested by sampling m' = m..m+2a+b+2.
SuiteReport gf_structure_check(long long d, long long m, int a, int b, std::size_t order);

}  // namespace corepart
