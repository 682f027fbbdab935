#pragma once

#include <map>
#include <tuple>

#include "corepart/exact.hpp"
#include "corepart/report.hpp"

namespace corepart {

enum class Family { Plus, Minus };

inline const char* to_string(Family f) { return f == Family::Plus ? "plus" : "minus"; }

/// M_d: counts of (n, dn+1)-core partitions with distinct parts.
/// M_d(-1) = 0, M_d(0) = 1, M_d(n) = M_d(n-1) + d M_d(n-2).
BigInt m_seq(long long d, long long n);

/// N_d: counts of (n, dn-1)-core partitions with distinct parts.
/// N_d(1) = 1, N_d(2) = d, N_d(n) = N_d(n-1) + d N_d(n-2).
BigInt n_seq(long long d, long long n);

/// Verifies the five sequence identities relating M_d, N_d and the roots
/// of x^2 - x - d for 1 <= n <= nmax. The two M-from-N conversions are
/// singular at d = 2 and get reported as skipped there.
SuiteReport seq_identities_check(long long d, long long nmax);

struct GKey {
  Family family = Family::Plus;
  long long d = 1;
  long long m = 0;
  int a = 0;
  int b = 0;
  long long n = 0;

  auto tie() const { return std::tie(family, d, m, a, b, n); }
  bool operator<(const GKey& o) const { return tie() < o.tie(); }
};

/// Memo for G values; a key is computed at most once.
using GTable = std::map<GKey, BigInt>;

/// G by direct enumeration of nice subsets: sum of sigma_m(I)^a |I|^b.
/// Throws BudgetExceeded if the family size exceeds `budget`.
BigInt g_bruteforce(const GKey& key, std::size_t budget = 1000000);

/// G by the two-term recursion with the binomial coefficient functions;
/// memoizes every intermediate value in `table`.
BigInt g_dp(const GKey& key, GTable& table);

/// Convenience wrapper with a throwaway table.
BigInt g_dp(const GKey& key);

/// Multinomial expansion of (sigma - y^2/2 + y/2)^k into
/// sum of coeff * sigma^a * y^b, sorted by (a, b).
std::vector<std::tuple<int, int, Rational>> expand_size_power(int k);

/// k-th power sum of partition sizes over C_{n,dn+1} (plus) or
/// C_{n,dn-1} (minus), computed through the G functions at m = n.
BigInt power_sum(Family family, long long d, long long n, int k, GTable& table);
BigInt power_sum(Family family, long long d, long long n, int k);

struct MomentResult {
  BigInt power_sum;
  BigInt count;
  Rational expectation;
};

MomentResult moment(Family family, long long d, long long n, int k);

/// Closed-form expectation of X_{n,dn+1}.
Rational closed_expectation_plus(long long d, long long n);

/// Closed-form total size over C_{n,dn-1}; always an integer.
Rational closed_total_minus(long long d, long long n);

/// Closed-form expectation of X_{n,dn-1}; singular at d = 2
/// (throws std::domain_error("singular case d=2; use closed_total_minus/N_d")).
Rational closed_expectation_minus(long long d, long long n);

enum class SmallG { A1B0, A0B1, A0B2 };

/// Explicit M_d-basis formulas for G^+ at (a,b) in {(1,0),(0,1),(0,2)}.
BigInt closed_g_small(long long d, long long m, long long n, SmallG which);

/// Polynomiality in d via exact forward finite differences: the
/// (bound+1)-th difference of the power sum (in d, at d = 1..dmax) must
/// vanish, where bound = 2k + floor(n/2).
SuiteReport power_sum_degree_check(Family family, long long n, int k, int dmax);

/// Degree of G as a polynomial of d: bound 2a+b+floor((n+1)/2) is a hard
/// check; exactness of the degree (nonzero leading difference) is reported
/// as a skip when it fails, never as a failure.
SuiteReport g_degree_check(Family family, long long m, long long n, int a, int b, int dmax);

/// Fits power_sum(n) = A(n) M_d(n) + B(n) M_d(n+1) with deg A, deg B <= 2k
/// from nFit consecutive n values and verifies at nVerify further ones.
SuiteReport basis_fit_check(Family family, long long d, int k, int nFit, int nVerify);

}  // namespace corepart
