#include "corepart/genfunc.hpp"

#include <sstream>

namespace corepart {

Poly psi_denominator(long long d) {
  return Poly({Rational(1), Rational(-1), Rational(-d)});
}

TruncatedSeries psi_series_dp(long long d, long long m, int a, int b, std::size_t order) {
  GTable table;
  std::vector<Rational> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    coeffs.emplace_back(g_dp({Family::Plus, d, m, a, b, static_cast<long long>(n)}, table));
  return TruncatedSeries(std::move(coeffs), order);
}

namespace {

// Sum of numer_i / base^i cleared to the common denominator base^maxpow.
TruncatedSeries expand_sum(const std::vector<std::pair<Poly, int>>& terms, const Poly& base,
                           std::size_t order) {
  int maxpow = 0;
  for (const auto& [numer, pow] : terms) maxpow = std::max(maxpow, pow);
  Poly total;
  for (const auto& [numer, pow] : terms)
    total = total + numer * base.pow(static_cast<std::uint64_t>(maxpow - pow));
  return rational_expand(total, base.pow(static_cast<std::uint64_t>(maxpow)), order);
}

}  // namespace

TruncatedSeries psi_closed(long long d, long long m, PsiForm which, std::size_t order) {
  const Poly base = psi_denominator(d);
  const Rational c2 = Rational(binomial(d + 1, 2));
  const Rational c3 = Rational(binomial(d + 1, 3));
  const Rational q3 = Rational(binomial(2 * d + 2, 3)) / 4;
  const Poly one_plus_dq({Rational(1), Rational(d)});
  std::vector<std::pair<Poly, int>> terms;
  switch (which) {
    case PsiForm::A0B0:
      terms = {{one_plus_dq, 1}};
      break;
    case PsiForm::A1B0:
      terms = {{Poly::monomial(c3 * m - c2, 1), 2},
               {Poly({Rational(0), c2 * 2, -c2}), 3}};
      break;
    case PsiForm::A0B1:
      terms = {{Poly::monomial(c2, 1), 1},
               {Poly::monomial(c2, 2) * one_plus_dq, 2}};
      break;
    case PsiForm::A0B2:
      terms = {{Poly::monomial(q3, 1), 1},
               {Poly::monomial(2 * c2 * c2, 3) + Poly::monomial(q3, 2) * one_plus_dq, 2},
               {Poly::monomial(2 * c2 * c2, 4) * one_plus_dq, 3}};
      break;
  }
  return expand_sum(terms, base, order);
}

TruncatedSeries inv_power_expand(long long d, int k, std::size_t order, ExpandMethod method) {
  if (d < 1 || k < 1) throw std::invalid_argument("inv_power_expand: need d, k >= 1");
  const Poly base = psi_denominator(d);
  switch (method) {
    case ExpandMethod::Direct:
      return rational_expand(Poly::constant(1), base.pow(static_cast<std::uint64_t>(k)), order);

    case ExpandMethod::PartialFraction: {
      const BigInt D = 1 + 4 * d;
      const QuadraticNumber x(Rational(1, 2), Rational(1, 2), D);
      const QuadraticNumber y(Rational(1, 2), Rational(-1, 2), D);
      const QuadraticNumber sqrtD = QuadraticNumber::sqrt_disc(D);
      std::vector<Rational> coeffs(order + 1);
      for (std::size_t n = 0; n <= order; ++n) {
        QuadraticNumber acc = QuadraticNumber::from_rational(0, D);
        for (int i = 1; i <= k; ++i) {
          QuadraticNumber front = QuadraticNumber::from_rational(
              Rational(binomial(2 * k - 1 - i, static_cast<std::uint64_t>(k - 1)) *
                       int_pow(d, static_cast<std::uint64_t>(k - i))),
              D);
          // (1+4d)^{-(2k-i)/2}; odd exponents stay in the field as
          // sqrt(D)^{-(2k-i)}.
          QuadraticNumber scale =
              quad_pow(sqrtD, static_cast<std::uint64_t>(2 * k - i)).inverse();
          QuadraticNumber powers =
              quad_pow(x, n + static_cast<std::uint64_t>(i)) +
              (i % 2 == 0 ? quad_pow(y, n + static_cast<std::uint64_t>(i))
                          : -quad_pow(y, n + static_cast<std::uint64_t>(i)));
          QuadraticNumber binom = QuadraticNumber::from_rational(
              Rational(binomial(static_cast<long long>(n) + i - 1,
                                static_cast<std::uint64_t>(i - 1))),
              D);
          acc = acc + front * scale * binom * powers;
        }
        if (!acc.is_rational())
          throw std::logic_error("inv_power_expand: surd part did not cancel");
        coeffs[n] = acc.rational_part();
      }
      return TruncatedSeries(std::move(coeffs), order);
    }

    case ExpandMethod::MBasis: {
      if (k > 3) throw std::invalid_argument("mbasis expansion only available for k <= 3");
      const Rational f = Rational(4 * d + 1);
      std::vector<Rational> coeffs(order + 1);
      for (std::size_t i = 0; i <= order; ++i) {
        const long long n = static_cast<long long>(i);
        if (k == 1) {
          coeffs[i] = Rational(m_seq(d, n));
        } else if (k == 2) {
          coeffs[i] = (Rational(n + 1) * Rational(m_seq(d, n + 2)) +
                       Rational(n + 3) * Rational(d) * Rational(m_seq(d, n))) /
                      f;
        } else {
          coeffs[i] = (Rational(3 * d) * Rational(n + 1) / (f * f) +
                       Rational(binomial(n + 2, 2)) / f) *
                          Rational(m_seq(d, n + 2)) +
                      Rational(3) * Rational(d) * Rational(d) * Rational(n + 3) / (f * f) *
                          Rational(m_seq(d, n));
        }
      }
      return TruncatedSeries(std::move(coeffs), order);
    }
  }
  throw std::invalid_argument("inv_power_expand: unknown method");
}

SuiteReport gf_structure_check(long long d, long long m, int a, int b,
                                      std::size_t order) {
  if (a + b > 3) throw std::invalid_argument("gf_structure_check: a+b budget is 3");
  SuiteReport report{"gf-structure"};
  const int power = 2 * a + b + 1;
  const std::size_t cutoff = static_cast<std::size_t>(2 * a + b + 3);
  const Poly base_pow = psi_denominator(d).pow(static_cast<std::uint64_t>(power));
  const int samples = 2 * a + b + 3;  // enough points to difference away degree 2a+b

  std::vector<std::vector<Rational>> products;  // per m sample: coefficients 0..order
  bool tail_zero = true;
  for (int s = 0; s < samples; ++s) {
    TruncatedSeries psi = psi_series_dp(d, m + s, a, b, order);
    TruncatedSeries prod = TruncatedSeries::from_poly(base_pow, order) * psi;
    for (std::size_t i = cutoff + 1; i <= order; ++i)
      if (prod.coeff(i) != 0) tail_zero = false;
    products.push_back(prod.coeffs());
  }
  std::ostringstream id;
  id << "structure-d" << d << "-a" << a << "-b" << b;
  report.add(id.str() + "-polynomial-tail", tail_zero,
             "zero coefficients beyond index " + std::to_string(cutoff),
             tail_zero ? "zero" : "nonzero");

  // m-degree of each q-coefficient is at most 2a+b: differences of order
  // 2a+b+1 across the m samples must vanish.
  bool mdeg_ok = true;
  for (std::size_t qi = 0; qi <= std::min<std::size_t>(cutoff, order); ++qi) {
    std::vector<Rational> vals;
    for (const auto& p : products) vals.push_back(p[qi]);
    for (int round = 0; round < 2 * a + b + 1; ++round) {
      for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
      vals.pop_back();
    }
    for (const auto& v : vals)
      if (v != 0) mdeg_ok = false;
  }
  report.add(id.str() + "-m-degree<=" + std::to_string(2 * a + b), mdeg_ok);
  return report;
}

}  // namespace corepart
