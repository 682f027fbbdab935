#include "corepart/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "corepart/asymptotics.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/moments.hpp"
#include "corepart/nice.hpp"
#include "corepart/partition.hpp"

namespace corepart {

namespace {

std::string rstr(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

SuiteReport suite_identities() {
  SuiteReport report{"identities"};
  for (long long d = 1; d <= 5; ++d) report.merge(seq_identities_check(d, 20));

  // First six values of both sequences as polynomials of d.
  bool table_ok = true;
  for (long long d = 1; d <= 4; ++d) {
    const BigInt D(d);
    const BigInt n_expected[6] = {1, D, 2 * D, D * D + 2 * D, 3 * D * D + 2 * D,
                                  D * D * D + 5 * D * D + 2 * D};
    const BigInt m_expected[6] = {1,
                                  D + 1,
                                  2 * D + 1,
                                  D * D + 3 * D + 1,
                                  3 * D * D + 4 * D + 1,
                                  D * D * D + 6 * D * D + 5 * D + 1};
    for (long long n = 1; n <= 6; ++n) {
      table_ok = table_ok && n_seq(d, n) == n_expected[n - 1];
      table_ok = table_ok && m_seq(d, n) == m_expected[n - 1];
    }
  }
  report.add("table1-polynomials-d1..4-n1..6", table_ok);
  return report;
}

SuiteReport suite_oracle() {
  SuiteReport report{"oracle"};

  // DP against direct enumeration on a desk-scale grid.
  bool dp_ok = true;
  for (Family fam : {Family::Plus, Family::Minus}) {
    GTable table;
    for (long long d = 1; d <= 3; ++d)
      for (long long m = 0; m <= 2; ++m)
        for (int a = 0; a <= 2; ++a)
          for (int b = 0; a + b <= 2; ++b)
            for (long long n = 0; n <= 6; ++n) {
              GKey key{fam, d, m, a, b, n};
              if (g_dp(key, table) != g_bruteforce(key)) dp_ok = false;
            }
  }
  report.add("gdp-equals-bruteforce", dp_ok);

  // The worked second-moment sums.
  GTable table;
  report.add("power-sum-plus-d3-n3-k2", power_sum(Family::Plus, 3, 3, 2, table) == 282, "282",
             power_sum(Family::Plus, 3, 3, 2, table).str());
  report.add("power-sum-minus-d3-n3-k2", power_sum(Family::Minus, 3, 3, 2, table) == 138, "138",
             power_sum(Family::Minus, 3, 3, 2, table).str());

  // Bijection between core partitions and nice subsets, and the counts.
  bool bijection_ok = true, counts_ok = true, size_ok = true;
  for (long long d = 1; d <= 3; ++d) {
    for (long long n = 2; n <= 7; ++n) {
      for (Family fam : {Family::Plus, Family::Minus}) {
        long long t = fam == Family::Plus ? d * n + 1 : d * n - 1;
        if (t < 2) continue;
        auto cores = enumerate_core(n, t, true);
        BigInt expected_count = fam == Family::Plus ? m_seq(d, n) : n_seq(d, n);
        if (BigInt(cores.size()) != expected_count) counts_ok = false;
        auto nice = fam == Family::Plus ? enumerate_nice_plus(d, n - 1)
                                        : enumerate_nice_minus(d, n - 1);
        std::set<std::vector<long long>> images, expected;
        for (const auto& I : nice) expected.insert(I.heights());
        for (const auto& p : cores) {
          NiceSubset I = psi(p, n);
          images.insert(I.heights());
          // size identity |lambda| = sigma_n(I) - |I|^2/2 + |I|/2
          BigInt s = I.sigma(n);
          BigInt c = I.cardinality();
          if (2 * BigInt(p.size()) != 2 * s - c * c + c) size_ok = false;
          if (psi_inverse(I, n) != p) bijection_ok = false;
        }
        if (images != expected) bijection_ok = false;
      }
    }
  }
  report.add("core-counts-match-sequences", counts_ok);
  report.add("psi-bijection-d<=3-n<=7", bijection_ok);
  report.add("size-identity-under-psi", size_ok);

  // Classical cross-checks on the brute-force oracle.
  bool classical_ok = true;
  for (auto [t1, t2] : std::vector<std::pair<long long, long long>>{{3, 4}, {4, 5}, {3, 7}}) {
    auto all = enumerate_core(t1, t2, false);
    BigInt anderson = 1;
    for (long long i = 2; i <= t1 + t2 - 1; ++i) anderson *= i;
    for (long long i = 2; i <= t1; ++i) anderson /= i;
    for (long long i = 2; i <= t2; ++i) anderson /= i;
    if (BigInt(all.size()) != anderson) classical_ok = false;
    long long max_size = 0, total = 0;
    for (const auto& p : all) {
      max_size = std::max(max_size, p.size());
      total += p.size();
    }
    if (max_size != (t1 * t1 - 1) * (t2 * t2 - 1) / 24) classical_ok = false;
    Rational average = Rational(total) / Rational(static_cast<long long>(all.size()));
    if (average != Rational((t1 - 1) * (t2 - 1) * (t1 + t2 + 1), 24)) classical_ok = false;
  }
  report.add("anderson-olsson-stanton-armstrong", classical_ok);
  return report;
}

SuiteReport suite_closedforms() {
  SuiteReport report{"closedforms"};

  report.add("expectation-plus-d2-n4", closed_expectation_plus(2, 4) == Rational(54, 11), "54/11",
             rstr(closed_expectation_plus(2, 4)));
  report.add("expectation-plus-d3-n3", closed_expectation_plus(3, 3) == Rational(34, 7), "34/7",
             rstr(closed_expectation_plus(3, 3)));
  report.add("total-minus-d1-n4", closed_total_minus(1, 4) == 3, "3", rstr(closed_total_minus(1, 4)));
  report.add("total-minus-d2-n5", closed_total_minus(2, 5) == 92, "92", rstr(closed_total_minus(2, 5)));

  bool plus_ok = true, minus_ok = true, cor_ok = true;
  GTable table;
  for (long long d = 1; d <= 4; ++d) {
    for (long long n = 1; n <= 10; ++n) {
      Rational expectation = closed_expectation_plus(d, n);
      if (expectation * Rational(m_seq(d, n)) != Rational(power_sum(Family::Plus, d, n, 1, table)))
        plus_ok = false;
      if (n >= 2) {
        Rational total = closed_total_minus(d, n);
        if (total != Rational(power_sum(Family::Minus, d, n, 1, table))) minus_ok = false;
        if (d != 2) {
          if (closed_expectation_minus(d, n) != total / Rational(n_seq(d, n))) cor_ok = false;
        }
      }
    }
  }
  report.add("closed-expectation-plus-vs-dp", plus_ok);
  report.add("closed-total-minus-vs-dp", minus_ok);
  report.add("closed-expectation-minus-vs-dp", cor_ok);

  // d = 2 singular case: the ratio closed form must refuse, the fallback holds.
  bool rejected = false;
  try {
    closed_expectation_minus(2, 5);
  } catch (const std::domain_error&) {
    rejected = true;
  }
  bool fallback = closed_total_minus(2, 5) / Rational(n_seq(2, 5)) ==
                  moment(Family::Minus, 2, 5, 1).expectation;
  report.add("closed-minus-d2-rejected-with-fallback", rejected && fallback);

  // Explicit small-(a,b) formulas against the DP.
  bool small_ok = true;
  GTable gt;
  for (long long d = 1; d <= 4; ++d)
    for (long long m = 0; m <= 5; ++m)
      for (long long n = 1; n <= 12; ++n) {
        if (closed_g_small(d, m, n, SmallG::A1B0) != g_dp({Family::Plus, d, m, 1, 0, n}, gt))
          small_ok = false;
        if (closed_g_small(d, m, n, SmallG::A0B1) != g_dp({Family::Plus, d, m, 0, 1, n}, gt))
          small_ok = false;
        if (closed_g_small(d, m, n, SmallG::A0B2) != g_dp({Family::Plus, d, m, 0, 2, n}, gt))
          small_ok = false;
      }
  report.add("explicit-g-formulas-vs-dp", small_ok);

  // Basis form: power sums as A(n) M_d(n) + B(n) M_d(n+1).
  for (long long d = 1; d <= 3; ++d)
    for (int k = 1; k <= 2; ++k)
      for (Family fam : {Family::Plus, Family::Minus})
        report.merge(basis_fit_check(fam, d, k, 2 * (2 * k + 1), 10));
  return report;
}

SuiteReport suite_genfunc() {
  SuiteReport report{"genfunc"};

  bool triple_ok = true;
  for (long long d = 1; d <= 3; ++d)
    for (int k = 1; k <= 3; ++k) {
      auto direct = inv_power_expand(d, k, 30, ExpandMethod::Direct);
      auto pf = inv_power_expand(d, k, 30, ExpandMethod::PartialFraction);
      auto mb = inv_power_expand(d, k, 30, ExpandMethod::MBasis);
      if (!(direct == pf && direct == mb)) triple_ok = false;
    }
  report.add("inv-power-triple-agreement", triple_ok);

  bool psi_ok = true;
  for (long long d = 1; d <= 3; ++d)
    for (long long m = 0; m <= 4; ++m) {
      if (!(psi_closed(d, m, PsiForm::A0B0, 20) == psi_series_dp(d, m, 0, 0, 20))) psi_ok = false;
      if (!(psi_closed(d, m, PsiForm::A1B0, 20) == psi_series_dp(d, m, 1, 0, 20))) psi_ok = false;
      if (!(psi_closed(d, m, PsiForm::A0B1, 20) == psi_series_dp(d, m, 0, 1, 20))) psi_ok = false;
      if (!(psi_closed(d, m, PsiForm::A0B2, 20) == psi_series_dp(d, m, 0, 2, 20))) psi_ok = false;
    }
  report.add("psi-closed-forms-vs-dp", psi_ok);

  // Coefficient identity for the squared denominator.
  bool squared_ok = true;
  for (long long d = 1; d <= 4; ++d) {
    auto series = inv_power_expand(d, 2, 20, ExpandMethod::Direct);
    for (long long n = 0; n <= 20; ++n) {
      Rational expected = (Rational(n + 1) * Rational(m_seq(d, n + 2)) +
                           Rational(n + 3) * Rational(d) * Rational(m_seq(d, n))) /
                          Rational(4 * d + 1);
      if (series.coeff(static_cast<std::size_t>(n)) != expected) squared_ok = false;
    }
  }
  report.add("squared-denominator-coefficients", squared_ok);

  for (long long d = 1; d <= 2; ++d)
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; a + b <= 2; ++b) report.merge(gf_structure_check(d, 0, a, b, 20));
  return report;
}

SuiteReport suite_degrees() {
  SuiteReport report{"degrees"};
  for (int k = 1; k <= 2; ++k)
    for (long long n : {4, 5, 6})
      for (Family fam : {Family::Plus, Family::Minus}) {
        int dmax = 2 * k + static_cast<int>(n / 2) + 4;
        report.merge(power_sum_degree_check(fam, n, k, dmax));
      }
  for (Family fam : {Family::Plus, Family::Minus})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (long long m = 0; m <= 3; m += 3)
          for (long long n : {3, 6}) {
            int deg = 2 * a + b + static_cast<int>((n + 1) / 2);
            report.merge(g_degree_check(fam, m, n, a, b, deg + 3));
          }
  return report;
}

SuiteReport suite_asymptotics() {
  SuiteReport report{"asymptotics"};

  auto golden1 = moment_ratio_in_n(Family::Plus, 1, 1, {50, 100, 200, 400});
  report.add("golden-k1-error-decreasing", golden1.error_strictly_decreasing());
  report.add("golden-k1-error-at-400", golden1.last_error() <= Decimal("0.1"));
  bool envelope_ok = true;
  for (const auto& pt : golden1.points)
    if (abs(pt.ratio - 1) > Decimal(10) / Decimal(pt.param)) envelope_ok = false;
  report.add("golden-k1-envelope-10-over-n", envelope_ok);

  auto golden2 = moment_ratio_in_n(Family::Plus, 1, 2, {50, 100, 200, 400});
  report.add("golden-k2-error-decreasing", golden2.error_strictly_decreasing());
  report.add("golden-k2-error-at-400", golden2.last_error() <= Decimal("0.1"));

  auto minus_trace = moment_ratio_in_n(Family::Minus, 2, 1, {50, 100, 200});
  bool positive = true;
  for (const auto& pt : minus_trace.points)
    if (pt.ratio <= 0) positive = false;
  report.add("minus-d2-k1-positive-limit", positive && minus_trace.differences_shrinking());

  for (Family fam : {Family::Plus, Family::Minus}) {
    auto in_d = moment_ratio_in_d(fam, fam == Family::Plus ? 3 : 4, 1, {10, 20, 40, 80});
    std::string id = std::string("ratio-in-d-") + to_string(fam) + "-stabilizes";
    report.add(id, in_d.differences_shrinking());
  }

  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    auto trace = g_ratio_check(a, b, {100, 200});
    std::ostringstream id;
    id << "g-ratio-improves-a" << a << "-b" << b;
    report.add(id.str(), abs(trace.points[1].ratio - 1) < abs(trace.points[0].ratio - 1));
  }
  return report;
}

}  // namespace

SuiteReport run_suite(const std::string& name) {
  if (name == "identities") return suite_identities();
  if (name == "oracle") return suite_oracle();
  if (name == "closedforms") return suite_closedforms();
  if (name == "genfunc") return suite_genfunc();
  if (name == "degrees") return suite_degrees();
  if (name == "asymptotics") return suite_asymptotics();
  if (name == "all") {
    SuiteReport report{"all"};
    for (const char* sub :
         {"identities", "oracle", "closedforms", "genfunc", "degrees", "asymptotics"})
      report.merge(run_suite(sub));
    return report;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace corepart
