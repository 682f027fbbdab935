// Acceptance gate: one check per line, nonzero exit on any failure.
// Every value below is either an independently known constant or an
// agreement between two methods that were implemented separately.

#include <iostream>
#include <set>
#include <vector>

#include "corepart/asymptotics.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/moments.hpp"
#include "corepart/nice.hpp"
#include "corepart/partition.hpp"

using namespace corepart;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

bool criterion_worked_examples() {
  bool ok = power_sum(Family::Plus, 3, 3, 2) == 282;
  ok = ok && power_sum(Family::Minus, 3, 3, 2) == 138;
  ok = ok && moment(Family::Plus, 2, 4, 1).expectation == Rational(54, 11);
  ok = ok && moment(Family::Plus, 3, 3, 1).expectation == Rational(34, 7);
  ok = ok && closed_total_minus(1, 4) == 3;
  ok = ok && closed_total_minus(2, 5) == 92;

  std::set<Partition> c49 = {
      Partition(), Partition({1}), Partition({2}), Partition({3}), Partition({2, 1}),
      Partition({4, 1}), Partition({5, 2}), Partition({6, 3}), Partition({3, 2, 1}),
      Partition({5, 2, 1}), Partition({4, 3, 2, 1})};
  ok = ok && as_set(enumerate_core(4, 9, true)) == c49;

  std::set<Partition> c59 = {
      Partition(), Partition({1}), Partition({2}), Partition({3}), Partition({4}),
      Partition({2, 1}), Partition({3, 1}), Partition({3, 2}), Partition({5, 1}),
      Partition({6, 2}), Partition({7, 3}), Partition({4, 2, 1}), Partition({6, 2, 1}),
      Partition({4, 3, 1}), Partition({5, 3, 2}), Partition({5, 4, 2, 1})};
  ok = ok && as_set(enumerate_core(5, 9, true)) == c59;
  return ok;
}

bool criterion_count_identities() {
  for (long long d = 1; d <= 3; ++d)
    for (long long n = 2; n <= 7; ++n) {
      if (BigInt(enumerate_core(n, d * n + 1, true).size()) != m_seq(d, n)) return false;
      if (BigInt(enumerate_core(n, d * n - 1, true).size()) != n_seq(d, n)) return false;
    }
  // the published count table: row polynomials in d, evaluated at d = 1..4
  auto m_poly = [](long long d, long long n) -> BigInt {
    BigInt dd = d;
    switch (n) {
      case 1: return 1;
      case 2: return dd + 1;
      case 3: return 2 * dd + 1;
      case 4: return dd * dd + 3 * dd + 1;
      case 5: return 3 * dd * dd + 4 * dd + 1;
      case 6: return dd * dd * dd + 6 * dd * dd + 5 * dd + 1;
    }
    return -1;
  };
  auto n_poly = [](long long d, long long n) -> BigInt {
    BigInt dd = d;
    switch (n) {
      case 1: return 1;
      case 2: return dd;
      case 3: return 2 * dd;
      case 4: return dd * dd + 2 * dd;
      case 5: return 3 * dd * dd + 2 * dd;
      case 6: return dd * dd * dd + 5 * dd * dd + 2 * dd;
    }
    return -1;
  };
  for (long long d = 1; d <= 4; ++d)
    for (long long n = 1; n <= 6; ++n) {
      if (m_seq(d, n) != m_poly(d, n)) return false;
      if (n_seq(d, n) != n_poly(d, n)) return false;
    }
  return true;
}

bool criterion_oracle_equivalence() {
  GTable table;
  long long keys = 0;
  for (Family fam : {Family::Plus, Family::Minus})
    for (long long d = 1; d <= 3; ++d)
      for (long long m = 0; m <= 4; ++m)
        for (int a = 0; a <= 3; ++a)
          for (int b = 0; a + b <= 3; ++b)
            for (long long n = 0; n <= 8; ++n) {
              GKey key{fam, d, m, a, b, n};
              if (g_bruteforce(key) != g_dp(key, table)) return false;
              ++keys;
            }
  if (keys < 1500) return false;

  for (long long d = 1; d <= 3; ++d)
    for (long long n = 2; n <= 7; ++n)
      for (Family fam : {Family::Plus, Family::Minus}) {
        long long t = fam == Family::Plus ? d * n + 1 : d * n - 1;
        auto cores = enumerate_core(n, t, true);
        std::set<NiceSubset> images;
        for (const auto& p : cores) {
          NiceSubset I = psi(p, n);
          if (!(psi_inverse(I, n) == p)) return false;
          BigInt y = I.cardinality();
          if (BigInt(p.size()) != I.sigma(n) - y * (y - 1) / 2) return false;
          images.insert(I);
        }
        auto expected = fam == Family::Plus ? enumerate_nice_plus(d, n - 1)
                                            : enumerate_nice_minus(d, n - 1);
        if (images.size() != cores.size() || images.size() != expected.size()) return false;
        for (const auto& I : expected)
          if (!images.count(NiceSubset(I.ambient_d(), I.ambient_n(), I.heights()))) return false;
      }
  return true;
}

bool criterion_closed_forms() {
  GTable table;
  for (long long d = 1; d <= 4; ++d)
    for (long long n = 1; n <= 10; ++n) {
      auto plus = moment(Family::Plus, d, n, 1);
      if (closed_expectation_plus(d, n) != plus.expectation) return false;
      if (n >= 2) {
        auto minus = moment(Family::Minus, d, n, 1);
        if (closed_total_minus(d, n) != Rational(minus.power_sum)) return false;
        if (d != 2 && closed_expectation_minus(d, n) != minus.expectation) return false;
      }
    }
  for (long long d = 1; d <= 4; ++d)
    for (long long m = 0; m <= 5; ++m)
      for (long long n = 1; n <= 12; ++n) {
        if (closed_g_small(d, m, n, SmallG::A1B0) != g_dp({Family::Plus, d, m, 1, 0, n}, table))
          return false;
        if (closed_g_small(d, m, n, SmallG::A0B1) != g_dp({Family::Plus, d, m, 0, 1, n}, table))
          return false;
        if (closed_g_small(d, m, n, SmallG::A0B2) != g_dp({Family::Plus, d, m, 0, 2, n}, table))
          return false;
      }
  return true;
}

bool criterion_series_agreement() {
  for (long long d = 1; d <= 3; ++d)
    for (int k = 1; k <= 3; ++k) {
      auto direct = inv_power_expand(d, k, 30, ExpandMethod::Direct);
      // the partial-fraction route throws if any surd part survives
      if (!(inv_power_expand(d, k, 30, ExpandMethod::PartialFraction) == direct)) return false;
      if (!(inv_power_expand(d, k, 30, ExpandMethod::MBasis) == direct)) return false;
    }
  for (long long d = 1; d <= 3; ++d)
    for (long long m = 0; m <= 3; ++m)
      for (PsiForm form : {PsiForm::A0B0, PsiForm::A1B0, PsiForm::A0B1, PsiForm::A0B2}) {
        int a = form == PsiForm::A1B0 ? 1 : 0;
        int b = form == PsiForm::A0B1 ? 1 : form == PsiForm::A0B2 ? 2 : 0;
        if (!(psi_closed(d, m, form, 20) == psi_series_dp(d, m, a, b, 20))) return false;
      }
  return true;
}

bool criterion_degree_checks() {
  for (Family fam : {Family::Plus, Family::Minus})
    for (int k = 1; k <= 2; ++k)
      for (long long n : {4, 5, 6}) {
        int bound = 2 * k + static_cast<int>(n / 2);
        if (!power_sum_degree_check(fam, n, k, bound + 4).passed()) return false;
      }
  for (Family fam : {Family::Plus, Family::Minus})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (long long m = 0; m <= 3; ++m)
          for (long long n = 0; n <= 6; ++n) {
            int bound = 2 * a + b + static_cast<int>((n + 1) / 2);
            if (!g_degree_check(fam, m, n, a, b, bound + 4).passed()) return false;
          }
  return true;
}

bool criterion_basis_fit() {
  for (long long d = 1; d <= 3; ++d)
    for (int k = 1; k <= 2; ++k)
      for (Family fam : {Family::Plus, Family::Minus})
        if (!basis_fit_check(fam, d, k, 4 * k + 4, 10).passed()) return false;
  return true;
}

bool criterion_asymptotics() {
  std::vector<long long> ns = {50, 100, 200, 400};
  auto t1 = moment_ratio_in_n(Family::Plus, 1, 1, ns);
  if (!t1.error_strictly_decreasing()) return false;
  if (t1.last_error() > Decimal("0.1")) return false;
  for (const auto& pt : t1.points)
    if (abs(pt.ratio - 1) > Decimal(10) / Decimal(pt.param)) return false;

  auto t2 = moment_ratio_in_n(Family::Plus, 1, 2, ns);
  if (!t2.error_strictly_decreasing()) return false;
  if (t2.last_error() > Decimal("0.2")) return false;

  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    auto tg = g_ratio_check(a, b, {100, 200});
    if (abs(tg.points[1].ratio - 1) >= abs(tg.points[0].ratio - 1)) return false;
  }
  return true;
}

bool criterion_classical() {
  for (auto [t1, t2] : std::vector<std::pair<long long, long long>>{{3, 4}, {4, 5}, {3, 7}}) {
    auto cores = enumerate_core(t1, t2, false);
    if (BigInt(cores.size()) != binomial(t1 + t2, t1) / (t1 + t2)) return false;
    long long total = 0, mx = 0;
    for (const auto& p : cores) {
      total += p.size();
      mx = std::max(mx, p.size());
    }
    if (mx != (t1 * t1 - 1) * (t2 * t2 - 1) / 24) return false;
    if (Rational(total) / Rational(cores.size()) !=
        Rational((t1 + t2 + 1) * (t1 - 1) * (t2 - 1), 24))
      return false;
  }
  return true;
}

template <typename F>
void run(const std::string& id, F f) {
  bool ok = false;
  std::string detail;
  try {
    ok = f();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(id, ok, detail);
}

}  // namespace

int main() {
  run("1-worked-examples", criterion_worked_examples);
  run("2-count-identities", criterion_count_identities);
  run("3-oracle-equivalence", criterion_oracle_equivalence);
  run("4-closed-form-equivalence", criterion_closed_forms);
  run("5-series-triple-agreement", criterion_series_agreement);
  run("6-degree-checks", criterion_degree_checks);
  run("7-basis-fit", criterion_basis_fit);
  run("8-asymptotics", criterion_asymptotics);
  run("9-classical-cross-checks", criterion_classical);
  std::cout << "SKIP  10-limiting-distribution  (out of scope by design)\n";
  std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
