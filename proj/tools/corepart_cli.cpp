// Command-line interface for the (n, dn+-1)-core partition engines.
//
// Subcommands: seq, enumerate, moments, gf, verify.
// Exit codes: 0 success/pass, 1 usage error, 2 verification failure,
// 3 budget exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "corepart/asymptotics.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/moments.hpp"
#include "corepart/partition.hpp"
#include "corepart/verify.hpp"

using json = nlohmann::json;
using namespace corepart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
  std::string format = "plain";
  std::size_t budget_oracle = 1000000;
  long long budget_n = 2000;
  long long budget_order = 500;
  long long seed = 0;  // accepted for interface stability; everything is deterministic
};

std::string rat_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

json rat_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

json report_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"id", c.id},
                          {"status", to_string(c.status)},
                          {"expected", c.expected},
                          {"actual", c.actual}});
  return json{{"suite", report.suite},
              {"checks", checks},
              {"status", report.passed() ? "pass" : "fail"}};
}

int cmd_seq(const GlobalOpts& g, long long d, long long nmax) {
  if (nmax > g.budget_n) throw BudgetExceeded("nmax exceeds --budget-n");
  if (g.format == "json") {
    json rows = json::array();
    for (long long n = 1; n <= nmax; ++n)
      rows.push_back(json{{"n", std::to_string(n)},
                          {"M", m_seq(d, n).str()},
                          {"N", n_seq(d, n).str()}});
    std::cout << json{{"d", std::to_string(d)}, {"rows", rows}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "n,M,N\n";
    for (long long n = 1; n <= nmax; ++n)
      std::cout << n << "," << m_seq(d, n) << "," << n_seq(d, n) << "\n";
  } else {
    std::cout << "d = " << d << "\n";
    for (long long n = 1; n <= nmax; ++n)
      std::cout << "n=" << n << "  M=" << m_seq(d, n) << "  N=" << n_seq(d, n) << "\n";
  }
  return kExitOk;
}

std::string partition_str(const Partition& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out << ",";
    out << p.parts()[i];
  }
  out << ")";
  return out.str();
}

int cmd_enumerate(const GlobalOpts& g, long long n, long long t, bool distinct) {
  auto partitions = enumerate_core(n, t, distinct, g.budget_oracle);
  long long total = 0, max_size = 0;
  for (const auto& p : partitions) {
    total += p.size();
    max_size = std::max(max_size, p.size());
  }
  if (g.format == "json") {
    json parts = json::array();
    for (const auto& p : partitions) {
      json one = json::array();
      for (long long part : p.parts()) one.push_back(std::to_string(part));
      parts.push_back(one);
    }
    std::cout << json{{"t1", std::to_string(n)},
                      {"t2", std::to_string(t)},
                      {"distinct", distinct},
                      {"count", std::to_string(partitions.size())},
                      {"total_size", std::to_string(total)},
                      {"max_size", std::to_string(max_size)},
                      {"partitions", parts}}
                     .dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "partition,size\n";
    for (const auto& p : partitions) std::cout << partition_str(p) << "," << p.size() << "\n";
  } else {
    for (const auto& p : partitions) std::cout << partition_str(p) << "\n";
    std::cout << "count=" << partitions.size() << " total_size=" << total
              << " max_size=" << max_size << "\n";
  }
  return kExitOk;
}

int cmd_moments(const GlobalOpts& g, const std::string& family_name, long long d, long long n,
                int k, const std::string& method) {
  if (n > g.budget_n) throw BudgetExceeded("n exceeds --budget-n");
  Family family = family_name == "plus" ? Family::Plus : Family::Minus;

  BigInt ps, count;
  if (method == "dp") {
    MomentResult mr = moment(family, d, n, k);
    ps = mr.power_sum;
    count = mr.count;
  } else if (method == "bruteforce") {
    long long t = family == Family::Plus ? d * n + 1 : d * n - 1;
    auto partitions = enumerate_core(n, t, true, g.budget_oracle);
    count = partitions.size();
    ps = 0;
    for (const auto& p : partitions)
      ps += int_pow(BigInt(p.size()), static_cast<std::uint64_t>(k));
  } else {  // closedform
    if (k != 1) throw CLI::ValidationError("moments", "closedform method supports only k=1");
    if (family == Family::Plus) {
      count = m_seq(d, n);
      Rational total = closed_expectation_plus(d, n) * Rational(count);
      ps = numerator(total);
    } else {
      count = n_seq(d, n);
      Rational total = closed_total_minus(d, n);
      ps = numerator(total);
    }
  }
  Rational expectation = Rational(ps) / Rational(count);
  if (g.format == "json") {
    std::cout << json{{"family", family_name}, {"d", std::to_string(d)},
                      {"n", std::to_string(n)}, {"k", k},
                      {"method", method},       {"power_sum", ps.str()},
                      {"count", count.str()},   {"expectation", rat_json(expectation)}}
                     .dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "power_sum,count,expectation\n"
              << ps << "," << count << "," << rat_str(expectation) << "\n";
  } else {
    std::cout << "power_sum=" << ps << " count=" << count
              << " expectation=" << rat_str(expectation) << "\n";
  }
  return kExitOk;
}

int cmd_gf(const GlobalOpts& g, const std::string& mode, long long d, long long m, int a, int b,
           int k, long long order) {
  if (order > g.budget_order) throw BudgetExceeded("order exceeds --budget-order");
  const auto ord = static_cast<std::size_t>(order);

  std::vector<std::pair<std::string, TruncatedSeries>> series;
  if (mode == "psi") {
    series.emplace_back("dp", psi_series_dp(d, m, a, b, ord));
    if (a == 0 && b == 0) series.emplace_back("closed", psi_closed(d, m, PsiForm::A0B0, ord));
    if (a == 1 && b == 0) series.emplace_back("closed", psi_closed(d, m, PsiForm::A1B0, ord));
    if (a == 0 && b == 1) series.emplace_back("closed", psi_closed(d, m, PsiForm::A0B1, ord));
    if (a == 0 && b == 2) series.emplace_back("closed", psi_closed(d, m, PsiForm::A0B2, ord));
  } else {  // invpower
    series.emplace_back("direct", inv_power_expand(d, k, ord, ExpandMethod::Direct));
    series.emplace_back("partialfraction",
                        inv_power_expand(d, k, ord, ExpandMethod::PartialFraction));
    if (k <= 3)
      series.emplace_back("mbasis", inv_power_expand(d, k, ord, ExpandMethod::MBasis));
  }
  bool agree = true;
  for (std::size_t i = 1; i < series.size(); ++i)
    if (!(series[i].second == series[0].second)) agree = false;

  if (g.format == "json") {
    json methods = json::array();
    for (const auto& [name, s] : series) {
      json coeffs = json::array();
      for (const auto& c : s.coeffs()) coeffs.push_back(rat_json(c));
      methods.push_back(json{{"method", name}, {"coefficients", coeffs}});
    }
    std::cout << json{{"mode", mode}, {"d", std::to_string(d)},   {"m", std::to_string(m)},
                      {"a", a},       {"b", b},                   {"k", k},
                      {"order", order}, {"methods", methods},     {"agreement", agree}}
                     .dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "index";
    for (const auto& [name, s] : series) std::cout << "," << name;
    std::cout << "\n";
    for (std::size_t i = 0; i <= ord; ++i) {
      std::cout << i;
      for (const auto& [name, s] : series) std::cout << "," << rat_str(s.coeff(i));
      std::cout << "\n";
    }
  } else {
    for (const auto& [name, s] : series) {
      std::cout << name << ": [";
      for (std::size_t i = 0; i <= ord; ++i)
        std::cout << (i ? "," : "") << rat_str(s.coeff(i));
      std::cout << "]\n";
    }
    std::cout << "agreement=" << (agree ? "true" : "false") << "\n";
  }
  return agree ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
  SuiteReport report = run_suite(suite);
  if (g.format == "json") {
    std::cout << report_json(report).dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "id,status,expected,actual\n";
    for (const auto& c : report.checks)
      std::cout << c.id << "," << to_string(c.status) << "," << c.expected << "," << c.actual
                << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << to_string(c.status) << "  " << c.id;
      if (c.status == CheckStatus::Fail && !c.expected.empty())
        std::cout << "  expected=" << c.expected << " actual=" << c.actual;
      if (c.status == CheckStatus::Skip && !c.actual.empty()) std::cout << "  (" << c.actual << ")";
      std::cout << "\n";
    }
    std::cout << "suite=" << report.suite << " status=" << (report.passed() ? "pass" : "fail")
              << "\n";
  }
  return report.passed() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and moments of (n, dn+-1)-core partitions with distinct parts"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--budget-oracle", g.budget_oracle, "Max enumerated objects")
      ->capture_default_str();
  app.add_option("--budget-n", g.budget_n, "Max n for DP computations")->capture_default_str();
  app.add_option("--budget-order", g.budget_order, "Max series order")->capture_default_str();
  app.add_option("--seed", g.seed, "Unused; all commands are deterministic");

  long long d = 1, n = 1, t = 2, m = 0, nmax = 10, order = 10;
  int a = 0, b = 0, k = 1;
  bool distinct = false;
  std::string family = "plus", method = "dp", mode = "psi", suite = "all";

  auto* seq = app.add_subcommand("seq", "Print M_d(n), N_d(n) for n = 1..nmax");
  seq->add_option("-d,--d", d, "Parameter d")->required()->check(CLI::PositiveNumber);
  seq->add_option("--nmax", nmax, "Largest n")->required()->check(CLI::NonNegativeNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List (n,t)-core partitions");
  enumerate->add_option("-n,--n", n, "First core parameter")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("-t,--t", t, "Second core parameter")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--distinct", distinct, "Restrict to distinct parts");

  auto* moments_cmd = app.add_subcommand("moments", "Power sums and moments of partition sizes");
  moments_cmd->add_option("--family", family, "plus (dn+1) or minus (dn-1)")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->required();
  moments_cmd->add_option("-d,--d", d)->required()->check(CLI::PositiveNumber);
  moments_cmd->add_option("-n,--n", n)->required()->check(CLI::PositiveNumber);
  moments_cmd->add_option("-k,--k", k, "Moment order")->required()->check(CLI::PositiveNumber);
  moments_cmd->add_option("--method", method, "dp, bruteforce or closedform")
      ->check(CLI::IsMember({"dp", "bruteforce", "closedform"}))
      ->capture_default_str();

  auto* gf = app.add_subcommand("gf", "Generating-function expansions");
  gf->add_option("--mode", mode, "psi or invpower")
      ->check(CLI::IsMember({"psi", "invpower"}))
      ->required();
  gf->add_option("-d,--d", d)->required()->check(CLI::PositiveNumber);
  gf->add_option("-m,--m", m)->check(CLI::NonNegativeNumber);
  gf->add_option("-a,--a", a)->check(CLI::NonNegativeNumber);
  gf->add_option("-b,--b", b)->check(CLI::NonNegativeNumber);
  gf->add_option("-k,--k", k)->check(CLI::PositiveNumber);
  gf->add_option("--order", order, "Truncation order")->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify
      ->add_option("--suite", suite,
                   "identities|oracle|closedforms|genfunc|degrees|asymptotics|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(g, d, nmax);
    if (*enumerate) return cmd_enumerate(g, n, t, distinct);
    if (*moments_cmd) return cmd_moments(g, family, d, n, k, method);
    if (*gf) return cmd_gf(g, mode, d, m, a, b, k, order);
    if (*verify) return cmd_verify(g, suite);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
