// fnpoly: multivariate Fuss-Narayana polynomials, adapted noncrossing
// partitions, Marchenko-Pastur convolution moments and Monte Carlo checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fnpoly/fnpoly.hpp"
#include "fnpoly/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fnpoly::EnumerationBudget budget_from_env() {
  fnpoly::EnumerationBudget budget;
  if (const char* env = std::getenv("FN_BUDGET"); env && *env) {
    try {
      budget.max_points = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("FN_BUDGET is not an integer: ") + env);
    }
  }
  return budget;
}

std::vector<std::string> names_for(int p, const std::string& vars) {
  return vars == "t" ? fnpoly::t_names(static_cast<std::size_t>(p)) : fnpoly::d_names(static_cast<std::size_t>(p + 1));
}

fnpoly::MultiPoly in_vars(const fnpoly::MultiPoly& pk, const std::string& vars) {
  return vars == "t" ? pk.eliminate(0, 1) : pk;
}

struct PolyArgs {
  int p = 0;
  int k = 0;
  bool closed = false, enumerate = false, series = false, all = false;
  std::string vars = "d";
};

int run_poly(const PolyArgs& a) {
  if (a.p < 1 || a.k < 0) throw UsageError("poly: need p >= 1 and k >= 0");
  const auto names = names_for(a.p, a.vars);
  const auto budget = budget_from_env();

  auto closed = [&] { return fnpoly::closed_form_Pk(a.p, a.k); };
  auto brute = [&] { return fnpoly::brute_force_Pk(a.p, a.k, budget); };
  auto series = [&] {
    if (a.k == 0) return fnpoly::MultiPoly::constant(static_cast<std::size_t>(a.p + 1), 1);
    return fnpoly::solve_functional_equation(a.p, a.k)[a.k].divide_by_variable(0);
  };

  if (a.all) {
    const auto c = closed(), b = brute(), s = series();
    nlohmann::ordered_json out;
    out["closed"] = fnpoly::poly_to_json(in_vars(c, a.vars), names);
    out["enumerate"] = fnpoly::poly_to_json(in_vars(b, a.vars), names);
    out["series"] = fnpoly::poly_to_json(in_vars(s, a.vars), names);
    out["agree"] = c == b && b == s;
    std::cout << out.dump() << '\n';
    return kOk;
  }
  const fnpoly::MultiPoly poly = a.enumerate ? brute() : a.series ? series() : closed();
  std::cout << fnpoly::canonical_json(in_vars(poly, a.vars), names) << '\n';
  return kOk;
}

struct EnumerateArgs {
  int p = 0, k = 0, shift = 0;
  bool count = false, list = false, profiles = false;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.p < 1 || a.k < 0) throw UsageError("enumerate: need p >= 1 and k >= 0");
  if (a.shift < 0 || a.shift > a.p) throw UsageError("enumerate: shift must lie in [0, p]");
  const auto budget = budget_from_env();
  const fnpoly::WordSpec spec{a.p, a.shift, a.k};
  if (a.list) {
    for (const auto& pi : fnpoly::enumerate_adapted(spec, budget)) std::cout << fnpoly::to_string(pi) << '\n';
  } else if (a.profiles) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [j, c] : fnpoly::profile_histogram(spec, budget)) {
      std::string key = "(";
      for (std::size_t i = 0; i < j.size(); ++i) key += (i ? "," : "") + std::to_string(j[i]);
      out[key + ")"] = c.convert_to<long long>();
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << fnpoly::count_adapted(spec, budget).str() << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> p;
  std::optional<int> k_max;
  std::optional<int> pk_budget;
};

int run_verify(const VerifyArgs& a) {
  auto budget = budget_from_env();
  if (a.pk_budget) budget.max_points = *a.pk_budget;
  if (a.p && (*a.p < 1)) throw UsageError("verify: p must be positive");
  fnpoly::VerificationReport report;
  if (a.suite == "lemmas") {
    report = fnpoly::verify_lemmas_suite(a.p, a.k_max.value_or(2), budget);
  } else if (a.suite == "oracle") {
    report = fnpoly::verify_oracle_suite(a.p, budget);
  } else {
    report = fnpoly::verify_freeprob_suite(a.k_max.value_or(6));
  }
  std::cout << fnpoly::report_to_json(report).dump(2) << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

struct MomentsArgs {
  std::vector<std::string> ts;
  int order = 4;
  bool quadrature = false;
};

int run_moments(const MomentsArgs& a) {
  if (a.order < 1) throw UsageError("moments: K must be positive");
  std::vector<fnpoly::Rational> entries;
  for (const auto& t : a.ts) entries.push_back(fnpoly::parse_rational(t));
  const fnpoly::ShapeVector ts(entries);
  const auto table = fnpoly::psi_moments(ts, a.order);
  if (a.quadrature) {
    if (ts.p() != 1) throw UsageError("moments: --quadrature needs a single shape parameter");
    if (a.order > 8) throw UsageError("moments: --quadrature supports K <= 8");
    std::cout << fnpoly::moments_csv(table, fnpoly::quadrature_moments(ts.as_double()[0], a.order));
  } else {
    std::cout << fnpoly::moments_csv(table);
  }
  return kOk;
}

struct McArgs {
  std::vector<double> d;
  int n = 100, k_max = 3, trials = 200, threads = 1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string ensemble = "complex";
};

int run_mc(const McArgs& a) {
  fnpoly::McConfig config;
  config.profile = fnpoly::DimensionProfile::make(a.d, a.n);
  config.k_max = a.k_max;
  config.trials = a.trials;
  config.seed = a.seed;
  config.threads = a.threads;
  config.ensemble = fnpoly::parse_ensemble(a.ensemble);
  const auto result = fnpoly::run_experiment(config);
  std::cout << (a.format == "csv" ? fnpoly::to_csv(result) : fnpoly::to_json(result));
  return kOk;
}

struct DiagramArgs {
  int p = 0, k = 0, shift = 0, index = 0;
  std::string svg;
};

int run_diagram(const DiagramArgs& a) {
  if (a.p < 1 || a.k < 0 || a.shift < 0 || a.shift > a.p) throw UsageError("diagram: invalid p, k or shift");
  const fnpoly::WordSpec spec{a.p, a.shift, a.k};
  const auto all = fnpoly::enumerate_adapted(spec, budget_from_env());
  if (a.index < 0 || static_cast<std::size_t>(a.index) >= all.size())
    throw UsageError("diagram: index " + std::to_string(a.index) + " out of range (" + std::to_string(all.size()) +
                     " partitions)");
  const std::string svg = fnpoly::arch_diagram_svg(all[static_cast<std::size_t>(a.index)], fnpoly::build_word(spec));
  if (a.svg.empty() || a.svg == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(a.svg);
    if (!out) throw std::runtime_error("cannot write " + a.svg);
    out << svg;
    std::cerr << "wrote " << a.svg << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuss-Narayana polynomials, adapted noncrossing partitions and Marchenko-Pastur products"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Compute P_k (or F_k with --vars t)");
  poly_cmd->add_option("-p", poly.p, "Number of factors")->required();
  poly_cmd->add_option("-k", poly.k, "Order")->required();
  auto* m_closed = poly_cmd->add_flag("--closed", poly.closed, "Closed-form coefficients (default)");
  auto* m_enum = poly_cmd->add_flag("--enumerate", poly.enumerate, "Sum over adapted partitions");
  auto* m_series = poly_cmd->add_flag("--series", poly.series, "Fixed point of g = x prod (g + d_i)");
  auto* m_all = poly_cmd->add_flag("--all-methods", poly.all, "All three plus an agreement flag");
  m_closed->excludes(m_enum, m_series, m_all);
  m_enum->excludes(m_series, m_all);
  m_series->excludes(m_all);
  poly_cmd->add_option("--vars", poly.vars, "Variables: d (P_k) or t (F_k)")->check(CLI::IsMember({"d", "t"}));

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "Enumerate partitions adapted to W_shift^k");
  en_cmd->add_option("-p", en.p, "Number of letter pairs")->required();
  en_cmd->add_option("-k", en.k, "Word power")->required();
  en_cmd->add_option("--shift", en.shift, "Cyclic shift i in [0, p]");
  auto* e_count = en_cmd->add_flag("--count", en.count, "Print the number of partitions (default)");
  auto* e_list = en_cmd->add_flag("--list", en.list, "One partition per line");
  auto* e_prof = en_cmd->add_flag("--profiles", en.profiles, "Histogram of leg profiles");
  e_count->excludes(e_list, e_prof);
  e_list->excludes(e_prof);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run an invariant suite; exit 1 on any failure");
  ver_cmd->add_option("--suite", ver.suite, "lemmas | oracle | freeprob")
      ->required()
      ->check(CLI::IsMember({"lemmas", "oracle", "freeprob"}));
  ver_cmd->add_option("-p", ver.p, "Restrict to one p");
  ver_cmd->add_option("--k-max", ver.k_max, "Largest order");
  ver_cmd->add_option("--pk-budget", ver.pk_budget, "Largest 2pk to enumerate");

  MomentsArgs mom;
  auto* mom_cmd = app.add_subcommand("moments", "Moments of rho_{t_1} boxtimes ... boxtimes rho_{t_p} as CSV");
  mom_cmd->add_option("-t", mom.ts, "Shape parameters, comma separated (rationals allowed)")
      ->required()
      ->delimiter(',');
  mom_cmd->add_option("-K", mom.order, "Largest moment order");
  auto* x_exact = mom_cmd->add_flag("--exact", "Exact moments only (default)");
  auto* x_quad = mom_cmd->add_flag("--quadrature", mom.quadrature, "Add quadrature estimates (single t)");
  x_exact->excludes(x_quad);

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo trace moments of products of Gaussian matrices");
  mc_cmd->add_option("-d", mc.d, "Asymptotic dimensions d_0..d_p, comma separated")->required()->delimiter(',');
  mc_cmd->add_option("-n", mc.n, "Scale n");
  mc_cmd->add_option("-K", mc.k_max, "Largest moment order");
  mc_cmd->add_option("--trials", mc.trials, "Number of independent samples");
  mc_cmd->add_option("--seed", mc.seed, "64-bit seed");
  mc_cmd->add_option("--threads", mc.threads, "Worker threads (results do not depend on it)");
  mc_cmd->add_option("--ensemble", mc.ensemble, "complex (default) | real")->check(CLI::IsMember({"complex", "real"}));
  mc_cmd->add_option("--format", mc.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  DiagramArgs dia;
  auto* dia_cmd = app.add_subcommand("diagram", "Write an SVG arch diagram of one adapted partition");
  dia_cmd->add_option("-p", dia.p, "Number of letter pairs")->required();
  dia_cmd->add_option("-k", dia.k, "Word power")->required();
  dia_cmd->add_option("--shift", dia.shift, "Cyclic shift i in [0, p]");
  dia_cmd->add_option("--index", dia.index, "0-based index in enumeration order");
  dia_cmd->add_option("--svg", dia.svg, "Output path ('-' or omitted: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*poly_cmd) return run_poly(poly);
    if (*en_cmd) return run_enumerate(en);
    if (*ver_cmd) return run_verify(ver);
    if (*mom_cmd) return run_moments(mom);
    if (*mc_cmd) return run_mc(mc);
    if (*dia_cmd) return run_diagram(dia);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fnpoly::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
