#include "fnpoly/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fnpoly {

nlohmann::ordered_json poly_to_json(const MultiPoly& poly, std::span<const std::string> names) {
  if (names.size() != poly.num_vars()) throw std::invalid_argument("poly_to_json: wrong number of variable names");
  nlohmann::ordered_json out;
  out["vars"] = std::vector<std::string>(names.begin(), names.end());
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : poly.terms()) {
    nlohmann::ordered_json term;
    term["exponents"] = e;
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  const auto vars = j.at("vars").get<std::vector<std::string>>();
  MultiPoly out(vars.size());
  for (const auto& term : j.at("terms"))
    out.add_term(term.at("exponents").get<std::vector<int>>(), parse_rational(term.at("coeff").get<std::string>()));
  return out;
}

std::string canonical_json(const MultiPoly& poly, std::span<const std::string> names) {
  return poly_to_json(poly, names).dump();
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["name"] = report.name;
  out["passed"] = report.passed();
  out["checks"] = report.checks;
  out["failures"] = report.failures;
  return out;
}

std::string moments_csv(const MomentTable& table) {
  std::ostringstream out;
  out << "k,moment\n";
  for (int k = 1; k <= table.max_order(); ++k) out << k << ',' << to_string(table.moment(k)) << '\n';
  return out.str();
}

std::string moments_csv(const MomentTable& table, const std::vector<QuadratureMoment>& numeric) {
  std::ostringstream out;
  out << "k,moment,numeric,abs_diff\n";
  char buffer[96];
  for (int k = 1; k <= table.max_order(); ++k) {
    const double value = numeric.at(static_cast<std::size_t>(k - 1)).value;
    const double diff = std::abs(value - table.moment(k).convert_to<double>());
    std::snprintf(buffer, sizeof buffer, "%.12g,%.12g", value, diff);
    out << k << ',' << to_string(table.moment(k)) << ',' << buffer << '\n';
  }
  return out.str();
}

}  // namespace fnpoly
