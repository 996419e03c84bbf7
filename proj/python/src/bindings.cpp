#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "fnpoly/fnpoly.hpp"
#include "fnpoly/verify.hpp"

namespace py = pybind11;
using namespace fnpoly;

namespace {

py::object to_py(const Integer& value) { return py::int_(py::str(value.str())); }

py::object to_py(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

// {exponent tuple: Fraction}, in canonical (descending lexicographic) order.
py::dict to_py(const MultiPoly& poly) {
  py::dict out;
  for (const auto& [e, c] : poly.terms()) out[py::tuple(py::cast(e))] = to_py(c);
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

py::dict report(const VerificationReport& r) {
  py::dict out;
  out["name"] = r.name;
  out["passed"] = r.passed();
  out["checks"] = r.checks;
  out["failures"] = r.failures;
  return out;
}

EnumerationBudget budget(int max_points) { return EnumerationBudget{max_points}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

  m.def("binomial", [](int n, int k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("fuss_catalan", [](int p, int k) { return to_py(fuss_catalan(p, k)); }, py::arg("p"), py::arg("k"));
  m.def("gfn_number", [](int k, const IndexVector& j) { return to_py(gfn_number(k, j)); }, py::arg("k"),
        py::arg("j"));
  m.def(
      "vandermonde_check",
      [](int p, int k) {
        const auto d = vandermonde_check(p, k);
        return py::make_tuple(to_py(d.sum), to_py(d.fuss_catalan));
      },
      py::arg("p"), py::arg("k"));

  m.def("closed_form_pk", [](int p, int k) { return to_py(closed_form_Pk(p, k)); }, py::arg("p"), py::arg("k"));
  m.def("fuss_narayana_poly", [](int p, int k) { return to_py(fuss_narayana_poly(p, k)); }, py::arg("p"),
        py::arg("k"));
  m.def(
      "brute_force_pk", [](int p, int k, int max_points) { return to_py(brute_force_Pk(p, k, budget(max_points))); },
      py::arg("p"), py::arg("k"), py::arg("max_points") = 16);
  m.def(
      "solve_functional_equation",
      [](int p, int order) {
        const PolySeries g = solve_functional_equation(p, order);
        py::list out;
        for (int n = 0; n <= order; ++n) out.append(to_py(g[n]));
        return out;
      },
      py::arg("p"), py::arg("order"));
  m.def("lagrange_coefficient", [](int p, int n) { return to_py(lagrange_coefficient(p, n)); }, py::arg("p"),
        py::arg("n"));
  m.def(
      "format_poly",
      [](int p, int k, bool t_vars) {
        if (t_vars) {
          const auto names = t_names(static_cast<std::size_t>(p));
          return to_string(fuss_narayana_poly(p, k), names);
        }
        const auto names = d_names(static_cast<std::size_t>(p + 1));
        return to_string(closed_form_Pk(p, k), names);
      },
      py::arg("p"), py::arg("k"), py::arg("t_vars") = false);

  m.def(
      "enumerate_adapted",
      [](int p, int k, int shift, int max_points) {
        std::vector<std::string> out;
        for (const auto& pi : enumerate_adapted(WordSpec{p, shift, k}, budget(max_points))) out.push_back(to_string(pi));
        return out;
      },
      py::arg("p"), py::arg("k"), py::arg("shift") = 0, py::arg("max_points") = 16);
  m.def(
      "count_adapted",
      [](int p, int k, int shift, int max_points) {
        return to_py(count_adapted(WordSpec{p, shift, k}, budget(max_points)));
      },
      py::arg("p"), py::arg("k"), py::arg("shift") = 0, py::arg("max_points") = 16);
  m.def(
      "profile_histogram",
      [](int p, int k, int shift, int max_points, int threads) {
        py::dict out;
        for (const auto& [j, c] : profile_histogram(WordSpec{p, shift, k}, budget(max_points), threads))
          out[py::tuple(py::cast(j))] = to_py(c);
        return out;
      },
      py::arg("p"), py::arg("k"), py::arg("shift") = 0, py::arg("max_points") = 16, py::arg("threads") = 1);
  m.def(
      "phi",
      [](const std::string& partition) { return to_string(phi(parse_partition(partition))); },
      py::arg("partition"));
  m.def(
      "arch_diagram_svg",
      [](const std::string& partition, int p, int k, int shift) {
        return arch_diagram_svg(parse_partition(partition), build_word({p, shift, k}));
      },
      py::arg("partition"), py::arg("p"), py::arg("k"), py::arg("shift") = 0);

  m.def(
      "_psi_moments",
      [](const std::vector<std::string>& ts, int max_order) {
        py::list out;
        for (const auto& v : psi_moments(ShapeVector(rationals(ts)), max_order).values) out.append(to_py(v));
        return out;
      },
      py::arg("ts"), py::arg("max_order"));
  m.def(
      "_s_transform_check",
      [](const std::vector<std::string>& ts, int max_order) {
        return s_transform_check(ShapeVector(rationals(ts)), max_order).passed();
      },
      py::arg("ts"), py::arg("max_order"));
  m.def(
      "quadrature_moments",
      [](double t, int max_order, double rel_tol) {
        std::vector<double> out;
        for (const auto& q : quadrature_moments(t, max_order, rel_tol)) out.push_back(q.value);
        return out;
      },
      py::arg("t"), py::arg("max_order"), py::arg("rel_tol") = 1e-10);

  m.def(
      "run_mc",
      [](const std::vector<double>& d, int n, int k_max, int trials, std::uint64_t seed, int threads,
         const std::string& ensemble) {
        McConfig config;
        config.profile = DimensionProfile::make(d, n);
        config.k_max = k_max;
        config.trials = trials;
        config.seed = seed;
        config.threads = threads;
        config.ensemble = parse_ensemble(ensemble);
        McResult result;
        {
          py::gil_scoped_release release;
          result = run_experiment(config);
        }
        py::list moments;
        for (const auto& mm : result.moments) {
          py::dict row;
          row["k"] = mm.k;
          row["mean"] = mm.mean;
          row["se"] = mm.se;
          row["target"] = mm.target;
          row["z"] = mm.z;
          moments.append(row);
        }
        py::dict out;
        out["realized"] = result.config.profile.realized;
        out["moments"] = moments;
        out["max_trace_route_gap"] = result.max_trace_route_gap;
        return out;
      },
      py::arg("d"), py::arg("n") = 100, py::arg("k_max") = 3, py::arg("trials") = 200, py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("ensemble") = "complex");

  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> p, int k_max, int max_points) {
        if (suite == "lemmas") return report(verify_lemmas_suite(p, k_max, budget(max_points)));
        if (suite == "oracle") return report(verify_oracle_suite(p, budget(max_points)));
        if (suite == "freeprob") return report(verify_freeprob_suite(k_max));
        throw py::value_error("unknown suite '" + suite + "' (expected lemmas, oracle or freeprob)");
      },
      py::arg("suite"), py::arg("p") = py::none(), py::arg("k_max") = 4, py::arg("max_points") = 16);
}
