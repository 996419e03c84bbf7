#include "fnpoly/verify.hpp"

#include <cmath>

#include "fnpoly/exact.hpp"
#include "fnpoly/freeprob.hpp"
#include "fnpoly/series.hpp"

namespace fnpoly {

namespace {

std::vector<int> p_range(std::optional<int> p) {
  if (p) return {*p};
  return {1, 2, 3};
}

std::string at(int p, int k) { return "p=" + std::to_string(p) + " k=" + std::to_string(k); }

}  // namespace

VerificationReport verify_lemmas_suite(std::optional<int> p, int k_max, const EnumerationBudget& budget) {
  VerificationReport report{"lemmas", 0, {}};
  for (int q : p_range(p)) {
    int k_top = k_max;
    while (k_top > 0 && 2 * q * k_top > budget.max_points) --k_top;
    report.merge(verify_lemma_31(q, k_top, budget));
    report.merge(verify_lemma_32(q, k_top, budget));
  }
  return report;
}

VerificationReport verify_oracle_suite(std::optional<int> p, const EnumerationBudget& budget) {
  VerificationReport report{"oracle", 0, {}};
  for (int q : p_range(p)) {
    int k_top = 0;
    while (2 * q * (k_top + 1) <= budget.max_points) ++k_top;
    const PolySeries g = solve_functional_equation(q, std::max(k_top, 1));
    for (int k = 0; k <= k_top; ++k) {
      const MultiPoly closed = closed_form_Pk(q, k);
      const MultiPoly brute = brute_force_Pk(q, k, budget);
      report.expect(brute == closed, "brute force and closed form differ at " + at(q, k));
      if (k >= 1) {
        report.expect(g[k].divide_by_variable(0) == closed, "series coefficient differs at " + at(q, k));
        report.expect(lagrange_coefficient(q, k) == g[k], "Lagrange coefficient differs at " + at(q, k));
        const Integer expected = fuss_catalan(q, k);
        for (int shift = 0; shift <= q; ++shift)
          report.expect(count_adapted({q, shift, k}, budget) == expected,
                        "adapted count is not Fuss-Catalan at " + at(q, k) + " shift=" + std::to_string(shift));
      }
    }
  }
  return report;
}

VerificationReport verify_freeprob_suite(int k_max) {
  VerificationReport report{"freeprob", 0, {}};
  const int order = std::max(k_max, 2);
  const std::vector<std::vector<Rational>> samples = {
      {Rational(1)},
      {Rational(1, 2)},
      {Rational(2)},
      {Rational(2), Rational(3)},
      {Rational(1, 3), Rational(5, 2)},
      {Rational(1), Rational(2), Rational(3, 4)},
      {Rational(3, 2), Rational(1, 5), Rational(4), Rational(7, 3)},
  };
  for (const auto& entries : samples) {
    const ShapeVector ts(entries);
    const auto psi = psi_moments(ts, order);
    const auto closed = convolution_moments_closed(ts, order);
    std::string label = "ts=(";
    for (std::size_t i = 0; i < entries.size(); ++i) label += (i ? "," : "") + to_string(entries[i]);
    label += ")";
    report.expect(psi.values == closed.values, "psi moments differ from F_k at " + label);
    report.expect(s_transform_check(ts, order).passed(), "S-transform identities fail at " + label);
  }
  for (double t : {0.5, 1.0, 2.0}) {
    const int top = std::min(order, 8);
    const auto numeric = quadrature_moments(t, top);
    const auto exact = convolution_moments_closed(ShapeVector({parse_rational(std::to_string(t))}), top);
    for (int k = 1; k <= top; ++k) {
      const double want = exact.moment(k).convert_to<double>();
      const double got = numeric[static_cast<std::size_t>(k - 1)].value;
      report.expect(std::abs(got - want) <= 1e-8 * std::abs(want),
                    "quadrature moment k=" + std::to_string(k) + " at t=" + std::to_string(t) + " off by " +
                        std::to_string(std::abs(got - want)));
    }
  }
  return report;
}

}  // namespace fnpoly
