#include "fnpoly/series.hpp"

namespace fnpoly {

namespace {

std::vector<MultiPoly> dimension_variables(int p) {
  const auto vars = static_cast<std::size_t>(p + 1);
  std::vector<MultiPoly> dims;
  for (std::size_t i = 0; i < vars; ++i) dims.push_back(MultiPoly::variable(vars, i));
  return dims;
}

}  // namespace

PolySeries solve_functional_equation(int p, int order) {
  if (p < 1) throw std::invalid_argument("solve_functional_equation: p must be positive");
  if (order < 1) throw std::invalid_argument("solve_functional_equation: order must be positive");
  return fixed_point_series(dimension_variables(p), order, MultiPoly(static_cast<std::size_t>(p + 1)));
}

PolySeries functional_equation_residual(const PolySeries& g) {
  const int p = static_cast<int>(g.shape()) - 1;
  const MultiPoly zero(g.shape());
  auto rhs = PolySeries::constant(g.order(), zero, MultiPoly::constant(g.shape(), 1));
  for (const auto& d : dimension_variables(p)) {
    auto factor = g;
    factor[0] += d;
    rhs = rhs * factor;
  }
  return g - rhs.shifted();
}

MultiPoly lagrange_coefficient_rational(int p, int n) {
  if (p < 1) throw std::invalid_argument("lagrange_coefficient: p must be positive");
  if (n < 1) throw std::invalid_argument("lagrange_coefficient: n must be positive");
  const auto vars = static_cast<std::size_t>(p + 1);
  const MultiPoly zero(vars);
  // Polynomials in lambda; only degrees up to n - 1 are needed.
  const int order = n - 1;
  auto power = PolySeries::constant(order, zero, MultiPoly::constant(vars, 1));
  for (const auto& d : dimension_variables(p)) {
    auto linear = PolySeries::constant(order, zero, d);
    if (order >= 1) linear[1] = MultiPoly::constant(vars, 1);
    for (int r = 0; r < n; ++r) power = power * linear;
  }
  return power[order].scaled(Rational(1, n));
}

MultiPoly lagrange_coefficient(int p, int n) {
  MultiPoly c = lagrange_coefficient_rational(p, n);
  for (const auto& [e, coeff] : c.terms()) require_integer(coeff, "Lagrange inversion coefficient");
  return c;
}

ScalarSeries series_reciprocal(const ScalarSeries& s) {
  if (s[0] == 0) throw std::domain_error("series_reciprocal: constant term is zero");
  ScalarSeries out(s.order(), Rational(0));
  out[0] = 1 / s[0];
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += s[i] * out[n - i];
    out[n] = -acc / s[0];
  }
  return out;
}

ScalarSeries series_compose(const ScalarSeries& outer, const ScalarSeries& inner) {
  if (inner[0] != 0) throw std::domain_error("series_compose: inner series must have zero constant term");
  if (outer.order() != inner.order()) throw std::invalid_argument("series shape mismatch");
  // Horner: outer_0 + inner * (outer_1 + inner * (...)).
  ScalarSeries acc = ScalarSeries::constant(outer.order(), 0, outer[outer.order()]);
  for (int n = outer.order() - 1; n >= 0; --n) {
    acc = acc * inner;
    acc[0] += outer[n];
  }
  return acc;
}

ScalarSeries series_reversion(const ScalarSeries& s) {
  if (s[0] != 0 || s.order() < 1 || s[1] == 0)
    throw std::domain_error("series_reversion: need s(0) = 0 and s'(0) != 0");
  // Newton-free coefficient solve: find r with s(r(x)) = x one degree at a time.
  ScalarSeries r(s.order(), Rational(0));
  r[1] = 1 / s[1];
  for (int n = 2; n <= s.order(); ++n) {
    const ScalarSeries composed = series_compose(s, r);
    // Raising r_n by c changes [x^n] s(r) by s_1 * c.
    r[n] = -composed[n] / s[1];
  }
  return r;
}

}  // namespace fnpoly
