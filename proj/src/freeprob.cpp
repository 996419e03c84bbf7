#include "fnpoly/freeprob.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fnpoly {

ShapeVector::ShapeVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("ShapeVector: need at least one shape parameter");
  for (const auto& t : entries_)
    if (t <= 0) throw std::invalid_argument("ShapeVector: shape parameters must be positive");
}

std::vector<double> ShapeVector::as_double() const {
  std::vector<double> out;
  for (const auto& t : entries_) out.push_back(t.convert_to<double>());
  return out;
}

MpLaw::MpLaw(double shape) : t(shape) {
  if (!(shape > 0)) throw std::invalid_argument("MpLaw: shape parameter must be positive");
  atom_mass = std::max(1.0 - t, 0.0);
  a = (1.0 - std::sqrt(t)) * (1.0 - std::sqrt(t));
  b = (1.0 + std::sqrt(t)) * (1.0 + std::sqrt(t));
}

double mp_density(double t, double x) {
  const MpLaw law(t);
  if (x <= law.a || x >= law.b || x <= 0) return 0.0;
  return std::sqrt((x - law.a) * (law.b - x)) / (2.0 * std::numbers::pi * x);
}

ScalarSeries psi_series(const ShapeVector& ts, int max_order) {
  if (max_order < 1) throw std::invalid_argument("psi_series: order must be positive");
  std::vector<Rational> dims{Rational(1)};
  dims.insert(dims.end(), ts.entries().begin(), ts.entries().end());
  return fixed_point_series(dims, max_order, Rational(0));
}

MomentTable psi_moments(const ShapeVector& ts, int max_order) {
  const ScalarSeries psi = psi_series(ts, max_order);
  MomentTable out{{}, ts};
  for (int k = 1; k <= max_order; ++k) out.values.push_back(psi[k]);
  return out;
}

MomentTable convolution_moments_closed(const ShapeVector& ts, int max_order) {
  if (max_order < 1) throw std::invalid_argument("convolution_moments_closed: order must be positive");
  MomentTable out{{}, ts};
  const int p = static_cast<int>(ts.p());
  for (int k = 1; k <= max_order; ++k) out.values.push_back(fuss_narayana_poly(p, k).evaluate(ts.entries()));
  return out;
}

STransformReport s_transform_check(const ShapeVector& ts, int max_order) {
  if (max_order < 2) throw std::invalid_argument("s_transform_check: order must be at least 2");
  STransformReport report;
  const int order = max_order;
  const ScalarSeries psi = psi_series(ts, order);

  ScalarSeries z(order, Rational(0));
  z[1] = 1;
  auto linear = [&](const Rational& c) {
    ScalarSeries s = ScalarSeries::constant(order, 0, c);
    s[1] = 1;
    return s;
  };

  ScalarSeries denominator = linear(1);
  for (const auto& t : ts.entries()) denominator = denominator * linear(t);
  const ScalarSeries inverse = z * series_reciprocal(denominator);

  report.composition_identity = series_compose(psi, inverse) == z && series_compose(inverse, psi) == z;
  report.reversion_matches = series_reversion(psi) == inverse;

  // S(z) = (1 + z)/z * psi^{-1}(z); the division by z is a shift down.
  ScalarSeries reverted = series_reversion(psi);
  ScalarSeries over_z(order, Rational(0));
  for (int n = 0; n < order; ++n) over_z[n] = reverted[n + 1];
  const ScalarSeries s_total = linear(1) * over_z;
  ScalarSeries s_product = ScalarSeries::constant(order, 0, 1);
  for (const auto& t : ts.entries()) s_product = s_product * series_reciprocal(linear(t));
  // over_z loses its top coefficient, so compare below the top degree.
  bool equal = true;
  for (int n = 0; n < order; ++n) equal = equal && s_total[n] == s_product[n];
  report.multiplicativity = equal;

  bool single = true;
  for (const auto& t : ts.entries()) {
    for (const Rational& point : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
      const Rational s_value = 1 / (point + t);
      single = single && s_value * (point + t) == 1;
    }
  }
  report.single_factor_identity = single;

  // Without the factor z the expression has a nonzero constant term and so
  // cannot be the compositional inverse of a series vanishing at 0.
  const ScalarSeries displayed = series_reciprocal(denominator);
  report.displayed_form_invertible = displayed[0] == 0 && displayed[1] != 0;
  report.notes.push_back(
      "psi^{-1}(z) = 1/((z+1)(z+t_1)...(z+t_p)) has constant term " + to_string(displayed[0]) +
      " and cannot invert psi; the z-restored form z/((z+1)(z+t_1)...(z+t_p)) is used");
  return report;
}

namespace {

template <class F>
QuadratureMoment integrate_theta(F&& f, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  QuadratureMoment out;
  double l1 = 0.0;
  out.value = gauss_kronrod<double, 31>::integrate(f, -std::numbers::pi / 2, std::numbers::pi / 2, 20, rel_tol,
                                                    &out.error_estimate, &l1);
  out.converged = out.error_estimate <= rel_tol * std::max(std::abs(out.value), 1e-300) ||
                  out.error_estimate <= rel_tol * l1;
  return out;
}

}  // namespace

std::vector<QuadratureMoment> quadrature_moments(double t, int max_order, double rel_tol) {
  if (max_order < 1 || max_order > 8) throw std::invalid_argument("quadrature_moments: order must be in [1, 8]");
  const MpLaw law(t);
  const double half_width = (law.b - law.a) / 2;
  const double mid = (law.a + law.b) / 2;
  std::vector<QuadratureMoment> out;
  for (int k = 1; k <= max_order; ++k) {
    // x^k * density * dx = x^{k-1} * (half_width cos)^2 / (2 pi) dtheta
    auto integrand = [&](double theta) {
      const double x = mid + half_width * std::sin(theta);
      const double c = half_width * std::cos(theta);
      return std::pow(x, k - 1) * c * c / (2.0 * std::numbers::pi);
    };
    out.push_back(integrate_theta(integrand, rel_tol));
  }
  return out;
}

QuadratureMoment quadrature_mass(double t, double rel_tol) {
  const MpLaw law(t);
  const double half_width = (law.b - law.a) / 2;
  const double mid = (law.a + law.b) / 2;
  auto integrand = [&](double theta) {
    const double x = mid + half_width * std::sin(theta);
    const double c = half_width * std::cos(theta);
    return x > 0 ? c * c / (2.0 * std::numbers::pi * x) : 0.0;
  };
  return integrate_theta(integrand, rel_tol);
}

}  // namespace fnpoly
