#pragma once

#include <string>
#include <vector>

#include "fnpoly/exact.hpp"
#include "fnpoly/series.hpp"

namespace fnpoly {

/// Shape parameters (t_1, ..., t_p) of the Marchenko-Pastur factors. All
/// entries must be positive.
class ShapeVector {
 public:
  explicit ShapeVector(std::vector<Rational> entries);

  std::size_t p() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<double> as_double() const;

 private:
  std::vector<Rational> entries_;
};

/// m_1, ..., m_K of rho_{t_1} boxtimes ... boxtimes rho_{t_p}.
struct MomentTable {
  std::vector<Rational> values;  // values[k - 1] = m_k
  ShapeVector params;

  int max_order() const { return static_cast<int>(values.size()); }
  const Rational& moment(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// Marchenko-Pastur law with shape t: an atom of mass max(1 - t, 0) at 0
/// plus a density on [(1 - sqrt t)^2, (1 + sqrt t)^2].
struct MpLaw {
  double t;
  double atom_mass;
  double a;
  double b;

  explicit MpLaw(double shape);
  double continuous_mass() const { return 1.0 - atom_mass; }
};

/// sqrt((x - a)(b - x)) / (2 pi x) on [a, b], zero elsewhere.
double mp_density(double t, double x);

/// Moments from the fixed point psi = z (psi + 1) prod_i (psi + t_i).
MomentTable psi_moments(const ShapeVector& ts, int max_order);

/// psi(z) = sum_k m_k z^k, truncated at `max_order`.
ScalarSeries psi_series(const ShapeVector& ts, int max_order);

/// F_k(t_1, ..., t_p) for k = 1..max_order.
MomentTable convolution_moments_closed(const ShapeVector& ts, int max_order);

struct STransformReport {
  bool composition_identity = false;      // psi(psi^{-1}(z)) = z with psi^{-1} = z / ((z+1) prod (z+t_i))
  bool reversion_matches = false;         // series reversion of psi equals that closed form
  bool multiplicativity = false;          // S = (1+z)/z psi^{-1} equals prod_i 1/(z + t_i)
  bool single_factor_identity = false;    // S_{rho_t}(z) (z + t) = 1 at sample points
  bool displayed_form_invertible = false;  // 1/((z+1) prod (z+t_i)) without the z factor
  std::vector<std::string> notes;

  bool passed() const {
    return composition_identity && reversion_matches && multiplicativity && single_factor_identity &&
           !displayed_form_invertible;
  }
};

/// Checks the S-transform relations as exact truncated-series identities.
STransformReport s_transform_check(const ShapeVector& ts, int max_order);

struct QuadratureMoment {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// int x^k d rho_t for k = 1..max_order (max_order <= 8) by adaptive
/// Gauss-Kronrod quadrature after x = ((a+b) + (b-a) sin theta) / 2.
std::vector<QuadratureMoment> quadrature_moments(double t, int max_order, double rel_tol = 1e-10);

/// Continuous mass int_a^b density, by the same quadrature.
QuadratureMoment quadrature_mass(double t, double rel_tol = 1e-10);

}  // namespace fnpoly
