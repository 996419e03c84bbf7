#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fnpoly/exact.hpp"
#include "fnpoly/multipoly.hpp"

namespace fnpoly {

namespace detail {
inline std::size_t shape_of(const MultiPoly& c) { return c.num_vars(); }
inline std::size_t shape_of(const Rational&) { return 0; }
inline bool is_zero(const MultiPoly& c) { return c.is_zero(); }
inline bool is_zero(const Rational& c) { return c == 0; }
inline MultiPoly one_like(const MultiPoly& zero) { return MultiPoly::constant(zero.num_vars(), 1); }
inline Rational one_like(const Rational&) { return 1; }
}  // namespace detail

/// Formal power series in x truncated after x^order. Coefficients are
/// either MultiPoly (symbolic) or Rational (evaluated at a point).
template <class Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(int order, Coeff zero)
      : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1, zero), zero_(std::move(zero)) {}

  /// c + 0*x + ... truncated at `order`.
  static TruncatedSeries constant(int order, const Coeff& zero, const Coeff& c) {
    TruncatedSeries s(order, zero);
    s[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& zero() const { return zero_; }
  std::size_t shape() const { return detail::shape_of(zero_); }

  const Coeff& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Coeff& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_shape(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_shape(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  /// Cauchy product, discarding x-degrees above order().
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_shape(b);
    TruncatedSeries out(a.order(), a.zero_);
    const int order = a.order();
    for (int i = 0; i <= order; ++i) {
      if (detail::is_zero(a[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (detail::is_zero(b[j])) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  /// Multiplies by x (drops the top coefficient).
  TruncatedSeries shifted() const {
    TruncatedSeries out(order(), zero_);
    for (int n = order(); n >= 1; --n) out[n] = (*this)[n - 1];
    return out;
  }

  /// Multiplies every coefficient by a constant.
  TruncatedSeries times(const Coeff& c) const {
    TruncatedSeries out(order(), zero_);
    for (int n = 0; n <= order(); ++n) out[n] = (*this)[n] * c;
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!detail::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static int checked_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return order;
  }
  void check_shape(const TruncatedSeries& o) const {
    if (o.order() != order() || o.shape() != shape())
      throw std::invalid_argument("series shape mismatch");
  }

  std::vector<Coeff> coeffs_;
  Coeff zero_;
};

using PolySeries = TruncatedSeries<MultiPoly>;
using ScalarSeries = TruncatedSeries<Rational>;

/// Product of two series; throws std::invalid_argument on order or arity
/// mismatch.
template <class Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  return a * b;
}

/// Solves g = x * prod_i (g + dims[i]) for g(0) = 0 modulo x^{order+1} by
/// fixed-point iteration from g = 0. Each pass fixes one more coefficient,
/// so `order` passes are enough.
template <class Coeff>
TruncatedSeries<Coeff> fixed_point_series(const std::vector<Coeff>& dims, int order, const Coeff& zero) {
  TruncatedSeries<Coeff> g(order, zero);
  for (int pass = 0; pass < order; ++pass) {
    auto rhs = TruncatedSeries<Coeff>::constant(order, zero, detail::one_like(zero));
    for (const auto& d : dims) {
      auto factor = g;
      factor[0] += d;
      rhs = rhs * factor;
    }
    g = rhs.shifted();
  }
  return g;
}

/// g(x) for g = x * prod_{i=0}^{p} (g + d_i), coefficients in d_0..d_p.
/// The coefficient of x^k is R_k = sum N(k, j) d^j.
PolySeries solve_functional_equation(int p, int order);

/// Residual g - x * prod (g + d_i) truncated at the series order.
PolySeries functional_equation_residual(const PolySeries& g);

/// Unreduced (1/n) [lambda^{n-1}] prod_{i=0}^{p} (lambda + d_i)^n.
MultiPoly lagrange_coefficient_rational(int p, int n);

/// Same as lagrange_coefficient_rational, with every coefficient checked to
/// be an integer (throws IntegralityError otherwise).
MultiPoly lagrange_coefficient(int p, int n);

/// 1/s for a series with invertible constant term.
ScalarSeries series_reciprocal(const ScalarSeries& s);

/// outer(inner(x)); inner must have zero constant term.
ScalarSeries series_compose(const ScalarSeries& outer, const ScalarSeries& inner);

/// Compositional inverse of a series s = a_1 x + ... with a_1 != 0.
ScalarSeries series_reversion(const ScalarSeries& s);

}  // namespace fnpoly
