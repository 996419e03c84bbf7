#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnpoly/exact.hpp"

namespace fnpoly {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by dense exponent vectors of length num_vars() and kept
/// in descending lexicographic order, which is also the serialization
/// order. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& value);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(Exponents exponents, const Rational& coeff);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& exponents) const;

  /// Adds coeff * x^exponents, merging with any existing term.
  void add_term(const Exponents& exponents, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly scaled(const Rational& factor) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Fixes variable `index` to `value` and removes it (num_vars - 1 vars).
  MultiPoly eliminate(std::size_t index, const Rational& value) const;

  /// Exact division by the variable `index`; every term must contain it.
  MultiPoly divide_by_variable(std::size_t index) const;

  /// Variable i of the result is variable perm[i] of *this.
  MultiPoly permuted(std::span<const std::size_t> perm) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  bool has_integer_coefficients() const;

 private:
  void check_arity(const MultiPoly& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// d0, d1, ..., d{count-1}
std::vector<std::string> d_names(std::size_t count);
/// t1, ..., t{count}
std::vector<std::string> t_names(std::size_t count);

/// Human-readable form, e.g. "d1^2*d2^2 + d0*d1*d2^2 + d0*d1^2*d2".
std::string to_string(const MultiPoly& poly, std::span<const std::string> names);

/// Inverse of to_string. Accepts '*' or whitespace between factors, an
/// optional leading integer or rational coefficient, and '_' inside
/// variable names ("d_1^2 d_2" and "d1^2*d2" both parse).
MultiPoly parse_poly(const std::string& text, std::span<const std::string> names);

}  // namespace fnpoly
