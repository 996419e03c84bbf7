#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fnpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class MultiPoly;

/// Raised when a quantity that must be an integer comes out with a
/// denominator other than 1.
class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent/index vector (j_0, ..., j_p). Length is p + 1.
using IndexVector = std::vector<int>;

/// Decimal string for integers, "num/den" otherwise.
std::string to_string(const Rational& value);

/// Parses "12", "-3/4" or a plain decimal such as "0.25" exactly.
Rational parse_rational(const std::string& text);

/// Returns the numerator of `value`, throwing IntegralityError if the
/// denominator is not 1. `what` names the quantity in the message.
Integer require_integer(const Rational& value, const std::string& what);

// C(n, k) via the multiplicative formula; 0 outside 0 <= k <= n.
Integer binomial(int n, int k);

/// Number of adapted noncrossing pair partitions of (1..p p*..1*)^k,
/// i.e. (1/k) C((p+1)k, pk+1). Requires p >= 1 and k >= 1.
Integer fuss_catalan(int p, int k);

/// Unreduced value (1/k) prod_i C(k, j_i) before the integrality check.
/// Zero outside the support (sum j = pk+1 and every j_i in [1, k]).
Rational gfn_rational(int k, std::span<const int> j);

/// Generalized Fuss-Narayana number N(k, j); p is implied by j.size() - 1.
Integer gfn_number(int k, std::span<const int> j);

struct Decomposition {
  Integer sum;           // sum of N(k, j) over j_0 + ... + j_p = pk + 1
  Integer fuss_catalan;  // (1/k) C((p+1)k, pk+1)

  bool holds() const { return sum == fuss_catalan; }
};

Decomposition vandermonde_check(int p, int k);

/// Calls `visit` for every index vector of length `len` with entries in
/// [lo, hi] summing to `total`, in ascending lexicographic order.
template <class Visit>
void for_each_composition(int len, int total, int lo, int hi, Visit&& visit) {
  IndexVector j(static_cast<std::size_t>(len), lo);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == len - 1) {
      if (remaining >= lo && remaining <= hi) {
        j[static_cast<std::size_t>(pos)] = remaining;
        visit(static_cast<const IndexVector&>(j));
      }
      return;
    }
    for (int v = lo; v <= hi && v <= remaining - lo * (len - pos - 1); ++v) {
      j[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (len > 0) rec(rec, 0, total);
}

/// P_k(d_0, ..., d_p) from the closed-form coefficients
/// N_0(k, j) = (1/k) C(k, j_0 + 1) prod_{i >= 1} C(k, j_i).
/// Homogeneous of total degree pk; P_0 = 1.
MultiPoly closed_form_Pk(int p, int k);

/// F_k(t_1, ..., t_p) = P_k(1, t_1, ..., t_p).
MultiPoly fuss_narayana_poly(int p, int k);

}  // namespace fnpoly
