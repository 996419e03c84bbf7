#include "fnpoly/exact.hpp"

#include <cctype>
#include <numeric>

#include "fnpoly/multipoly.hpp"

namespace fnpoly {

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();

  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };

  Rational result;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    if (!digits(pos, slash) || !digits(slash + 1, text.size())) return fail();
    Integer num(text.substr(pos, slash - pos));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const bool has_int = dot > pos;
    const bool has_frac = dot + 1 < text.size();
    if ((!has_int && !has_frac) || (has_int && !digits(pos, dot)) ||
        (has_frac && !digits(dot + 1, text.size())))
      return fail();
    const std::string frac = text.substr(dot + 1);
    Integer num(has_int ? text.substr(pos, dot - pos) : std::string("0"));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    if (has_frac) num = num * scale + Integer(frac);
    result = Rational(num, scale);
  } else {
    if (!digits(pos, text.size())) return fail();
    result = Rational(Integer(text.substr(pos)));
  }
  return negative ? Rational(-result) : result;
}

Integer require_integer(const Rational& value, const std::string& what) {
  if (boost::multiprecision::denominator(value) != 1)
    throw IntegralityError(what + " is not an integer: " + to_string(value));
  return boost::multiprecision::numerator(value);
}

Integer binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  // result * (n - i) is always divisible by (i + 1): it equals C(n, i+1) * (i+1).
  for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

Integer fuss_catalan(int p, int k) {
  if (p < 1 || k < 1) throw std::invalid_argument("fuss_catalan: p and k must be positive");
  const Rational value(binomial((p + 1) * k, p * k + 1), Integer(k));
  return require_integer(value, "Fuss-Catalan number");
}

Rational gfn_rational(int k, std::span<const int> j) {
  if (k < 1) throw std::invalid_argument("gfn_number: k must be positive");
  if (j.size() < 2) throw std::invalid_argument("gfn_number: index vector needs length p + 1 >= 2");
  const int p = static_cast<int>(j.size()) - 1;
  if (std::accumulate(j.begin(), j.end(), 0) != p * k + 1) return 0;
  Integer product = 1;
  for (int ji : j) {
    if (ji < 1 || ji > k) return 0;
    product *= binomial(k, ji);
  }
  return Rational(product, Integer(k));
}

Integer gfn_number(int k, std::span<const int> j) {
  return require_integer(gfn_rational(k, j), "generalized Fuss-Narayana number");
}

Decomposition vandermonde_check(int p, int k) {
  Decomposition out{0, fuss_catalan(p, k)};
  for_each_composition(p + 1, p * k + 1, 1, k, [&](const IndexVector& j) { out.sum += gfn_number(k, j); });
  return out;
}

MultiPoly closed_form_Pk(int p, int k) {
  if (p < 1) throw std::invalid_argument("closed_form_Pk: p must be positive");
  if (k < 0) throw std::invalid_argument("closed_form_Pk: k must be nonnegative");
  const auto vars = static_cast<std::size_t>(p + 1);
  if (k == 0) return MultiPoly::constant(vars, 1);

  MultiPoly out(vars);
  for_each_composition(p + 1, p * k, 0, k, [&](const IndexVector& j) {
    IndexVector shifted = j;
    shifted[0] += 1;
    const Integer c = gfn_number(k, shifted);
    if (c != 0) out.add_term(j, Rational(c));
  });
  return out;
}

MultiPoly fuss_narayana_poly(int p, int k) { return closed_form_Pk(p, k).eliminate(0, 1); }

}  // namespace fnpoly
