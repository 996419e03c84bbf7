#include "fnpoly/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace fnpoly {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& value) {
  MultiPoly out(num_vars);
  out.add_term(Exponents(num_vars, 0), value);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rational& coeff) {
  MultiPoly out(exponents.size());
  out.add_term(exponents, coeff);
  return out;
}

Rational MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != num_vars_) throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (other.num_vars_ != num_vars_)
    throw std::invalid_argument("MultiPoly: arity mismatch (" + std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.num_vars_);
  MultiPoly::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
  MultiPoly out(num_vars_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (int r = 0; r < e[i]; ++r) term *= point[i];
    total += term;
  }
  return total;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.convert_to<double>();
    for (std::size_t i = 0; i < num_vars_; ++i) term *= std::pow(point[i], e[i]);
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::eliminate(std::size_t index, const Rational& value) const {
  if (index >= num_vars_) throw std::out_of_range("MultiPoly::eliminate: index out of range");
  MultiPoly out(num_vars_ - 1);
  Exponents reduced(num_vars_ - 1);
  for (const auto& [e, c] : terms_) {
    Rational factor = c;
    for (int r = 0; r < e[index]; ++r) factor *= value;
    std::copy(e.begin(), e.begin() + static_cast<long>(index), reduced.begin());
    std::copy(e.begin() + static_cast<long>(index) + 1, e.end(), reduced.begin() + static_cast<long>(index));
    out.add_term(reduced, factor);
  }
  return out;
}

MultiPoly MultiPoly::divide_by_variable(std::size_t index) const {
  if (index >= num_vars_) throw std::out_of_range("MultiPoly::divide_by_variable: index out of range");
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) throw std::domain_error("MultiPoly::divide_by_variable: not divisible");
    Exponents lowered = e;
    --lowered[index];
    out.terms_.emplace(std::move(lowered), c);
  }
  return out;
}

MultiPoly MultiPoly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != num_vars_) throw std::invalid_argument("MultiPoly::permuted: arity mismatch");
  MultiPoly out(num_vars_);
  Exponents moved(num_vars_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) moved[i] = e.at(perm[i]);
    out.add_term(moved, c);
  }
  return out;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

bool MultiPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
    return std::accumulate(term.first.begin(), term.first.end(), 0) == degree;
  });
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return boost::multiprecision::denominator(term.second) == 1; });
}

std::vector<std::string> d_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("d" + std::to_string(i));
  return out;
}

std::vector<std::string> t_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

std::string to_string(const MultiPoly& poly, std::span<const std::string> names) {
  if (names.size() != poly.num_vars()) throw std::invalid_argument("to_string: wrong number of variable names");
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    Rational magnitude = c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude < 0) magnitude = -magnitude;
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

MultiPoly parse_poly(const std::string& text, std::span<const std::string> names) {
  std::string s;
  for (char ch : text)
    if (ch != '_' && ch != '{' && ch != '}') s += ch;

  MultiPoly out(names.size());
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };

  skip_space();
  if (pos == s.size()) fail("empty polynomial");
  int sign = 1;
  while (true) {
    skip_space();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      skip_space();
    }
    Rational coeff = 1;
    MultiPoly::Exponents e(names.size(), 0);
    bool any_factor = false;
    while (pos < s.size()) {
      skip_space();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_space();
      }
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') break;
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::string num = read_int();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          num += "/" + read_int();
        }
        coeff *= parse_rational(num);
      } else {
        std::size_t best = names.size();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i].size() > best_len && s.compare(pos, names[i].size(), names[i]) == 0) {
            best = i;
            best_len = names[i].size();
          }
        }
        if (best == names.size()) fail("unknown variable");
        pos += best_len;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = std::stoi(read_int());
        }
        e[best] += power;
      }
      any_factor = true;
    }
    if (!any_factor) fail("expected a term");
    out.add_term(e, coeff * sign);
    sign = 1;
    skip_space();
    if (pos >= s.size()) break;
  }
  return out;
}

}  // namespace fnpoly
