// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fnpoly/fnpoly.hpp"

using namespace fnpoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.ok = false;
    out.detail += " [time limit " + std::to_string(limit_seconds) + " s exceeded]";
  }
  if (!out.ok) ++failures;
  std::printf("AC%-2d %s  %-34s %7.2fs  %s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(), secs, out.detail.c_str());
  std::fflush(stdout);
}

// Denominators seen anywhere in criteria 1-6 (checked in criterion 10).
long integrality_checks = 0;
std::vector<std::string> integrality_failures;

void tripwire(const Rational& value, const std::string& where) {
  ++integrality_checks;
  if (boost::multiprecision::denominator(value) != 1) integrality_failures.push_back(where);
}

void tripwire(const MultiPoly& poly, const std::string& where) {
  for (const auto& [e, c] : poly.terms()) tripwire(c, where);
}

std::string pk(int p, int k) { return "p=" + std::to_string(p) + " k=" + std::to_string(k); }

void tripwire_gfn(int p, int k) {
  for_each_composition(p + 1, p * k + 1, 1, k, [&](const IndexVector& j) {
    tripwire(gfn_rational(k, j), "N " + pk(p, k));
  });
}

Outcome golden() {
  const auto d = d_names(3);
  const auto t = t_names(2);
  struct Case {
    std::string name;
    MultiPoly computed;
    std::string reference;
    std::span<const std::string> names;
  };
  const std::vector<Case> cases{
      {"P2", closed_form_Pk(2, 2), "d_1^2 d_2^2 + d_0 d_1 d_2^2 + d_0 d_1^2 d_2", d},
      {"P3", closed_form_Pk(2, 3),
       "d_1^3 d_2^3 + 3 d_0 d_1^2 d_2^3 + 3 d_0 d_1^3 d_2^2 + d_0^2 d_1 d_2^3 + 3 d_0^2 d_1^2 d_2^2 + d_0^2 d_1^3 d_2", d},
      {"F2", fuss_narayana_poly(2, 2), "t_1^2 t_2^2 + t_1 t_2^2 + t_1^2 t_2", t},
      {"F3", fuss_narayana_poly(2, 3),
       "t_1^3 t_2^3 + t_1 t_2^3 + t_1^3 t_2 + 3 t_1^2 t_2^2 + 3 t_1^2 t_2^3 + 3 t_1^3 t_2^2", t},
  };
  Outcome out;
  for (const auto& c : cases) {
    tripwire(c.computed, c.name);
    const std::string got = canonical_json(c.computed, c.names);
    const std::string want = canonical_json(parse_poly(c.reference, c.names), c.names);
    if (got != want) {
      out.ok = false;
      out.detail += c.name + " mismatch; ";
    }
  }
  tripwire_gfn(2, 2);
  tripwire_gfn(2, 3);
  if (out.ok) out.detail = "P2 P3 F2 F3 byte-identical";
  return out;
}

Outcome counts() {
  Outcome out;
  if (count_adapted({2, 0, 2}) != 3 || count_adapted({2, 0, 3}) != 12) {
    out.ok = false;
    out.detail = "example counts wrong; ";
  }
  int cases = 0;
  for (int p = 1; p <= 3; ++p)
    for (int k = 1; 2 * p * k <= 16; ++k) {
      ++cases;
      if (count_adapted({p, 0, k}) != fuss_catalan(p, k)) {
        out.ok = false;
        out.detail += pk(p, k) + " ";
      }
    }
  if (out.ok) out.detail = "3, 12 and " + std::to_string(cases) + " Fuss-Catalan cases";
  return out;
}

Outcome three_way() {
  Outcome out;
  int cases = 0;
  for (int p = 1; p <= 3; ++p) {
    const int k_max = 16 / (2 * p);
    const PolySeries g = solve_functional_equation(p, k_max);
    for (int k = 1; k <= k_max; ++k) {
      ++cases;
      const MultiPoly closed = closed_form_Pk(p, k);
      const MultiPoly brute = brute_force_Pk(p, k);
      const MultiPoly series = g[k].divide_by_variable(0);
      tripwire(closed, "closed " + pk(p, k));
      tripwire(lagrange_coefficient_rational(p, k), "lagrange " + pk(p, k));
      tripwire_gfn(p, k);
      if (!(brute == closed && series == closed)) {
        out.ok = false;
        out.detail += pk(p, k) + " ";
      }
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " (p,k) cases agree";
  return out;
}

Outcome lemmas() {
  VerificationReport all{"lemmas", 0, {}};
  for (int p = 1; p <= 3; ++p) {
    const int k_max = p == 1 ? 4 : 2;
    all.merge(verify_lemma_31(p, k_max));
    all.merge(verify_lemma_32(p, k_max));
  }
  Outcome out{all.passed(), std::to_string(all.checks) + " checks, " + std::to_string(all.failures.size()) + " mismatches"};
  if (!all.passed()) out.detail += ": " + all.failures.front();
  return out;
}

Outcome vandermonde() {
  Outcome out;
  for (int p = 1; p <= 4; ++p)
    for (int k = 1; k <= 6; ++k) {
      tripwire_gfn(p, k);
      if (!vandermonde_check(p, k).holds()) {
        out.ok = false;
        out.detail += pk(p, k) + " ";
      }
    }
  if (out.ok) out.detail = "p <= 4, k <= 6";
  return out;
}

Outcome free_identity() {
  Outcome out;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(1, 12), den(1, 7);
  auto random_ts = [&](int p) {
    std::vector<Rational> ts;
    for (int i = 0; i < p; ++i) ts.emplace_back(num(rng), den(rng));
    return ts;
  };
  int cases = 0;
  for (int p = 1; p <= 4; ++p)
    for (int trial = 0; trial < 5; ++trial) {
      const ShapeVector ts(random_ts(p));
      const auto psi = psi_moments(ts, 8);
      const auto closed = convolution_moments_closed(ts, 8);
      ++cases;
      if (psi.values != closed.values) {
        out.ok = false;
        out.detail += "p=" + std::to_string(p) + " ";
      }
    }
  for (int p = 1; p <= 4; ++p)
    for (int k = 1; k <= 8; ++k) tripwire(fuss_narayana_poly(p, k), "F " + pk(p, k));

  const auto names = t_names(3);
  const MultiPoly m2 = parse_poly("t_1^2 t_2^2 t_3^2 + t_1 t_2^2 t_3^2 + t_1^2 t_2 t_3^2 + t_1^2 t_2^2 t_3", names);
  for (int sample = 0; sample < 5; ++sample) {
    const auto ts = random_ts(3);
    if (psi_moments(ShapeVector(ts), 2).moment(2) != m2.evaluate(ts)) {
      out.ok = false;
      out.detail += "m2 sample " + std::to_string(sample) + " ";
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " shape vectors, K = 8; m2 at 5 points";
  return out;
}

Outcome quadrature() {
  Outcome out;
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 2.0}) {
    const auto numeric = quadrature_moments(t, 6);
    for (int k = 1; k <= 6; ++k) {
      double exact = 0.0;
      for (int j = 1; j <= k; ++j)
        exact += (binomial(k, j) * binomial(k, j - 1) / k).convert_to<double>() * std::pow(t, j);
      const double rel = std::abs(numeric[static_cast<std::size_t>(k - 1)].value - exact) / exact;
      worst = std::max(worst, rel);
    }
  }
  out.ok = worst <= 1e-8;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "max relative error %.2e", worst);
  out.detail = buffer;
  return out;
}

Outcome monte_carlo() {
  const std::vector<double> d{1.0, 1.5, 0.5};
  auto make = [&](int n) {
    McConfig c;
    c.profile = DimensionProfile::make(d, n);
    c.trials = 200;
    c.seed = 7;
    c.k_max = 3;
    return c;
  };
  Outcome out;
  const McResult main = run_experiment(make(300));
  char buffer[96];
  for (const auto& m : main.moments) {
    std::snprintf(buffer, sizeof buffer, "z%d=%+.2f ", m.k, m.z);
    out.detail += buffer;
    if (!(std::abs(m.z) <= 3.0)) out.ok = false;
  }
  const double coarse = std::abs(run_experiment(make(50)).moments[1].mean - main.moments[1].target);
  const double fine = std::abs(run_experiment(make(400)).moments[1].mean - main.moments[1].target);
  std::snprintf(buffer, sizeof buffer, "|dev2| n=50 %.4f, n=400 %.4f", coarse, fine);
  out.detail += buffer;
  if (!(fine < coarse)) out.ok = false;
  return out;
}

Outcome phi_bijection() {
  Outcome out;
  long checked = 0;
  for (int p = 1; p <= 6; ++p)
    for (int k = 1; 2 * p * k <= 12; ++k) {
      const Word w0 = build_word({p, 0, k});
      for (int i = 1; i <= p; ++i) {
        const Word wi = build_word({p, i, k});
        std::set<PairPartition> images;
        for (const auto& pi : enumerate_adapted(WordSpec{p, i, k})) {
          ++checked;
          PairPartition image = pi;
          for (int step = 0; step < i; ++step) image = phi(image);
          PairPartition back = image;
          for (int step = 0; step < i; ++step) back = phi_inverse(back);
          IndexVector expected = leg_profile(pi, wi, p);
          --expected[0];
          ++expected[static_cast<std::size_t>(i)];
          const bool ok = back == pi && image.is_adapted_to(w0) && image.is_noncrossing() &&
                          leg_profile(image, w0, p) == expected;
          if (!ok) {
            out.ok = false;
            out.detail = pk(p, k) + " i=" + std::to_string(i) + " " + to_string(pi);
            return out;
          }
          images.insert(image);
        }
        if (Integer(images.size()) != count_adapted({p, 0, k})) {
          out.ok = false;
          out.detail = "not onto for " + pk(p, k) + " i=" + std::to_string(i);
          return out;
        }
      }
    }
  out.detail = std::to_string(checked) + " partitions";
  return out;
}

Outcome integrality() {
  Outcome out{integrality_failures.empty(), std::to_string(integrality_checks) + " values checked"};
  if (!out.ok) out.detail += ", first non-integer at " + integrality_failures.front();
  return out;
}

}  // namespace

int main() {
  run(1, "golden polynomials", 1, golden);
  run(2, "partition counts", 60, counts);
  run(3, "three-way oracle agreement", 0, three_way);
  run(4, "shift and recurrence identities", 60, lemmas);
  run(5, "Vandermonde decomposition", 1, vandermonde);
  run(6, "free-probability identity", 0, free_identity);
  run(7, "quadrature cross-check", 10, quadrature);
  run(8, "Monte Carlo gate", 120, monte_carlo);
  run(9, "phi bijection", 0, phi_bijection);
  run(10, "integrality tripwire", 0, integrality);
  std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
  return failures == 0 ? 0 : 1;
}
