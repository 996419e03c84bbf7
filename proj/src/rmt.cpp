#include "fnpoly/rmt.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/random/normal_distribution.hpp>
#include <nlohmann/json.hpp>

#include "fnpoly/exact.hpp"
#include "fnpoly/multipoly.hpp"

namespace fnpoly {

namespace {

constexpr long kMaxMatrixEntries = 50'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

DimensionProfile DimensionProfile::make(std::vector<double> d, int n) {
  if (d.size() < 2) throw std::invalid_argument("DimensionProfile: need at least two dimensions (p >= 1)");
  if (n < 1) throw std::invalid_argument("DimensionProfile: scale n must be positive");
  DimensionProfile out;
  out.p = static_cast<int>(d.size()) - 1;
  out.n = n;
  for (double dj : d) {
    if (!(dj > 0) || !std::isfinite(dj)) throw std::invalid_argument("DimensionProfile: dimensions must be positive");
    const double scaled = std::floor(dj * n + 0.5);
    if (scaled > static_cast<double>(std::numeric_limits<int>::max()))
      throw std::invalid_argument("DimensionProfile: dimension overflow");
    out.realized.push_back(std::max(1L, static_cast<long>(scaled)));
  }
  out.d = std::move(d);
  return out;
}

std::vector<double> DimensionProfile::realized_ratios() const {
  std::vector<double> out;
  for (long nj : realized) out.push_back(static_cast<double>(nj) / n);
  return out;
}

void McConfig::validate() const {
  if (profile.p < 1 || profile.realized.size() != static_cast<std::size_t>(profile.p + 1))
    throw std::invalid_argument("McConfig: invalid dimension profile");
  if (k_max < 1) throw std::invalid_argument("McConfig: k_max must be positive");
  if (trials < 2) throw std::invalid_argument("McConfig: need at least two trials");
  if (threads < 1) throw std::invalid_argument("McConfig: threads must be positive");
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

std::string to_string(Ensemble ensemble) {
  return ensemble == Ensemble::complex_gaussian ? "complex" : "real";
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "complex") return Ensemble::complex_gaussian;
  if (name == "real") return Ensemble::real_gaussian;
  throw std::invalid_argument("unknown ensemble '" + name + "' (expected complex or real)");
}

Eigen::MatrixXcd sample_product(const DimensionProfile& profile, std::mt19937_64& engine, Ensemble ensemble) {
  const auto& dims = profile.realized;
  for (std::size_t j = 1; j < dims.size(); ++j)
    if (dims[j - 1] * dims[j] > kMaxMatrixEntries) throw std::length_error("sample_product: matrix too large");
  const bool complex = ensemble == Ensemble::complex_gaussian;
  const double variance = 1.0 / static_cast<double>(profile.n);
  boost::random::normal_distribution<double> normal(0.0, std::sqrt(complex ? variance / 2 : variance));
  auto gaussian = [&](long rows, long cols) {
    Eigen::MatrixXcd x(rows, cols);
    // Column-major fill order, real part before imaginary part, is part of
    // the reproducibility contract.
    for (long c = 0; c < cols; ++c)
      for (long r = 0; r < rows; ++r) {
        const double re = normal(engine);
        const double im = complex ? normal(engine) : 0.0;
        x(r, c) = {re, im};
      }
    return x;
  };
  Eigen::MatrixXcd b = gaussian(dims[0], dims[1]);
  for (std::size_t j = 2; j < dims.size(); ++j) b = b * gaussian(dims[j - 1], dims[j]);
  return b;
}

namespace {

// Tr(M^k) = <M^a, M^b> with a + b = k, so only powers up to ceil(k_max/2)
// are formed. M is Hermitian, hence Tr(M^a M^b) = sum conj(M^a) .* M^b.
std::vector<double> gram_trace_powers(const Eigen::MatrixXcd& gram, double normalizer, int k_max) {
  std::vector<Eigen::MatrixXcd> powers{gram};
  while (static_cast<int>(powers.size()) < (k_max + 1) / 2) powers.push_back(powers.back() * gram);
  std::vector<double> out;
  for (int k = 1; k <= k_max; ++k) {
    double trace = 0.0;
    if (k == 1) {
      trace = gram.trace().real();
    } else {
      const auto& a = powers[static_cast<std::size_t>((k + 1) / 2 - 1)];
      const auto& b = powers[static_cast<std::size_t>(k / 2 - 1)];
      trace = a.cwiseProduct(b.conjugate()).sum().real();
    }
    out.push_back(trace / normalizer);
  }
  return out;
}

}  // namespace

std::vector<double> trace_moments_left(const Eigen::MatrixXcd& b, int k_max) {
  return gram_trace_powers(b * b.adjoint(), static_cast<double>(b.rows()), k_max);
}

std::vector<double> trace_moments_right(const Eigen::MatrixXcd& b, int k_max) {
  return gram_trace_powers(b.adjoint() * b, static_cast<double>(b.rows()), k_max);
}

std::vector<double> trace_moments(const Eigen::MatrixXcd& b, int k_max) {
  if (k_max < 1) throw std::invalid_argument("trace_moments: k_max must be positive");
  return b.cols() < b.rows() ? trace_moments_right(b, k_max) : trace_moments_left(b, k_max);
}

std::vector<double> limit_targets(const std::vector<double>& d, int k_max) {
  const int p = static_cast<int>(d.size()) - 1;
  std::vector<double> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(closed_form_Pk(p, k).evaluate(std::span<const double>(d)));
  return out;
}

McResult run_experiment(const McConfig& config) {
  config.validate();
  const auto trials = static_cast<std::size_t>(config.trials);
  const auto orders = static_cast<std::size_t>(config.k_max);
  // samples[k][r]: moment k+1 of trial r
  std::vector<std::vector<double>> samples(orders, std::vector<double>(trials));
  std::vector<double> gaps(trials, 0.0);

  auto run_trial = [&](std::size_t r) {
    auto engine = trial_engine(config.seed, r);
    const Eigen::MatrixXcd b = sample_product(config.profile, engine, config.ensemble);
    const auto left = trace_moments_left(b, config.k_max);
    const auto right = trace_moments_right(b, config.k_max);
    double gap = 0.0;
    for (std::size_t k = 0; k < orders; ++k) {
      samples[k][r] = b.cols() < b.rows() ? right[k] : left[k];
      const double scale = std::max(std::abs(left[k]), std::numeric_limits<double>::min());
      gap = std::max(gap, std::abs(left[k] - right[k]) / scale);
    }
    gaps[r] = gap;
  };

  const int workers = std::min<int>(config.threads, config.trials);
  if (workers <= 1) {
    for (std::size_t r = 0; r < trials; ++r) run_trial(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < trials; r = next++) run_trial(r);
      });
    for (auto& t : pool) t.join();
  }

  McResult result{config, {}, 0.0};
  for (double g : gaps) result.max_trace_route_gap = std::max(result.max_trace_route_gap, g);
  const auto targets = limit_targets(config.profile.d, config.k_max);
  for (std::size_t k = 0; k < orders; ++k) {
    const auto& v = samples[k];
    const double mean = pairwise_sum(v.data(), v.size()) / static_cast<double>(trials);
    std::vector<double> sq(trials);
    for (std::size_t r = 0; r < trials; ++r) sq[r] = (v[r] - mean) * (v[r] - mean);
    const double var = pairwise_sum(sq.data(), sq.size()) / static_cast<double>(trials - 1);
    const double se = std::sqrt(var / static_cast<double>(trials));
    const double z = se > 0 ? (mean - targets[k]) / se : 0.0;
    result.moments.push_back({static_cast<int>(k) + 1, mean, se, targets[k], z});
  }
  return result;
}

double round12(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return std::strtod(buffer, nullptr);
}

std::string to_json(const McResult& result) {
  const auto& cfg = result.config;
  nlohmann::ordered_json config;
  config["p"] = cfg.profile.p;
  std::vector<double> d;
  for (double x : cfg.profile.d) d.push_back(round12(x));
  config["d"] = d;
  config["n"] = cfg.profile.n;
  config["realized"] = cfg.profile.realized;
  config["k_max"] = cfg.k_max;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["ensemble"] = to_string(cfg.ensemble) + " Gaussian, i.i.d. entries, E|x|^2 = 1/n";
  config["rng"] = "mt19937_64 per trial, seeded by splitmix64(seed, trial)";

  nlohmann::ordered_json moments = nlohmann::ordered_json::array();
  for (const auto& m : result.moments) {
    nlohmann::ordered_json row;
    row["k"] = m.k;
    row["mean"] = round12(m.mean);
    row["se"] = round12(m.se);
    row["target"] = round12(m.target);
    row["z"] = round12(m.z);
    moments.push_back(row);
  }
  nlohmann::ordered_json out;
  out["config"] = config;
  out["moments"] = moments;
  return out.dump(2) + "\n";
}

std::string to_csv(const McResult& result) {
  std::ostringstream out;
  out << "k,mean,se,target,z\n";
  char buffer[160];
  for (const auto& m : result.moments) {
    std::snprintf(buffer, sizeof buffer, "%d,%.12g,%.12g,%.12g,%.12g\n", m.k, m.mean, m.se, m.target, m.z);
    out << buffer;
  }
  return out.str();
}

}  // namespace fnpoly
