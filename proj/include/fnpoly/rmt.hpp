#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fnpoly {

/// Target asymptotic dimensions d_0..d_p at scale n, realized as
/// N_j = max(1, round_half_up(d_j * n)).
struct DimensionProfile {
  int p = 0;
  std::vector<double> d;
  int n = 0;
  std::vector<long> realized;

  static DimensionProfile make(std::vector<double> d, int n);
  /// N_j / n
  std::vector<double> realized_ratios() const;
};

/// Entry distribution of the factors X_j. Both have E|x|^2 = 1/n.
enum class Ensemble { complex_gaussian, real_gaussian };

std::string to_string(Ensemble ensemble);
Ensemble parse_ensemble(const std::string& name);

struct McConfig {
  DimensionProfile profile;
  Ensemble ensemble = Ensemble::complex_gaussian;
  int k_max = 3;
  int trials = 200;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
};

struct McMoment {
  int k = 0;
  double mean = 0.0;
  double se = 0.0;
  double target = 0.0;
  double z = 0.0;
};

struct McResult {
  McConfig config;
  std::vector<McMoment> moments;
  /// Largest relative gap between the BB* and B*B trace routes over all
  /// trials and orders.
  double max_trace_route_gap = 0.0;
};

/// Per-trial generator: mt19937_64 seeded from splitmix64(seed, trial).
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// B = X_1 ... X_p with X_j of size N_{j-1} x N_j and i.i.d. centered
/// Gaussian entries with E|x|^2 = 1/n. Complex entries have independent real
/// and imaginary parts of variance 1/(2n).
Eigen::MatrixXcd sample_product(const DimensionProfile& profile, std::mt19937_64& engine,
                                Ensemble ensemble = Ensemble::complex_gaussian);

/// (1/N_0) Tr((B B^*)^k) for k = 1..k_max, using whichever Gram matrix is
/// smaller.
std::vector<double> trace_moments(const Eigen::MatrixXcd& b, int k_max);

/// Same quantity computed through B B^* and through B^* B respectively.
std::vector<double> trace_moments_left(const Eigen::MatrixXcd& b, int k_max);
std::vector<double> trace_moments_right(const Eigen::MatrixXcd& b, int k_max);

/// P_k evaluated at the configured (not realized) dimensions.
std::vector<double> limit_targets(const std::vector<double>& d, int k_max);

McResult run_experiment(const McConfig& config);

/// {"config": {...}, "moments": [{"k", "mean", "se", "target", "z"}]}
std::string to_json(const McResult& result);
std::string to_csv(const McResult& result);

/// Rounds to 12 significant digits so serialized output is stable.
double round12(double value);

}  // namespace fnpoly
