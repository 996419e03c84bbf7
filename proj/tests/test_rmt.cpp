#include <gtest/gtest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "fnpoly/rmt.hpp"

namespace {

using namespace fnpoly;

McConfig config(std::vector<double> d, int n, int trials, std::uint64_t seed, int k_max = 3) {
  McConfig c;
  c.profile = DimensionProfile::make(std::move(d), n);
  c.trials = trials;
  c.seed = seed;
  c.k_max = k_max;
  return c;
}

TEST(Profile, Rounding) {
  const auto a = DimensionProfile::make({1.0, 1.5, 0.5}, 3);
  EXPECT_EQ(a.p, 2);
  // 1.5 * 3 = 4.5 rounds up, 0.5 * 3 = 1.5 rounds up.
  EXPECT_EQ(a.realized, (std::vector<long>{3, 5, 2}));
  const auto b = DimensionProfile::make({0.01, 1.0}, 10);
  EXPECT_EQ(b.realized, (std::vector<long>{1, 10}));
  EXPECT_DOUBLE_EQ(b.realized_ratios()[0], 0.1);
  EXPECT_THROW(DimensionProfile::make({1.0}, 10), std::invalid_argument);
  EXPECT_THROW(DimensionProfile::make({1.0, -1.0}, 10), std::invalid_argument);
  EXPECT_THROW(DimensionProfile::make({1.0, 1.0}, 0), std::invalid_argument);
}

TEST(Traces, ScalarCase) {
  Eigen::MatrixXcd b(1, 1);
  b(0, 0) = {0.6, 0.8};
  const auto m = trace_moments(b, 4);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(m[static_cast<std::size_t>(k - 1)], 1.0, 1e-14);
  b(0, 0) = {2.0, 0.0};
  const auto m2 = trace_moments(b, 3);
  EXPECT_NEAR(m2[0], 4.0, 1e-14);
  EXPECT_NEAR(m2[1], 16.0, 1e-13);
  EXPECT_NEAR(m2[2], 64.0, 1e-12);
}

TEST(Traces, FrobeniusAndBothRoutes) {
  auto engine = trial_engine(1, 0);
  const auto profile = DimensionProfile::make({1.0, 2.0, 0.5}, 6);
  const Eigen::MatrixXcd b = sample_product(profile, engine);
  ASSERT_EQ(b.rows(), 6);
  ASSERT_EQ(b.cols(), 3);
  const auto m = trace_moments(b, 5);
  EXPECT_NEAR(m[0], b.squaredNorm() / 6.0, 1e-12);
  // Direct power of the Gram matrix.
  const Eigen::MatrixXcd gram = b * b.adjoint();
  Eigen::MatrixXcd power = gram;
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(m[static_cast<std::size_t>(k - 1)], power.trace().real() / 6.0, 1e-10 * std::abs(m[static_cast<std::size_t>(k - 1)]));
    power = power * gram;
  }
  const auto left = trace_moments_left(b, 5);
  const auto right = trace_moments_right(b, 5);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(left[k], right[k], 1e-10 * left[k]);
  EXPECT_THROW(trace_moments(b, 0), std::invalid_argument);
}

TEST(Sampling, RealEnsembleHasZeroImaginaryPart) {
  auto engine = trial_engine(3, 2);
  const auto b = sample_product(DimensionProfile::make({1.0, 1.0}, 5), engine, Ensemble::real_gaussian);
  EXPECT_EQ(b.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(parse_ensemble("real"), Ensemble::real_gaussian);
  EXPECT_THROW(parse_ensemble("gue"), std::invalid_argument);
}

TEST(Sampling, TooLargeIsRejected) {
  auto engine = trial_engine(0, 0);
  EXPECT_THROW(sample_product(DimensionProfile::make({1.0, 1.0}, 10000), engine), std::length_error);
}

TEST(Experiment, DeterministicAndThreadIndependent) {
  auto c = config({1.0, 1.5, 0.5}, 12, 40, 99);
  const auto a = run_experiment(c);
  const auto b = run_experiment(c);
  c.threads = 3;
  const auto t = run_experiment(c);
  EXPECT_EQ(to_json(a), to_json(b));
  ASSERT_EQ(a.moments.size(), t.moments.size());
  for (std::size_t k = 0; k < a.moments.size(); ++k) {
    EXPECT_EQ(a.moments[k].mean, t.moments[k].mean);
    EXPECT_EQ(a.moments[k].se, t.moments[k].se);
  }
  c.seed = 100;
  EXPECT_NE(run_experiment(c).moments[0].mean, a.moments[0].mean);
}

TEST(Experiment, FirstMomentIsUnbiased) {
  // E (1/N_0) Tr B B^* = prod_{j >= 1} N_j / n exactly, for any n.
  for (const auto& d : std::vector<std::vector<double>>{{1.0, 1.5, 0.5}, {0.5, 2.0}, {1.0, 1.0, 1.0, 1.0}}) {
    const auto c = config(d, 7, 400, 5, 1);
    const auto r = run_experiment(c);
    double expected = 1.0;
    const auto ratios = c.profile.realized_ratios();
    for (std::size_t j = 1; j < ratios.size(); ++j) expected *= ratios[j];
    EXPECT_LT(std::abs(r.moments[0].mean - expected), 4 * r.moments[0].se);
  }
}

TEST(Experiment, RouteGapIsTiny) {
  const auto r = run_experiment(config({1.0, 1.5, 0.5}, 10, 20, 4, 4));
  EXPECT_LE(r.max_trace_route_gap, 1e-9);
}

TEST(Experiment, SmallScaleMatchesLimit) {
  const auto r = run_experiment(config({1.0, 1.5, 0.5}, 40, 200, 7));
  for (const auto& m : r.moments) EXPECT_LE(std::abs(m.z), 4.0) << "k=" << m.k << " z=" << m.z;
  EXPECT_NEAR(r.moments[0].target, 0.75, 1e-12);
}

TEST(Experiment, TinySmoke) {
  const auto r = run_experiment(config({1.0, 1.0}, 1, 5, 0, 2));
  EXPECT_EQ(r.moments.size(), 2u);
  for (const auto& m : r.moments) EXPECT_TRUE(std::isfinite(m.mean));
  auto bad = config({1.0, 1.0}, 1, 1, 0);
  EXPECT_THROW(run_experiment(bad), std::invalid_argument);
}

TEST(Output, JsonAndCsvShape) {
  const auto r = run_experiment(config({1.0, 2.0}, 5, 10, 1, 2));
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["config"]["realized"], nlohmann::json::parse("[5,10]"));
  EXPECT_EQ(j["moments"].size(), 2u);
  EXPECT_EQ(j["moments"][1]["k"], 2);
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.rfind("k,mean,se,target,z\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
