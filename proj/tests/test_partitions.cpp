#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fnpoly/exact.hpp"
#include "fnpoly/partitions.hpp"
#include "oracles.hpp"

namespace {

using namespace fnpoly;

std::string word_text(const Word& w) {
  std::string out;
  for (const auto& l : w) out += to_string(l) + " ";
  return out;
}

PairPartition from_oracle(const oracle::Matching& m, int size) {
  std::vector<std::pair<int, int>> blocks;
  for (auto [a, b] : m) blocks.emplace_back(a + 1, b + 1);
  return PairPartition::from_blocks(size, blocks);
}

TEST(Words, Examples) {
  EXPECT_EQ(word_text(build_word({2, 0, 1})), "1 2 2* 1* ");
  EXPECT_EQ(word_text(build_word({2, 1, 1})), "1* 1 2 2* ");
  EXPECT_EQ(word_text(build_word({2, 2, 1})), "2* 1* 1 2 ");
  EXPECT_EQ(word_text(build_word({1, 0, 2})), "1 1* 1 1* ");
  EXPECT_TRUE(build_word({3, 1, 0}).empty());
  EXPECT_THROW(build_word({2, 3, 1}), std::invalid_argument);
  EXPECT_THROW(build_word({0, 0, 1}), std::invalid_argument);
}

TEST(Words, MatchOracleLetters) {
  for (int p = 1; p <= 4; ++p)
    for (int shift = 0; shift <= p; ++shift) {
      const Word w = build_word({p, shift, 3});
      const auto o = oracle::word(p, shift, 3);
      ASSERT_EQ(w.size(), o.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_EQ(w[i].index, std::abs(o[i]));
        EXPECT_EQ(w[i].starred, o[i] < 0);
      }
    }
}

TEST(PairPartition, ParseAndPrint) {
  const PairPartition pi = parse_partition("(1,4)(2,3)");
  EXPECT_EQ(pi.size(), 4);
  EXPECT_EQ(pi.partner(0), 3);
  EXPECT_EQ(to_string(pi), "(1,4)(2,3)");
  EXPECT_TRUE(pi.is_noncrossing());
  EXPECT_FALSE(parse_partition("(1,3)(2,4)").is_noncrossing());
  EXPECT_EQ(to_string(PairPartition{}), "()");
  EXPECT_EQ(parse_partition("()"), PairPartition{});
  EXPECT_THROW(parse_partition("(1,2)(2,3)"), std::invalid_argument);
  EXPECT_THROW(PairPartition(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(Enumeration, SpecExamples) {
  const auto w = build_word({2, 0, 2});
  const auto all = enumerate_adapted(WordSpec{2, 0, 2});
  std::set<std::string> got;
  for (const auto& pi : all) {
    EXPECT_TRUE(pi.is_noncrossing());
    EXPECT_TRUE(pi.is_adapted_to(w));
    got.insert(to_string(pi));
  }
  EXPECT_EQ(got, (std::set<std::string>{"(1,4)(2,3)(5,8)(6,7)", "(1,8)(2,3)(4,5)(6,7)", "(1,8)(2,7)(3,6)(4,5)"}));
  EXPECT_EQ(count_adapted({2, 0, 3}), 12);
  EXPECT_EQ(count_adapted({1, 0, 4}), 14);
  const auto empty = enumerate_adapted(WordSpec{2, 0, 0});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty.front().empty());
}

TEST(Enumeration, LegProfiles) {
  const auto w = build_word({2, 0, 2});
  EXPECT_EQ(leg_profile(parse_partition("(1,4)(2,3)(5,8)(6,7)"), w, 2), (IndexVector{0, 2, 2}));
  EXPECT_EQ(leg_profile(parse_partition("(1,8)(2,3)(4,5)(6,7)"), w, 2), (IndexVector{1, 1, 2}));
  EXPECT_EQ(leg_profile(parse_partition("(1,8)(2,7)(3,6)(4,5)"), w, 2), (IndexVector{1, 2, 1}));
  EXPECT_THROW(leg_profile(parse_partition("(1,2)(3,4)(5,6)(7,8)"), w, 2), std::invalid_argument);
}

TEST(Enumeration, BudgetGuard) {
  EXPECT_THROW(count_adapted({3, 0, 3}, EnumerationBudget{16}), BudgetExceeded);
  EXPECT_NO_THROW(count_adapted({3, 0, 3}, EnumerationBudget{18}));
}

TEST(Enumeration, AgreesWithUnprunedOracle) {
  for (int p = 1; p <= 6; ++p)
    for (int k = 1; 2 * p * k <= 12; ++k)
      for (int shift = 0; shift <= p; ++shift) {
        SCOPED_TRACE("p=" + std::to_string(p) + " k=" + std::to_string(k) + " shift=" + std::to_string(shift));
        const auto w = oracle::word(p, shift, k);
        std::vector<PairPartition> expected;
        for (const auto& m : oracle::adapted_matchings(w)) expected.push_back(from_oracle(m, static_cast<int>(w.size())));
        auto got = enumerate_adapted(WordSpec{p, shift, k});
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);

        const auto hist = profile_histogram({p, shift, k});
        const auto counts = oracle::profile_counts(p, shift, k);
        ASSERT_EQ(hist.size(), counts.size());
        for (const auto& [j, c] : counts) EXPECT_EQ(hist.at(j), c);
      }
}

TEST(Enumeration, CountsAreFussCatalanForEveryShift) {
  for (int p = 1; p <= 8; ++p)
    for (int k = 1; 2 * p * k <= 16; ++k)
      for (int shift = 0; shift <= p; ++shift)
        EXPECT_EQ(count_adapted({p, shift, k}), fuss_catalan(p, k)) << p << " " << k << " " << shift;
}

TEST(Enumeration, ThreadCountDoesNotMatter) {
  const WordSpec spec{2, 1, 4};
  const auto one = profile_histogram(spec, {}, 1);
  EXPECT_EQ(profile_histogram(spec, {}, 2), one);
  EXPECT_EQ(profile_histogram(spec, {}, 5), one);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_Pk(1, 2), parse_poly("d1^2 + d0 d1", d_names(2)));
  EXPECT_EQ(brute_force_Pk(2, 2), closed_form_Pk(2, 2));
  EXPECT_EQ(brute_force_Pk(2, 3), closed_form_Pk(2, 3));
}

TEST(CountNi, Examples) {
  EXPECT_EQ(count_Ni(2, 2, 0, {1, 1, 2}), 1);
  EXPECT_EQ(count_Ni(2, 2, 0, {0, 2, 2}), 1);
  EXPECT_EQ(count_Ni(2, 3, 0, {1, 2, 3}), 3);
  EXPECT_EQ(count_Ni(2, 3, 0, {2, 2, 3}), 0);
  EXPECT_EQ(count_Ni(2, 2, 0, {0, 0, 4}), 0);
  // N_0(k, j) = N(k, j_0 + 1, j_1, ...)
  for (int k = 1; k <= 3; ++k)
    for_each_composition(3, 2 * k, 0, k, [&](const IndexVector& j) {
      IndexVector lifted = j;
      ++lifted[0];
      EXPECT_EQ(count_Ni(2, k, 0, j), gfn_number(k, lifted));
    });
}

TEST(Phi, RoundTripAndShift) {
  for (int p = 1; p <= 3; ++p)
    for (int k = 1; 2 * p * k <= 12; ++k)
      for (int shift = 1; shift <= p; ++shift) {
        const Word from = build_word({p, shift, k});
        const Word to = build_word({p, shift - 1, k});
        for (const auto& pi : enumerate_adapted(WordSpec{p, shift, k})) {
          const PairPartition image = phi(pi);
          EXPECT_TRUE(image.is_noncrossing());
          EXPECT_TRUE(image.is_adapted_to(to));
          EXPECT_EQ(phi_inverse(image), pi);
          EXPECT_EQ(phi(phi_inverse(pi)), pi);
          EXPECT_EQ(leg_profile(pi, from, p).size(), static_cast<std::size_t>(p + 1));
        }
      }
  EXPECT_THROW(phi(PairPartition{}), std::invalid_argument);
}

TEST(Phi, IteratedShiftMatchesRelabelling) {
  // phi^i: NC(W_i) -> NC(W_0) sends profile j to (j_0 - 1, ..., j_i + 1, ...).
  const int p = 3, k = 2;
  for (int i = 1; i <= p; ++i) {
    const Word wi = build_word({p, i, k});
    const Word w0 = build_word({p, 0, k});
    std::set<std::string> images;
    for (const auto& pi : enumerate_adapted(WordSpec{p, i, k})) {
      PairPartition image = pi;
      for (int step = 0; step < i; ++step) image = phi(image);
      IndexVector expected = leg_profile(pi, wi, p);
      --expected[0];
      ++expected[static_cast<std::size_t>(i)];
      EXPECT_EQ(leg_profile(image, w0, p), expected);
      images.insert(to_string(image));
    }
    EXPECT_EQ(images.size(), static_cast<std::size_t>(count_adapted({p, 0, k}).convert_to<long>()));
  }
}

TEST(Lemmas, VerifyIdentities) {
  for (int p = 1; p <= 3; ++p) {
    const int k_max = 16 / (2 * p);
    const auto a = verify_lemma_31(p, std::min(k_max, 4));
    EXPECT_TRUE(a.passed()) << (a.failures.empty() ? "" : a.failures.front());
    EXPECT_GT(a.checks, 0);
    const auto b = verify_lemma_32(p, std::min(k_max, 4));
    EXPECT_TRUE(b.passed()) << (b.failures.empty() ? "" : b.failures.front());
    EXPECT_GT(b.checks, 0);
  }
}

TEST(Series, EnumeratedMatchesFunctionalEquation) {
  const PolySeries g = solve_functional_equation(2, 3);
  const PolySeries n0 = enumerated_series(2, 0, 3);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(n0[k] * MultiPoly::variable(3, 0), g[k]);
}

TEST(Diagram, SvgIsWellFormed) {
  const auto w = build_word({2, 0, 2});
  const std::string svg = arch_diagram_svg(parse_partition("(1,8)(2,3)(4,5)(6,7)"), w);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("2*"), std::string::npos);
  std::size_t paths = 0;
  for (std::size_t pos = svg.find("<path"); pos != std::string::npos; pos = svg.find("<path", pos + 1)) ++paths;
  EXPECT_EQ(paths, 4u);
}

}  // namespace
