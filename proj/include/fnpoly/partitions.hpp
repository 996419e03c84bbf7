#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fnpoly/exact.hpp"
#include "fnpoly/multipoly.hpp"
#include "fnpoly/series.hpp"

namespace fnpoly {

/// Raised when an enumeration would exceed the configured point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of points 2pk handed to the enumerator.
struct EnumerationBudget {
  int max_points = 16;

  void check(int p, int k) const;
};

/// W_shift^k over the alphabet {1..p, p*..1*}: W_0 = 1..p p*..1* and W_i
/// is W_0 cyclically shifted right by i letters.
struct WordSpec {
  int p = 1;
  int shift = 0;
  int k = 0;
};

struct Letter {
  int index = 1;
  bool starred = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word build_word(const WordSpec& spec);
std::string to_string(const Letter& letter);

/// Blocks may only join l with l*.
inline bool complementary(const Letter& a, const Letter& b) { return a.index == b.index && a.starred != b.starred; }

/// Perfect matching of positions 0..size-1 stored as an involution.
/// Positions are 0-based here; text output is 1-based.
class PairPartition {
 public:
  PairPartition() = default;
  explicit PairPartition(std::vector<int> match);

  /// From 1-based blocks such as {{1,4},{2,3}}.
  static PairPartition from_blocks(int size, const std::vector<std::pair<int, int>>& blocks);

  int size() const { return static_cast<int>(match_.size()); }
  bool empty() const { return match_.empty(); }
  int partner(int position) const { return match_.at(static_cast<std::size_t>(position)); }
  const std::vector<int>& match() const { return match_; }

  /// 1-based (left, right) legs sorted by left leg.
  std::vector<std::pair<int, int>> blocks() const;
  bool is_noncrossing() const;
  bool is_adapted_to(const Word& word) const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend auto operator<=>(const PairPartition&, const PairPartition&) = default;

 private:
  std::vector<int> match_;
};

/// "(1,4)(2,3)(5,8)(6,7)"; the empty partition prints as "()".
std::string to_string(const PairPartition& pi);
PairPartition parse_partition(const std::string& text);

/// Visits every noncrossing pair partition adapted to `word`, in the order
/// produced by pairing the leftmost free position with its smallest
/// admissible partner first. An empty word yields the empty partition once.
void enumerate_adapted(const Word& word, const std::function<void(const PairPartition&)>& visit);
std::vector<PairPartition> enumerate_adapted(const WordSpec& spec, const EnumerationBudget& budget = {});
Integer count_adapted(const WordSpec& spec, const EnumerationBudget& budget = {});

/// (j_0, ..., j_p): a right leg labelled l* adds to j_l, one labelled l
/// adds to j_{l-1}. Throws std::invalid_argument if pi is not adapted.
IndexVector leg_profile(const PairPartition& pi, const Word& word, int p);

/// Number of adapted partitions of W_shift^k per leg profile.
using ProfileHistogram = std::map<IndexVector, Integer>;

/// `threads` > 1 splits the work by the partner of the first position;
/// the result does not depend on the thread count.
ProfileHistogram profile_histogram(const WordSpec& spec, const EnumerationBudget& budget = {}, int threads = 1);

/// sum over NC^2(W_0^k) of d^{j(pi)}.
MultiPoly brute_force_Pk(int p, int k, const EnumerationBudget& budget = {});

/// N_shift(k, j) by exhaustive counting.
Integer count_Ni(int p, int k, int shift, const IndexVector& j, const EnumerationBudget& budget = {});

/// Cyclic relabelling x -> x - 1 (mod size): the block through the first
/// point becomes the outermost block over the tail, with everything that
/// was nested inside it moved to the front. Maps partitions adapted to
/// W_i^k onto partitions adapted to W_{i-1}^k.
PairPartition phi(const PairPartition& pi);
PairPartition phi_inverse(const PairPartition& pi);

struct VerificationReport {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const VerificationReport& other);
};

/// Checks N_i(k, j_0+1, ..., j_p) = N_0(k, ..., j_i+1, ...) for all i in
/// [1, p], k <= k_max and all profiles, plus the series identity
/// d_i (N_i - 1) = d_0 (N_0 - 1) and the phi^i bijection onto W_0^k.
VerificationReport verify_lemma_31(int p, int k_max, const EnumerationBudget& budget = {});

/// Checks N_0 - 1 = x d_1...d_p prod_i N_i as truncated series and the
/// per-profile recurrence for N_0(k, j) in terms of N_i(k_i, j_i).
VerificationReport verify_lemma_32(int p, int k_max, const EnumerationBudget& budget = {});

/// Generating series sum_k sum_j N_shift(k, j) d^j x^k from enumeration.
PolySeries enumerated_series(int p, int shift, int order, const EnumerationBudget& budget = {});

/// SVG arch diagram with letter labels under each point.
std::string arch_diagram_svg(const PairPartition& pi, const Word& word);

}  // namespace fnpoly
