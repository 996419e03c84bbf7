#include "fnpoly/partitions.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace fnpoly {

void EnumerationBudget::check(int p, int k) const {
  const long points = 2L * p * k;
  if (points > max_points)
    throw BudgetExceeded("enumeration of " + std::to_string(points) + " points exceeds budget of " +
                         std::to_string(max_points) + " (raise FN_BUDGET to allow it)");
}

Word build_word(const WordSpec& spec) {
  if (spec.p < 1) throw std::invalid_argument("build_word: p must be positive");
  if (spec.k < 0) throw std::invalid_argument("build_word: k must be nonnegative");
  if (spec.shift < 0 || spec.shift > spec.p)
    throw std::invalid_argument("build_word: shift must lie in [0, p]");
  Word base;
  for (int l = 1; l <= spec.p; ++l) base.push_back({l, false});
  for (int l = spec.p; l >= 1; --l) base.push_back({l, true});
  std::rotate(base.begin(), base.end() - spec.shift, base.end());

  Word word;
  word.reserve(base.size() * static_cast<std::size_t>(spec.k));
  for (int r = 0; r < spec.k; ++r) word.insert(word.end(), base.begin(), base.end());
  return word;
}

std::string to_string(const Letter& letter) { return std::to_string(letter.index) + (letter.starred ? "*" : ""); }

PairPartition::PairPartition(std::vector<int> match) : match_(std::move(match)) {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    const int b = match_[static_cast<std::size_t>(a)];
    if (b < 0 || b >= n || b == a || match_[static_cast<std::size_t>(b)] != a)
      throw std::invalid_argument("PairPartition: match array is not a fixed-point-free involution");
  }
}

PairPartition PairPartition::from_blocks(int size, const std::vector<std::pair<int, int>>& blocks) {
  if (size < 0 || size % 2 != 0) throw std::invalid_argument("PairPartition: size must be even");
  std::vector<int> match(static_cast<std::size_t>(size), -1);
  for (auto [a, b] : blocks) {
    if (a < 1 || b < 1 || a > size || b > size) throw std::invalid_argument("PairPartition: leg out of range");
    auto& ma = match[static_cast<std::size_t>(a - 1)];
    auto& mb = match[static_cast<std::size_t>(b - 1)];
    if (ma != -1 || mb != -1) throw std::invalid_argument("PairPartition: position used twice");
    ma = b - 1;
    mb = a - 1;
  }
  return PairPartition(std::move(match));
}

std::vector<std::pair<int, int>> PairPartition::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    if (partner(a) > a) out.emplace_back(a + 1, partner(a) + 1);
  return out;
}

bool PairPartition::is_noncrossing() const {
  const auto bs = blocks();
  for (const auto& [i, j] : bs)
    for (const auto& [q, r] : bs)
      if (i < q && q < j && j < r) return false;
  return true;
}

bool PairPartition::is_adapted_to(const Word& word) const {
  if (word.size() != match_.size()) return false;
  for (int a = 0; a < size(); ++a)
    if (!complementary(word[static_cast<std::size_t>(a)], word[static_cast<std::size_t>(partner(a))])) return false;
  return is_noncrossing();
}

std::string to_string(const PairPartition& pi) {
  if (pi.empty()) return "()";
  std::string out;
  for (auto [a, b] : pi.blocks()) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

PairPartition parse_partition(const std::string& text) {
  if (text == "()" || text.empty()) return {};
  std::vector<std::pair<int, int>> blocks;
  std::istringstream in(text);
  char open = 0, comma = 0, close = 0;
  int a = 0, b = 0;
  int largest = 0;
  while (in >> open) {
    if (!(in >> a >> comma >> b >> close) || open != '(' || comma != ',' || close != ')')
      throw std::invalid_argument("parse_partition: malformed '" + text + "'");
    blocks.emplace_back(a, b);
    largest = std::max({largest, a, b});
  }
  return PairPartition::from_blocks(largest, blocks);
}

namespace {

// Enumerates adapted noncrossing matchings by recursion on intervals
// [lo, hi). A pending stack holds intervals that still need matching.
class AdaptedEnumerator {
 public:
  AdaptedEnumerator(const Word& word, const std::function<void(const PairPartition&)>& visit)
      : word_(word), visit_(visit), match_(word.size(), -1) {
    int letters = 0;
    for (const auto& l : word) letters = std::max(letters, l.index);
    // balance_[l][x] = (#l - #l*) among positions < x; an interval can only
    // be matched if every letter is balanced on it.
    balance_.assign(static_cast<std::size_t>(letters) + 1, std::vector<int>(word.size() + 1, 0));
    for (std::size_t l = 1; l < balance_.size(); ++l)
      for (std::size_t x = 0; x < word.size(); ++x)
        balance_[l][x + 1] = balance_[l][x] + (word[x].index == static_cast<int>(l) ? (word[x].starred ? -1 : 1) : 0);
  }

  void run() {
    if (!balanced(0, static_cast<int>(word_.size()))) return;
    pending_.emplace_back(0, static_cast<int>(word_.size()));
    extend();
  }

  void run_with_first_partner(int b) {
    const int n = static_cast<int>(word_.size());
    if (!admissible(0, b, n)) return;
    pair(0, b);
    pending_.emplace_back(b + 1, n);
    pending_.emplace_back(1, b);
    extend();
  }

  bool admissible(int lo, int b, int hi) const {
    return complementary(word_[static_cast<std::size_t>(lo)], word_[static_cast<std::size_t>(b)]) &&
           balanced(lo + 1, b) && balanced(b + 1, hi);
  }

 private:
  bool balanced(int lo, int hi) const {
    if ((hi - lo) % 2 != 0) return false;
    for (std::size_t l = 1; l < balance_.size(); ++l)
      if (balance_[l][static_cast<std::size_t>(hi)] != balance_[l][static_cast<std::size_t>(lo)]) return false;
    return true;
  }

  void pair(int a, int b) {
    match_[static_cast<std::size_t>(a)] = b;
    match_[static_cast<std::size_t>(b)] = a;
  }

  void extend() {
    if (pending_.empty()) {
      visit_(PairPartition(match_));
      return;
    }
    const auto [lo, hi] = pending_.back();
    pending_.pop_back();
    if (lo == hi) {
      extend();
    } else {
      for (int b = lo + 1; b < hi; b += 2) {
        if (!admissible(lo, b, hi)) continue;
        pair(lo, b);
        pending_.emplace_back(b + 1, hi);
        pending_.emplace_back(lo + 1, b);
        extend();
        pending_.pop_back();
        pending_.pop_back();
      }
    }
    pending_.emplace_back(lo, hi);
  }

  const Word& word_;
  const std::function<void(const PairPartition&)>& visit_;
  std::vector<int> match_;
  std::vector<std::vector<int>> balance_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

void enumerate_adapted(const Word& word, const std::function<void(const PairPartition&)>& visit) {
  if (word.empty()) {
    visit(PairPartition());
    return;
  }
  AdaptedEnumerator(word, visit).run();
}

std::vector<PairPartition> enumerate_adapted(const WordSpec& spec, const EnumerationBudget& budget) {
  budget.check(spec.p, spec.k);
  std::vector<PairPartition> out;
  enumerate_adapted(build_word(spec), [&](const PairPartition& pi) { out.push_back(pi); });
  return out;
}

Integer count_adapted(const WordSpec& spec, const EnumerationBudget& budget) {
  budget.check(spec.p, spec.k);
  Integer count = 0;
  enumerate_adapted(build_word(spec), [&](const PairPartition&) { ++count; });
  return count;
}

IndexVector leg_profile(const PairPartition& pi, const Word& word, int p) {
  if (!pi.is_adapted_to(word)) throw std::invalid_argument("leg_profile: partition is not adapted to the word");
  IndexVector j(static_cast<std::size_t>(p + 1), 0);
  for (auto [left, right] : pi.blocks()) {
    const Letter& leg = word[static_cast<std::size_t>(right - 1)];
    if (leg.index < 1 || leg.index > p) throw std::invalid_argument("leg_profile: letter outside alphabet");
    ++j[static_cast<std::size_t>(leg.starred ? leg.index : leg.index - 1)];
  }
  return j;
}

ProfileHistogram profile_histogram(const WordSpec& spec, const EnumerationBudget& budget, int threads) {
  budget.check(spec.p, spec.k);
  const Word word = build_word(spec);
  const int p = spec.p;
  if (word.empty()) return {{IndexVector(static_cast<std::size_t>(p + 1), 0), Integer(1)}};

  auto branch = [&](int b) {
    ProfileHistogram h;
    std::function<void(const PairPartition&)> visit = [&](const PairPartition& pi) {
      ++h[leg_profile(pi, word, p)];
    };
    AdaptedEnumerator(word, visit).run_with_first_partner(b);
    return h;
  };

  const int n = static_cast<int>(word.size());
  std::vector<ProfileHistogram> parts;
  if (threads <= 1) {
    for (int b = 1; b < n; b += 2) parts.push_back(branch(b));
  } else {
    std::vector<std::future<ProfileHistogram>> futures;
    for (int b = 1; b < n; b += 2) futures.push_back(std::async(std::launch::async, branch, b));
    for (auto& f : futures) parts.push_back(f.get());
  }
  ProfileHistogram merged;
  for (const auto& part : parts)
    for (const auto& [j, c] : part) merged[j] += c;
  return merged;
}

MultiPoly brute_force_Pk(int p, int k, const EnumerationBudget& budget) {
  if (p < 1 || k < 0) throw std::invalid_argument("brute_force_Pk: need p >= 1 and k >= 0");
  MultiPoly out(static_cast<std::size_t>(p + 1));
  for (const auto& [j, c] : profile_histogram({p, 0, k}, budget)) out.add_term(j, Rational(c));
  return out;
}

Integer count_Ni(int p, int k, int shift, const IndexVector& j, const EnumerationBudget& budget) {
  if (j.size() != static_cast<std::size_t>(p + 1)) throw std::invalid_argument("count_Ni: index vector needs length p + 1");
  if (std::accumulate(j.begin(), j.end(), 0) != p * k) return 0;
  if (std::any_of(j.begin(), j.end(), [&](int v) { return v < 0 || v > k; })) return 0;
  const auto h = profile_histogram({p, shift, k}, budget);
  auto it = h.find(j);
  return it == h.end() ? Integer(0) : it->second;
}

PairPartition phi(const PairPartition& pi) {
  if (pi.empty()) throw std::invalid_argument("phi: empty partition");
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) out[static_cast<std::size_t>((a + n - 1) % n)] = (pi.partner(a) + n - 1) % n;
  return PairPartition(std::move(out));
}

PairPartition phi_inverse(const PairPartition& pi) {
  if (pi.empty()) throw std::invalid_argument("phi_inverse: empty partition");
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) out[static_cast<std::size_t>((a + 1) % n)] = (pi.partner(a) + 1) % n;
  return PairPartition(std::move(out));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks += other.checks;
  for (const auto& f : other.failures) failures.push_back(other.name.empty() ? f : other.name + ": " + f);
}

namespace {

std::string show(const IndexVector& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + ")";
}

Integer lookup(const ProfileHistogram& h, const IndexVector& j) {
  auto it = h.find(j);
  return it == h.end() ? Integer(0) : it->second;
}

// histograms[shift][k]
std::vector<std::vector<ProfileHistogram>> all_histograms(int p, int k_max, const EnumerationBudget& budget) {
  std::vector<std::vector<ProfileHistogram>> out(static_cast<std::size_t>(p + 1));
  for (int shift = 0; shift <= p; ++shift)
    for (int k = 0; k <= k_max; ++k) out[static_cast<std::size_t>(shift)].push_back(profile_histogram({p, shift, k}, budget));
  return out;
}

PolySeries series_from(const std::vector<ProfileHistogram>& hist, int p, int order) {
  const auto vars = static_cast<std::size_t>(p + 1);
  PolySeries s(order, MultiPoly(vars));
  for (int k = 0; k <= order; ++k)
    for (const auto& [j, c] : hist[static_cast<std::size_t>(k)]) s[k].add_term(j, Rational(c));
  return s;
}

}  // namespace

PolySeries enumerated_series(int p, int shift, int order, const EnumerationBudget& budget) {
  std::vector<ProfileHistogram> hist;
  for (int k = 0; k <= order; ++k) hist.push_back(profile_histogram({p, shift, k}, budget));
  return series_from(hist, p, order);
}

VerificationReport verify_lemma_31(int p, int k_max, const EnumerationBudget& budget) {
  VerificationReport report{"lemma_31", 0, {}};
  if (p < 1 || k_max < 0) throw std::invalid_argument("verify_lemma_31: need p >= 1 and k_max >= 0");
  budget.check(p, k_max);
  const auto hist = all_histograms(p, k_max, budget);
  const auto vars = static_cast<std::size_t>(p + 1);

  for (int i = 1; i <= p; ++i) {
    const auto& hi = hist[static_cast<std::size_t>(i)];
    const auto& h0 = hist[0];
    for (int k = 1; k <= k_max; ++k) {
      // Profile-shift identity over every j with entries in [0, k].
      for_each_composition(p + 1, p * k - 1, 0, k, [&](const IndexVector& j) {
        IndexVector left = j;
        left[0] += 1;
        IndexVector right = j;
        right[static_cast<std::size_t>(i)] += 1;
        const Integer a = lookup(hi[static_cast<std::size_t>(k)], left);
        const Integer b = lookup(h0[static_cast<std::size_t>(k)], right);
        report.expect(a == b, "N_" + std::to_string(i) + "(" + std::to_string(k) + "," + show(left) + ")=" + a.str() +
                                  " but N_0(" + std::to_string(k) + "," + show(right) + ")=" + b.str());
      });

      // phi^i carries NC^2(W_i^k) bijectively onto NC^2(W_0^k), moving one
      // unit of profile from j_0 to j_i.
      const Word wi = build_word({p, i, k});
      const Word w0 = build_word({p, 0, k});
      std::vector<PairPartition> images;
      enumerate_adapted(wi, [&](const PairPartition& pi) {
        PairPartition image = pi;
        for (int r = 0; r < i; ++r) image = phi(image);
        PairPartition back = image;
        for (int r = 0; r < i; ++r) back = phi_inverse(back);
        report.expect(back == pi, "phi round trip failed on " + to_string(pi));
        if (!image.is_adapted_to(w0)) {
          report.expect(false, "phi^" + std::to_string(i) + " of " + to_string(pi) + " is not adapted to W_0");
          return;
        }
        IndexVector expected = leg_profile(pi, wi, p);
        expected[0] -= 1;
        expected[static_cast<std::size_t>(i)] += 1;
        report.expect(leg_profile(image, w0, p) == expected, "phi^" + std::to_string(i) + " profile shift failed on " + to_string(pi));
        images.push_back(std::move(image));
      });
      std::vector<PairPartition> targets;
      enumerate_adapted(w0, [&](const PairPartition& pi) { targets.push_back(pi); });
      std::sort(images.begin(), images.end());
      std::sort(targets.begin(), targets.end());
      report.expect(images == targets, "phi^" + std::to_string(i) + " image differs from NC^2(W_0^" + std::to_string(k) + ")");
    }

    // d_i (N_i - 1) = d_0 (N_0 - 1)
    PolySeries ni = series_from(hi, p, k_max);
    PolySeries n0 = series_from(hist[0], p, k_max);
    ni[0] -= MultiPoly::constant(vars, 1);
    n0[0] -= MultiPoly::constant(vars, 1);
    const PolySeries lhs = ni.times(MultiPoly::variable(vars, static_cast<std::size_t>(i)));
    const PolySeries rhs = n0.times(MultiPoly::variable(vars, 0));
    report.expect(lhs == rhs, "series identity d_" + std::to_string(i) + "(N_" + std::to_string(i) + " - 1) = d_0(N_0 - 1) fails");
  }
  return report;
}

VerificationReport verify_lemma_32(int p, int k_max, const EnumerationBudget& budget) {
  VerificationReport report{"lemma_32", 0, {}};
  if (p < 1 || k_max < 0) throw std::invalid_argument("verify_lemma_32: need p >= 1 and k_max >= 0");
  budget.check(p, k_max);
  const auto hist = all_histograms(p, k_max, budget);
  const auto vars = static_cast<std::size_t>(p + 1);

  // Series form.
  PolySeries product = PolySeries::constant(k_max, MultiPoly(vars), MultiPoly::constant(vars, 1));
  for (int i = 0; i <= p; ++i) product = product * series_from(hist[static_cast<std::size_t>(i)], p, k_max);
  MultiPoly d_tail = MultiPoly::constant(vars, 1);
  for (std::size_t i = 1; i < vars; ++i) d_tail *= MultiPoly::variable(vars, i);
  const PolySeries rhs = product.shifted().times(d_tail);
  PolySeries lhs = series_from(hist[0], p, k_max);
  lhs[0] -= MultiPoly::constant(vars, 1);
  report.expect(lhs == rhs, "series identity N_0 - 1 = x d_1..d_p prod N_i fails");

  // Profile recurrence: N_0(k, j) = sum over k_0+..+k_p = k-1 and profiles
  // j_0..j_p with sum_i j_i = j - (0,1,..,1) of prod_i N_i(k_i, j_i).
  for (int k = 1; k <= k_max; ++k) {
    ProfileHistogram predicted;
    for_each_composition(p + 1, k - 1, 0, k - 1, [&](const IndexVector& ks) {
      IndexVector total(vars, 0);
      for (std::size_t r = 1; r < vars; ++r) total[r] = 1;
      auto rec = [&](auto&& self, std::size_t i, const Integer& weight) -> void {
        if (i == vars) {
          predicted[total] += weight;
          return;
        }
        for (const auto& [j, c] : hist[i][static_cast<std::size_t>(ks[i])]) {
          for (std::size_t r = 0; r < vars; ++r) total[r] += j[r];
          self(self, i + 1, weight * c);
          for (std::size_t r = 0; r < vars; ++r) total[r] -= j[r];
        }
      };
      rec(rec, 0, Integer(1));
    });
    const auto& actual = hist[0][static_cast<std::size_t>(k)];
    std::set<IndexVector> keys;
    for (const auto& [j, c] : predicted) keys.insert(j);
    for (const auto& [j, c] : actual) keys.insert(j);
    for (const auto& j : keys) {
      const Integer a = lookup(actual, j), b = lookup(predicted, j);
      report.expect(a == b, "recurrence at k=" + std::to_string(k) + " j=" + show(j) + ": counted " + a.str() +
                                ", recurrence gives " + b.str());
    }
  }
  return report;
}

std::string arch_diagram_svg(const PairPartition& pi, const Word& word) {
  if (static_cast<std::size_t>(pi.size()) != word.size())
    throw std::invalid_argument("arch_diagram_svg: partition and word sizes differ");
  const int n = pi.size();
  // Height of a block is one more than the tallest block nested inside it.
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  auto blocks = pi.blocks();
  std::sort(blocks.begin(), blocks.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
  for (auto [a, b] : blocks) {
    int inner = 0;
    for (int x = a; x < b - 1; ++x) inner = std::max(inner, depth[static_cast<std::size_t>(x)]);
    depth[static_cast<std::size_t>(a - 1)] = depth[static_cast<std::size_t>(b - 1)] = inner + 1;
  }
  const int max_depth = n == 0 ? 0 : *std::max_element(depth.begin(), depth.end());
  const int step = 24, unit = 14, margin = 20;
  const int width = margin * 2 + step * std::max(n - 1, 0);
  const int baseline = margin + unit * max_depth + 4;
  const int height = baseline + 30;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <title>" << to_string(pi) << "</title>\n"
      << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (auto [a, b] : pi.blocks()) {
    const int x1 = margin + step * (a - 1), x2 = margin + step * (b - 1);
    const int top = baseline - unit * depth[static_cast<std::size_t>(a - 1)];
    svg << "    <path d=\"M " << x1 << ' ' << baseline << " V " << top << " H " << x2 << " V " << baseline << "\"/>\n";
  }
  svg << "  </g>\n  <g font-family=\"serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int x = 0; x < n; ++x) {
    svg << "    <circle cx=\"" << margin + step * x << "\" cy=\"" << baseline << "\" r=\"2\"/>\n"
        << "    <text x=\"" << margin + step * x << "\" y=\"" << baseline + 18 << "\">"
        << to_string(word[static_cast<std::size_t>(x)]) << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace fnpoly
