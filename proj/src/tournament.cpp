#include "intransitive/tournament.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "intransitive/parallel.hpp"

namespace intransitive {

Tournament::Tournament(int vertex_count) : m_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Tournament: negative vertex count");
  rel_.assign(static_cast<std::size_t>(m_) * m_, Relation::tie);
}

void Tournament::set_edge(int winner, int loser) {
  if (winner == loser) throw std::invalid_argument("Tournament: self loop");
  rel_[index(winner, loser)] = Relation::forward;
  rel_[index(loser, winner)] = Relation::backward;
}

void Tournament::set_tie(int a, int b) {
  if (a == b) throw std::invalid_argument("Tournament: self tie");
  rel_[index(a, b)] = Relation::tie;
  rel_[index(b, a)] = Relation::tie;
}

Tournament Tournament::from_dice(const std::vector<Die>& dice, int threads) {
  const int m = static_cast<int>(dice.size());
  for (const Die& d : dice) {
    if (d.sides() != dice.front().sides()) throw std::invalid_argument("build_tournament: dice have different side counts");
  }
  std::vector<Verdict> upper(static_cast<std::size_t>(m) * m, Verdict::tie);
  parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t i) {
    for (int j = static_cast<int>(i) + 1; j < m; ++j) upper[i * m + j] = beats(dice[i], dice[j]).verdict;
  });
  Tournament t(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Verdict v = upper[static_cast<std::size_t>(i) * m + j];
      if (v == Verdict::a_wins)
        t.set_edge(i, j);
      else if (v == Verdict::b_wins)
        t.set_edge(j, i);
    }
  }
  return t;
}

std::vector<std::pair<int, int>> Tournament::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Tournament::tie_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (is_tie(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t Tournament::edge_count() const {
  return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), Relation::forward));
}

std::size_t Tournament::tie_count() const {
  const std::size_t m = static_cast<std::size_t>(m_);
  return m * (m - (m > 0 ? 1 : 0)) / 2 - edge_count();
}

int Tournament::out_degree(int v) const {
  int d = 0;
  for (int w = 0; w < m_; ++w) d += has_edge(v, w);
  return d;
}

int Tournament::in_degree(int v) const {
  int d = 0;
  for (int w = 0; w < m_; ++w) d += has_edge(w, v);
  return d;
}

double TripleCensus::intransitive_fraction() const {
  const std::uint64_t complete = transitive + intransitive;
  if (complete == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(intransitive) / static_cast<double>(complete);
}

namespace {

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::uint64_t choose3(std::uint64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

class Bitsets {
 public:
  Bitsets(int rows, int cols) : words_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_, 0) {}
  void set(int r, int c) { bits_[static_cast<std::size_t>(r) * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  std::uint64_t common(int r1, const Bitsets& other, int r2) const {
    std::uint64_t total = 0;
    const std::uint64_t* a = &bits_[static_cast<std::size_t>(r1) * words_];
    const std::uint64_t* b = &other.bits_[static_cast<std::size_t>(r2) * words_];
    for (int w = 0; w < words_; ++w) total += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    return total;
  }

 private:
  int words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

TripleCensus triple_census(const Tournament& t) {
  const int m = t.vertex_count();
  Bitsets out(m, m), in(m, m);
  std::vector<std::uint64_t> dplus(m, 0), dminus(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (t.has_edge(a, b)) {
        out.set(a, b);
        in.set(b, a);
        ++dplus[a];
        ++dminus[b];
      }
    }
  }
  // Complete transitive triples have exactly one vertex beating the other two.
  std::uint64_t transitive = 0, paths = 0;
  for (int v = 0; v < m; ++v) {
    transitive += choose2(dplus[v]);
    paths += dplus[v] * dminus[v];
  }
  // Correct for out-neighbour pairs that are tied, and for x->y->z paths whose ends are tied.
  std::uint64_t tied_paths = 0;
  for (const auto& [x, z] : t.tie_pairs()) {
    transitive -= in.common(x, in, z);
    tied_paths += out.common(x, in, z) + out.common(z, in, x);
  }
  TripleCensus c;
  c.total = choose3(static_cast<std::uint64_t>(m));
  c.transitive = transitive;
  // Every transitive triple carries one x->y->z path, every cyclic triple three.
  c.intransitive = (paths - transitive - tied_paths) / 3;
  c.incomplete = c.total - c.transitive - c.intransitive;
  return c;
}

TripleCensus triple_census_reference(const Tournament& t) {
  const int m = t.vertex_count();
  TripleCensus c;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int d = b + 1; d < m; ++d) {
        ++c.total;
        if (t.is_tie(a, b) || t.is_tie(a, d) || t.is_tie(b, d)) {
          ++c.incomplete;
          continue;
        }
        const bool cycle1 = t.has_edge(a, b) && t.has_edge(b, d) && t.has_edge(d, a);
        const bool cycle2 = t.has_edge(a, d) && t.has_edge(d, b) && t.has_edge(b, a);
        if (cycle1 || cycle2)
          ++c.intransitive;
        else
          ++c.transitive;
      }
    }
  }
  return c;
}

Path2Check path2_identity_check(const Tournament& t) {
  const int m = t.vertex_count();
  Path2Check out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (!t.has_edge(x, y)) continue;
      for (int z = 0; z < m; ++z)
        if (z != x && t.has_edge(y, z)) ++out.directed_paths;
    }
  for (int y = 0; y < m; ++y)
    out.degree_products += static_cast<std::uint64_t>(t.out_degree(y)) * static_cast<std::uint64_t>(t.in_degree(y));
  const TripleCensus census = triple_census_reference(t);
  out.triangles = census.transitive + census.intransitive;
  out.directed_triangles = census.intransitive;
  out.tie_free = t.tie_count() == 0;
  out.holds = out.tie_free && out.directed_paths == out.degree_products &&
              out.directed_paths == out.triangles + 2 * out.directed_triangles;
  return out;
}

DegreeSummary outdegree_concentration(const Tournament& t, double epsilon) {
  const int m = t.vertex_count();
  DegreeSummary s;
  s.epsilon = epsilon;
  if (m == 0) return s;
  std::vector<double> d(m);
  for (int v = 0; v < m; ++v) d[v] = t.out_degree(v);
  s.mean = std::accumulate(d.begin(), d.end(), 0.0) / m;
  double ss = 0.0;
  for (double x : d) ss += (x - s.mean) * (x - s.mean);
  s.variance = ss / m;
  if (m == 1) {
    s.concentrated_fraction = 1.0;
    return s;
  }
  int inside = 0;
  for (double x : d) {
    const double ratio = x / (m - 1);
    if (std::abs(ratio - 0.5) <= epsilon + 1e-12) ++inside;
  }
  s.concentrated_fraction = static_cast<double>(inside) / m;
  return s;
}

namespace {

// Pairs (i<j) of a k-vertex set in lexicographic order; bit p set iff i -> j.
std::vector<std::pair<int, int>> pair_list(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  return pairs;
}

int relabel(int mask, const std::vector<int>& perm, const std::vector<std::pair<int, int>>& pairs) {
  const int k = static_cast<int>(perm.size());
  std::vector<int> slot(k * k, -1);
  for (std::size_t p = 0; p < pairs.size(); ++p) slot[pairs[p].first * k + pairs[p].second] = static_cast<int>(p);
  int out = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const bool forward = (mask >> p) & 1;
    int a = perm[pairs[p].first], b = perm[pairs[p].second];
    bool fwd = forward;
    if (a > b) {
      std::swap(a, b);
      fwd = !fwd;
    }
    if (fwd) out |= 1 << slot[a * k + b];
  }
  return out;
}

std::string score_name(int mask, int k, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> score(k, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if ((mask >> p) & 1)
      ++score[pairs[p].first];
    else
      ++score[pairs[p].second];
  }
  std::sort(score.begin(), score.end());
  std::string name;
  for (int s : score) name += static_cast<char>('0' + s);
  return name;
}

PatternCatalogue build_catalogue(int k) {
  const auto pairs = pair_list(k);
  const int masks = 1 << pairs.size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> canonical(masks);
  for (int mask = 0; mask < masks; ++mask) {
    int best = masks;
    for (const auto& p : perms) best = std::min(best, relabel(mask, p, pairs));
    canonical[mask] = best;
  }
  std::vector<int> reps(canonical);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  PatternCatalogue cat;
  cat.k = k;
  cat.class_of_mask.resize(masks);
  cat.class_sizes.assign(reps.size(), 0);
  for (int rep : reps) cat.class_names.push_back(score_name(rep, k, pairs));
  for (int mask = 0; mask < masks; ++mask) {
    const int id = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), canonical[mask]) - reps.begin());
    cat.class_of_mask[mask] = id;
    ++cat.class_sizes[id];
  }
  return cat;
}

}  // namespace

const PatternCatalogue& pattern_catalogue(int k) {
  static const PatternCatalogue three = build_catalogue(3);
  static const PatternCatalogue four = build_catalogue(4);
  if (k == 3) return three;
  if (k == 4) return four;
  throw std::invalid_argument("pattern_frequencies: k must be 3 or 4");
}

PatternFrequencies pattern_frequencies(const Tournament& t, int k) {
  const PatternCatalogue& cat = pattern_catalogue(k);
  const int m = t.vertex_count();
  PatternFrequencies out;
  out.k = k;
  out.labeled.assign(cat.class_of_mask.size(), 0);

  // bit(a, b) for a < b: 1 if a -> b, 0 if b -> a, -1 on a tie.
  std::vector<std::int8_t> bit(static_cast<std::size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (t.has_edge(a, b))
        bit[static_cast<std::size_t>(a) * m + b] = 1;
      else if (t.has_edge(b, a))
        bit[static_cast<std::size_t>(a) * m + b] = 0;
    }
  const auto at = [&](int a, int b) { return bit[static_cast<std::size_t>(a) * m + b]; };

  if (k == 3) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const int ab = at(a, b);
        for (int c = b + 1; c < m; ++c) {
          const int ac = at(a, c), bc = at(b, c);
          if (ab < 0 || ac < 0 || bc < 0) {
            ++out.skipped;
            continue;
          }
          ++out.labeled[ab | (ac << 1) | (bc << 2)];
        }
      }
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const int ab = at(a, b);
        for (int c = b + 1; c < m; ++c) {
          const int ac = at(a, c), bc = at(b, c);
          for (int d = c + 1; d < m; ++d) {
            const int ad = at(a, d), bd = at(b, d), cd = at(c, d);
            if (ab < 0 || ac < 0 || bc < 0 || ad < 0 || bd < 0 || cd < 0) {
              ++out.skipped;
              continue;
            }
            // pairs: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
            ++out.labeled[ab | (ac << 1) | (ad << 2) | (bc << 3) | (bd << 4) | (cd << 5)];
          }
        }
      }
  }
  for (std::uint64_t c : out.labeled) out.subsets += c;

  const int edge_pairs = k * (k - 1) / 2;
  for (std::size_t id = 0; id < cat.class_names.size(); ++id) {
    PatternClass pc;
    pc.name = cat.class_names[id];
    pc.labeled_count = cat.class_sizes[id];
    pc.reference = std::ldexp(static_cast<double>(pc.labeled_count), -edge_pairs);
    out.classes.push_back(pc);
  }
  for (std::size_t mask = 0; mask < out.labeled.size(); ++mask) out.classes[cat.class_of_mask[mask]].observed += out.labeled[mask];
  for (auto& pc : out.classes)
    pc.frequency = out.subsets == 0 ? 0.0 : static_cast<double>(pc.observed) / static_cast<double>(out.subsets);
  return out;
}

}  // namespace intransitive
