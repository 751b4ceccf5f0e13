#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "intransitive/enumeration.hpp"
#include "intransitive/rng.hpp"
#include "intransitive/samplers.hpp"
#include "intransitive/tournament.hpp"
#include "oracles.hpp"

using namespace intransitive;

namespace {

// Random near tournament: each pair is a tie with probability tie_p, otherwise a fair coin.
Tournament random_tournament(int m, double tie_p, RngStream& rng) {
  Tournament t(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (rng.uniform01() < tie_p) continue;
      if (rng.below(2)) t.set_edge(a, b);
      else t.set_edge(b, a);
    }
  return t;
}

std::uint64_t choose(std::uint64_t m, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return r;
}

// Score sequence of the labeled k-tournament with the given pair bitmask, sorted.
std::string score_name(int k, int mask) {
  std::vector<int> score(k);
  int bit = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++bit) ++score[(mask >> bit) & 1 ? i : j];
  std::sort(score.begin(), score.end());
  std::string s;
  for (int x : score) s += static_cast<char>('0' + x);
  return s;
}

}  // namespace

TEST_CASE("tournament basics") {
  Tournament t(4);
  CHECK(t.tie_count() == 6);
  t.set_edge(0, 1);
  t.set_edge(2, 1);
  CHECK(t.has_edge(0, 1));
  CHECK_FALSE(t.has_edge(1, 0));
  CHECK(t.out_degree(0) == 1);
  CHECK(t.in_degree(1) == 2);
  CHECK(t.edge_count() + t.tie_count() == 6);
  t.set_tie(0, 1);
  CHECK(t.is_tie(1, 0));
  CHECK(t.edges().size() == 1);
  CHECK(t.tie_pairs().size() == 5);
}

TEST_CASE("tournament from dice") {
  const Die d({1, 1, 4, 4});
  const Tournament same = Tournament::from_dice({d, d, d});
  CHECK(same.edge_count() == 0);
  CHECK(same.tie_count() == 3);

  const auto dice = enumerate_multiset(4);
  const Tournament t = Tournament::from_dice(dice, 3);
  for (std::size_t i = 0; i < dice.size(); ++i)
    for (std::size_t j = 0; j < dice.size(); ++j) {
      if (i == j) continue;
      const oracle::Faces a(dice[i].faces().begin(), dice[i].faces().end());
      const oracle::Faces b(dice[j].faces().begin(), dice[j].faces().end());
      const int v = oracle::verdict(a, b);
      CHECK(t.has_edge(i, j) == (v == 1));
      CHECK(t.is_tie(i, j) == (v == 0));
    }
  CHECK_THROWS_AS(Tournament::from_dice({d, Die::standard(5)}), std::invalid_argument);
}

TEST_CASE("triple census on small cases") {
  Tournament cyc(3);
  cyc.set_edge(0, 1);
  cyc.set_edge(1, 2);
  cyc.set_edge(2, 0);
  CHECK(triple_census(cyc) == TripleCensus{0, 1, 0, 1});
  Tournament tr(3);
  tr.set_edge(0, 1);
  tr.set_edge(1, 2);
  tr.set_edge(0, 2);
  CHECK(triple_census(tr) == TripleCensus{1, 0, 0, 1});
  CHECK(triple_census(Tournament(3)) == TripleCensus{0, 0, 1, 1});
  CHECK(std::isnan(triple_census(Tournament(3)).intransitive_fraction()));
}

TEST_CASE("fast triple census matches the cubic classifier") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    RngStream rng(123, s);
    const int m = 3 + static_cast<int>(rng.below(48));
    const double tie_p = s % 3 == 0 ? 0.0 : 0.05 * (s % 7);
    const Tournament t = random_tournament(m, tie_p, rng);
    const TripleCensus fast = triple_census(t);
    CHECK(fast == triple_census_reference(t));
    CHECK(fast.transitive + fast.intransitive + fast.incomplete == choose(m, 3));
  }
}

TEST_CASE("path-2 identity") {
  Tournament cyc(3);
  cyc.set_edge(0, 1);
  cyc.set_edge(1, 2);
  cyc.set_edge(2, 0);
  Path2Check c = path2_identity_check(cyc);
  CHECK(c.directed_paths == 3);
  CHECK(c.degree_products == 3);
  CHECK(c.holds);
  Tournament tr(3);
  tr.set_edge(0, 1);
  tr.set_edge(1, 2);
  tr.set_edge(0, 2);
  c = path2_identity_check(tr);
  CHECK(c.directed_paths == 1);
  CHECK(c.degree_products == 1);
  CHECK(c.holds);

  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStream rng(55, s);
    const int m = 2 + static_cast<int>(rng.below(63));
    const Tournament t = random_tournament(m, 0.0, rng);
    const Path2Check p = path2_identity_check(t);
    REQUIRE(p.tie_free);
    REQUIRE(p.holds);
    REQUIRE(p.directed_paths == p.degree_products);
    const TripleCensus census = triple_census(t);
    REQUIRE(2 * census.intransitive == p.directed_paths - p.triangles);
  }
  RngStream rng(56, 0);
  CHECK_FALSE(path2_identity_check(random_tournament(20, 0.3, rng)).tie_free);
}

TEST_CASE("out-degree concentration") {
  const int m = 11;
  Tournament reg(m);
  for (int a = 0; a < m; ++a)
    for (int d = 1; d <= (m - 1) / 2; ++d) reg.set_edge(a, (a + d) % m);
  const DegreeSummary r = outdegree_concentration(reg, 0.05);
  CHECK(r.mean == doctest::Approx(5.0));
  CHECK(r.variance == doctest::Approx(0.0));
  CHECK(r.concentrated_fraction == 1.0);

  // Transitive tournament: out-degrees 0..m-1, a poor fit for the window.
  Tournament star(40);
  for (int a = 0; a < 40; ++a)
    for (int b = a + 1; b < 40; ++b) star.set_edge(a, b);
  CHECK(outdegree_concentration(star, 0.1).concentrated_fraction < 0.25);
}

TEST_CASE("pattern catalogue") {
  const PatternCatalogue& three = pattern_catalogue(3);
  CHECK(three.class_of_mask.size() == 8);
  CHECK(three.class_names.size() == 2);
  CHECK(std::accumulate(three.class_sizes.begin(), three.class_sizes.end(), 0) == 8);

  const PatternCatalogue& four = pattern_catalogue(4);
  REQUIRE(four.class_of_mask.size() == 64);
  REQUIRE(four.class_names.size() == 4);
  // For k = 4 the score sequence identifies the isomorphism class.
  std::map<std::string, int> sizes;
  for (int mask = 0; mask < 64; ++mask) {
    ++sizes[score_name(4, mask)];
    CHECK(four.class_names[four.class_of_mask[mask]] == score_name(4, mask));
  }
  for (std::size_t c = 0; c < four.class_names.size(); ++c) CHECK(four.class_sizes[c] == sizes[four.class_names[c]]);
  CHECK(sizes == std::map<std::string, int>{{"0123", 24}, {"0222", 8}, {"1113", 8}, {"1122", 24}});
  CHECK_THROWS_AS(pattern_frequencies(Tournament(5), 5), std::invalid_argument);
}

TEST_CASE("pattern frequencies match brute-force subset counts") {
  RngStream rng(7, 0);
  const int m = 18;
  const Tournament t = random_tournament(m, 0.1, rng);
  for (int k : {3, 4}) {
    const PatternFrequencies pf = pattern_frequencies(t, k);
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t skipped = 0;
    std::vector<int> idx(k);
    std::vector<bool> pick(m, false);
    std::fill(pick.end() - k, pick.end(), true);
    do {
      int w = 0;
      for (int i = 0; i < m; ++i)
        if (pick[i]) idx[w++] = i;
      int mask = 0, bit = 0;
      bool tie = false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++bit) {
          if (t.is_tie(idx[i], idx[j])) tie = true;
          if (t.has_edge(idx[i], idx[j])) mask |= 1 << bit;
        }
      if (tie) ++skipped;
      else ++counts[score_name(k, mask)];
    } while (std::next_permutation(pick.begin(), pick.end()));
    CHECK(pf.skipped == skipped);
    std::uint64_t total = 0;
    for (const auto& c : pf.classes) {
      CHECK(c.observed == counts[c.name]);
      CHECK(c.reference == doctest::Approx(c.labeled_count / std::pow(2.0, k * (k - 1) / 2)));
      total += c.observed;
    }
    CHECK(total == pf.subsets);
    CHECK(pf.subsets + pf.skipped == choose(m, k));
  }
}

TEST_CASE("dice tournaments at n=100") {
  std::vector<Die> dice;
  for (std::uint64_t i = 0; i < 200; ++i) {
    RngStream rng(1, i);
    dice.push_back(sample_die(100, Model::balanced_sequence, rng));
  }
  const Tournament t = Tournament::from_dice(dice);
  CHECK(t.tie_count() < choose(200, 2) / 20);
  const double cyclic = triple_census(t).intransitive_fraction();
  CHECK(cyclic == doctest::Approx(0.25).epsilon(0.2));
}
