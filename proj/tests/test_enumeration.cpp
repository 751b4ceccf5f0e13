#include <set>

#include "doctest.h"
#include "intransitive/enumeration.hpp"
#include "intransitive/errors.hpp"
#include "oracles.hpp"

using namespace intransitive;

namespace {

oracle::Faces faces_of(const Die& d) { return {d.faces().begin(), d.faces().end()}; }

// Verdict matrix over a list of face vectors, +1 / 0 / -1.
std::vector<std::vector<int>> verdicts(const std::vector<oracle::Faces>& dice) {
  std::vector<std::vector<int>> v(dice.size(), std::vector<int>(dice.size()));
  for (std::size_t i = 0; i < dice.size(); ++i)
    for (std::size_t j = 0; j < dice.size(); ++j) v[i][j] = oracle::verdict(dice[i], dice[j]);
  return v;
}

Rational brute_tie_probability(const std::vector<oracle::Faces>& dice) {
  const auto v = verdicts(dice);
  BigInt ties = 0;
  for (const auto& row : v)
    for (int x : row) ties += x == 0;
  return Rational(ties, BigInt(dice.size() * dice.size()));
}

// P(A beats C | A beats B, B beats C) with per-die weights.
std::optional<Rational> brute_triple(const std::vector<oracle::Faces>& dice, const std::vector<BigInt>& weight) {
  const auto v = verdicts(dice);
  BigInt chain = 0, closed = 0;
  for (std::size_t a = 0; a < dice.size(); ++a)
    for (std::size_t b = 0; b < dice.size(); ++b) {
      if (v[a][b] != 1) continue;
      for (std::size_t c = 0; c < dice.size(); ++c) {
        if (v[b][c] != 1) continue;
        const BigInt w = weight[a] * weight[b] * weight[c];
        chain += w;
        if (v[a][c] == 1) closed += w;
      }
    }
  if (chain == 0) return std::nullopt;
  return Rational(closed, chain);
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt multiplicity(const oracle::Faces& sorted) {
  BigInt r = factorial(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

}  // namespace

TEST_CASE("the five four-sided dice, in order") {
  const auto dice = enumerate_multiset(4);
  REQUIRE(dice.size() == 5);
  const std::vector<oracle::Faces> expected{{1, 1, 4, 4}, {1, 2, 3, 4}, {1, 3, 3, 3}, {2, 2, 2, 4}, {2, 2, 3, 3}};
  for (std::size_t i = 0; i < 5; ++i) CHECK(faces_of(dice[i]) == expected[i]);
  REQUIRE(enumerate_multiset(1).size() == 1);
  CHECK(faces_of(enumerate_multiset(1)[0]) == oracle::Faces{1});
}

TEST_CASE("multiset enumeration matches brute force") {
  for (int n = 1; n <= 7; ++n) {
    const auto dice = enumerate_multiset(n);
    const auto brute = oracle::multisets(n);
    REQUIRE(dice.size() == brute.size());
    for (std::size_t i = 0; i < dice.size(); ++i) CHECK(faces_of(dice[i]) == brute[i]);
  }
  const auto twelve = enumerate_multiset(12);
  std::set<oracle::Faces> unique;
  for (const auto& d : twelve) unique.insert(faces_of(d));
  CHECK(unique.size() == twelve.size());
  CHECK_THROWS_AS(enumerate_multiset(13), CapExceeded);
}

TEST_CASE("balanced counts") {
  CHECK(count_balanced(1) == 1);
  CHECK(count_balanced(2) == 2);
  CHECK(count_balanced(3) == 7);
  for (int n = 1; n <= 7; ++n) CHECK(count_balanced(n) == BigInt(oracle::balanced_sequences(n).size()));
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& d : enumerate_multiset(n)) {
      CHECK(permutation_count(d) == multiplicity(faces_of(d)));
      total += permutation_count(d);
    }
    CHECK(total == count_balanced(n));
  }
}

TEST_CASE("pairwise census trivial cases") {
  CHECK(exact_pairwise_stats(1, Model::balanced_sequence).tie_probability == 1);
  CHECK(exact_pairwise_stats(2, Model::balanced_sequence).tie_probability == 1);
  CHECK_THROWS_AS(exact_pairwise_stats(10, Model::multiset_canonical), CapExceeded);
}

TEST_CASE("pairwise census, multiset model, n=4") {
  const ExactCensus c = exact_pairwise_stats(4, Model::multiset_canonical);
  const auto brute = oracle::multisets(4);
  const auto v = verdicts(brute);
  CHECK(c.support_count == 5);
  CHECK(c.tie_probability == brute_tie_probability(brute));
  CHECK(c.score_sum_agrees);
  REQUIRE(c.standings.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(faces_of(c.standings[i].die) == brute[i]);
    int wins = 0, ties = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      wins += v[i][j] == 1;
      ties += v[i][j] == 0;
      const Verdict expected = v[i][j] == 1 ? Verdict::a_wins : (v[i][j] == -1 ? Verdict::b_wins : Verdict::tie);
      CHECK(c.beat_matrix[i][j] == expected);
    }
    CHECK(c.standings[i].beats == Rational(wins, 5));
    CHECK(c.standings[i].ties == Rational(ties, 5));
  }
}

TEST_CASE("pairwise census, balanced model, against all sequences") {
  for (int n = 3; n <= 6; ++n) {
    const auto seqs = oracle::balanced_sequences(n);
    const ExactCensus c = exact_pairwise_stats(n, Model::balanced_sequence);
    CHECK(c.support_count == BigInt(seqs.size()));
    CHECK(c.score_sum_agrees);
    CHECK(c.tie_probability == brute_tie_probability(seqs));
    const Rational p = c.tie_probability;
    CHECK(numerator(p) * denominator(p) > 0);
  }
}

TEST_CASE("triple census") {
  CHECK_FALSE(exact_triple_stats(1, Model::balanced_sequence).has_value());
  CHECK_FALSE(exact_triple_stats(2, Model::multiset_canonical).has_value());
  CHECK_THROWS_AS(exact_triple_stats(7, Model::balanced_sequence), CapExceeded);

  for (int n = 3; n <= 6; ++n) {
    const auto ms = oracle::multisets(n);
    const auto exact = exact_triple_stats(n, Model::multiset_canonical);
    const auto brute = brute_triple(ms, std::vector<BigInt>(ms.size(), 1));
    REQUIRE(exact.has_value() == brute.has_value());
    if (exact) CHECK(*exact == *brute);
  }
  {
    const auto seqs = oracle::balanced_sequences(5);
    const auto brute = brute_triple(seqs, std::vector<BigInt>(seqs.size(), 1));
    REQUIRE(brute.has_value());
    CHECK(*exact_triple_stats(5, Model::balanced_sequence) == *brute);
  }
  {
    const auto ms = oracle::multisets(6);
    std::vector<BigInt> w;
    for (const auto& f : ms) w.push_back(multiplicity(f));
    CHECK(*exact_triple_stats(6, Model::balanced_sequence) == *brute_triple(ms, w));
  }
}
