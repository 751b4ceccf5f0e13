#include "intransitive/enumeration.hpp"

#include <stdexcept>

#include "intransitive/counting.hpp"
#include "intransitive/errors.hpp"

namespace intransitive {

namespace {

void extend(int n, int lo, long remaining, std::vector<int>& prefix, std::vector<Die>& out) {
  const int left = n - static_cast<int>(prefix.size());
  if (left == 0) {
    if (remaining == 0) out.emplace_back(prefix, Model::multiset_canonical);
    return;
  }
  for (int v = lo; v <= n; ++v) {
    // every remaining face is at least v and at most n
    if (static_cast<long>(v) * left > remaining) break;
    if (static_cast<long>(n) * (left - 1) + v < remaining) continue;
    prefix.push_back(v);
    extend(n, v, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

std::vector<Die> enumerate_multiset(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_multiset: n must be >= 1");
  if (n > cap) throw CapExceeded("enumerate_multiset", n, cap);
  std::vector<Die> out;
  std::vector<int> prefix;
  prefix.reserve(n);
  extend(n, 1, target_sum(n), prefix, out);
  return out;
}

BigInt count_balanced(int n) { return count_balanced_sequences(n); }

BigInt permutation_count(const Die& die) {
  BigInt out = factorial(die.sides());
  const auto counts = die.histogram();
  for (int c : counts) out /= factorial(c);
  return out;
}

namespace {

struct WeightedClasses {
  std::vector<Die> dice;
  std::vector<BigInt> weights;
  BigInt total;
};

WeightedClasses weighted_classes(int n, Model model) {
  WeightedClasses out;
  out.dice = enumerate_multiset(n, n);
  out.total = 0;
  for (const Die& d : out.dice) {
    BigInt w = model == Model::balanced_sequence ? permutation_count(d) : BigInt(1);
    out.total += w;
    out.weights.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<Verdict>> verdict_matrix(const std::vector<Die>& dice) {
  const std::size_t k = dice.size();
  std::vector<std::vector<Verdict>> m(k, std::vector<Verdict>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = beats(dice[i], dice[j]).verdict;
  return m;
}

}  // namespace

ExactCensus exact_pairwise_stats(int n, Model model, int cap) {
  if (n < 1) throw std::invalid_argument("exact_pairwise_stats: n must be >= 1");
  if (n > cap) throw CapExceeded("exact_pairwise_stats", n, cap);
  const WeightedClasses classes = weighted_classes(n, model);
  const std::size_t k = classes.dice.size();

  ExactCensus census;
  census.n = n;
  census.model = model;
  census.support_count = classes.total;
  census.beat_matrix = verdict_matrix(classes.dice);
  census.score_sum_agrees = true;

  BigInt tie_mass = 0;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt win = 0, tie = 0, loss = 0;
    BigInt win_by_score = 0, tie_by_score = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt& w = classes.weights[j];
      switch (census.beat_matrix[i][j]) {
        case Verdict::a_wins:
          win += w;
          break;
        case Verdict::tie:
          tie += w;
          break;
        case Verdict::b_wins:
          loss += w;
          break;
      }
      const Verdict by_score = verdict_from_score(score_sum(classes.dice[i], classes.dice[j]));
      if (by_score == Verdict::a_wins) win_by_score += w;
      if (by_score == Verdict::tie) tie_by_score += w;
    }
    if (win_by_score != win || tie_by_score != tie) census.score_sum_agrees = false;
    tie_mass += classes.weights[i] * tie;
    census.standings.push_back({classes.dice[i], classes.weights[i], Rational(win, classes.total),
                                Rational(tie, classes.total), Rational(loss, classes.total)});
  }
  census.tie_probability = Rational(tie_mass, classes.total * classes.total);
  return census;
}

std::optional<Rational> exact_triple_stats(int n, Model model, int cap) {
  if (n < 1) throw std::invalid_argument("exact_triple_stats: n must be >= 1");
  if (n > cap) throw CapExceeded("exact_triple_stats", n, cap);
  const WeightedClasses classes = weighted_classes(n, model);
  const auto verdicts = verdict_matrix(classes.dice);
  const std::size_t k = classes.dice.size();
  const auto wins = [&](std::size_t i, std::size_t j) { return verdicts[i][j] == Verdict::a_wins; };

  BigInt chain = 0;   // A beats B and B beats C
  BigInt closed = 0;  // ... and A beats C
  for (std::size_t b = 0; b < k; ++b) {
    BigInt below_b = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (wins(b, c)) below_b += classes.weights[c];
    for (std::size_t a = 0; a < k; ++a) {
      if (!wins(a, b)) continue;
      const BigInt wab = classes.weights[a] * classes.weights[b];
      chain += wab * below_b;
      BigInt both = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (wins(b, c) && wins(a, c)) both += classes.weights[c];
      closed += wab * both;
    }
  }
  if (chain == 0) return std::nullopt;
  return Rational(closed, chain);
}

}  // namespace intransitive
