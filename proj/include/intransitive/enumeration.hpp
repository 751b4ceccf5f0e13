#pragma once

#include <optional>
#include <vector>

#include "intransitive/die.hpp"
#include "intransitive/numeric.hpp"

namespace intransitive {

inline constexpr int kEnumerationCap = 12;
inline constexpr int kPairwiseCap = 9;
inline constexpr int kTripleCap = 6;

/// All multiset dice (non-decreasing face lists) in lexicographic order.
std::vector<Die> enumerate_multiset(int n, int cap = kEnumerationCap);

/// Number of balanced sequences: sequences in [n]^n summing to n(n+1)/2.
BigInt count_balanced(int n);

/// Number of distinct orderings of a die's faces, n! / prod(multiplicity!).
BigInt permutation_count(const Die& die);

/// Exact win/tie/loss fractions of one die against a uniformly random opponent.
struct DieStanding {
  Die die;
  BigInt weight;  // 1 in the multiset model, the permutation count in the balanced model
  Rational beats;
  Rational ties;
  Rational loses;
};

struct ExactCensus {
  int n = 0;
  Model model = Model::balanced_sequence;
  BigInt support_count;
  Rational tie_probability;
  /// One entry per multiset class; balanced-model fractions already use sequence weights.
  std::vector<DieStanding> standings;
  /// verdict of standings[i] against standings[j].
  std::vector<std::vector<Verdict>> beat_matrix;
  /// Beat fractions recomputed from score-sum signs agree with the direct pair verdicts.
  bool score_sum_agrees = false;
};

ExactCensus exact_pairwise_stats(int n, Model model, int cap = kPairwiseCap);

/// P(A beats C | A beats B and B beats C) for independent uniform dice.
/// Empty when the conditioning event has probability zero.
std::optional<Rational> exact_triple_stats(int n, Model model, int cap = kTripleCap);

}  // namespace intransitive
