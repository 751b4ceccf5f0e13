#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace intransitive {

enum class Model { balanced_sequence, multiset_canonical };

std::string to_string(Model model);
Model model_from_string(const std::string& name);

/// Half-integer value held as twice its value, so sums and sign tests stay exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_doubled(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t doubled() const { return twice_; }
  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_doubled(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_doubled(twice_ - o.twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  std::int64_t twice_ = 0;
};

/// An n-sided die: n faces in [1, n] summing to n(n+1)/2.
///
/// Construction validates the constraints. Multiset-model dice are stored
/// sorted. A sorted copy of the faces is kept for the merge-based beats count.
class Die {
 public:
  Die(std::vector<int> faces, Model model = Model::balanced_sequence);

  /// The die (1, 2, ..., n).
  static Die standard(int n, Model model = Model::balanced_sequence);

  int sides() const { return static_cast<int>(faces_.size()); }
  Model model() const { return model_; }
  std::span<const int> faces() const { return faces_; }
  std::span<const int> sorted_faces() const { return sorted_; }

  /// Number of faces equal to each value; index 0 unused, size n+1.
  std::vector<int> histogram() const;

  bool operator==(const Die& other) const { return faces_ == other.faces_ && model_ == other.model_; }

 private:
  std::vector<int> faces_;
  std::vector<int> sorted_;
  Model model_;
};

std::string to_string(const Die& die);

/// Parse "1,1,4,4" (whitespace tolerated).
Die parse_die(const std::string& text, Model model = Model::balanced_sequence);

std::int64_t target_sum(int n);

enum class Verdict { a_wins, b_wins, tie };

std::string to_string(Verdict verdict);

struct BeatOutcome {
  std::int64_t greater = 0;  // pairs with a_i > b_j
  std::int64_t less = 0;     // pairs with a_i < b_j
  std::int64_t equal = 0;
  Verdict verdict = Verdict::tie;

  bool operator==(const BeatOutcome&) const = default;
};

/// Exact pair counts by merging sorted faces, O(n) after the cached sort.
BeatOutcome beats(const Die& a, const Die& b);

/// Quadratic reference counter over all n^2 pairs.
BeatOutcome beats_reference(const Die& a, const Die& b);

inline bool beats_strictly(const Die& a, const Die& b) { return beats(a, b).verdict == Verdict::a_wins; }

/// f_A(j) = #{a_i < j} + #{a_i = j}/2, for 1 <= j <= n.
HalfInteger f_of(const Die& die, int j);

/// g_A(j) = f_A(j) - j + 1/2.
HalfInteger g_of(const Die& die, int j);

/// Doubled g_A(1..n), element k holds 2 g_A(k+1).
std::vector<std::int64_t> g_table_doubled(const Die& die);

/// Sum over faces b_j of g_A(b_j). Positive iff B beats A, negative iff A beats B.
HalfInteger score_sum(const Die& a, const Die& b);

/// Sign of the score sum expressed as the verdict of A against B.
Verdict verdict_from_score(HalfInteger score);

/// Faces n+1-a_i. The model tag is preserved (and a multiset die is re-sorted).
Die complement(const Die& die);

}  // namespace intransitive
