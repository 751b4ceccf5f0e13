#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intransitive/die.hpp"

namespace intransitive {

/// Directed graph over m vertices in which every unordered pair carries either
/// one directed edge (winner -> loser) or a tie.
class Tournament {
 public:
  enum class Relation : std::int8_t { tie = 0, forward = 1, backward = -1 };

  explicit Tournament(int vertex_count);

  /// Pairwise beats over all C(m,2) pairs; ties become tie pairs.
  static Tournament from_dice(const std::vector<Die>& dice, int threads = 1);

  int vertex_count() const { return m_; }

  void set_edge(int winner, int loser);
  void set_tie(int a, int b);

  bool has_edge(int from, int to) const { return rel_[index(from, to)] == Relation::forward; }
  bool is_tie(int a, int b) const { return a != b && rel_[index(a, b)] == Relation::tie; }

  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<int, int>> tie_pairs() const;
  std::size_t edge_count() const;
  std::size_t tie_count() const;

  int out_degree(int v) const;
  int in_degree(int v) const;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * m_ + b; }

  int m_;
  std::vector<Relation> rel_;  // rel_[a*m+b] == forward iff a -> b
};

struct TripleCensus {
  std::uint64_t transitive = 0;
  std::uint64_t intransitive = 0;
  std::uint64_t incomplete = 0;  // triples touching at least one tie
  std::uint64_t total = 0;

  /// intransitive / (transitive + intransitive); NaN when no complete triple exists.
  double intransitive_fraction() const;
  bool operator==(const TripleCensus&) const = default;
};

/// Classifies all C(m,3) triples from degree counts plus a bitset pass over tie pairs.
TripleCensus triple_census(const Tournament& t);

/// O(m^3) classifier used as the reference for triple_census.
TripleCensus triple_census_reference(const Tournament& t);

struct Path2Check {
  std::uint64_t directed_paths = 0;     // #{(x,y,z) : x->y->z}, counted by brute force
  std::uint64_t degree_products = 0;    // sum_y d+(y) d-(y)
  std::uint64_t triangles = 0;          // complete triples
  std::uint64_t directed_triangles = 0; // cyclic triples
  bool tie_free = false;
  /// Both identities hold. Only meaningful (and only asserted) when tie_free.
  bool holds = false;
};

/// Checks #{x->y->z} == sum_y d+(y)d-(y) and #{x->y->z} == #triangles + 2 #directed triangles.
Path2Check path2_identity_check(const Tournament& t);

struct DegreeSummary {
  double mean = 0.0;
  double variance = 0.0;
  double epsilon = 0.0;
  /// Fraction of vertices with d+(x)/(m-1) in [1/2 - epsilon, 1/2 + epsilon].
  double concentrated_fraction = 0.0;
};

DegreeSummary outdegree_concentration(const Tournament& t, double epsilon);

struct PatternClass {
  std::string name;                // score sequence, e.g. "0123"
  int labeled_count = 0;           // labeled k-vertex tournaments in this class
  double reference = 0.0;          // labeled_count * 2^-C(k,2)
  std::uint64_t observed = 0;
  double frequency = 0.0;          // observed / sampled subsets
};

struct PatternFrequencies {
  int k = 0;
  std::uint64_t subsets = 0;  // tie-free k-subsets
  std::uint64_t skipped = 0;  // k-subsets containing a tie
  std::vector<std::uint64_t> labeled;  // indexed by edge bitmask over pairs (i<j) in lexicographic order
  std::vector<PatternClass> classes;
};

/// Frequencies of k-vertex sub-tournament patterns, k in {3, 4}.
PatternFrequencies pattern_frequencies(const Tournament& t, int k);

/// Class id (index into the class list) of a labeled k-vertex tournament bitmask, and the class list.
struct PatternCatalogue {
  int k = 0;
  std::vector<int> class_of_mask;
  std::vector<std::string> class_names;
  std::vector<int> class_sizes;
};
const PatternCatalogue& pattern_catalogue(int k);

}  // namespace intransitive
