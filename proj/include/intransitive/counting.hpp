#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <vector>

#include "intransitive/numeric.hpp"

namespace intransitive {

/// Number of sequences in [1,n]^k whose sum is k + excess, for 0 <= k <= n and
/// 0 <= excess <= n(n-1)/2 (the excess of a balanced die).
class CompletionTable {
 public:
  explicit CompletionTable(int n);

  int sides() const { return n_; }
  int max_excess() const { return max_excess_; }

  /// Zero outside the stored range.
  const BigInt& count(int k, long excess) const;

 private:
  int n_;
  int max_excess_;
  std::vector<BigInt> table_;  // (k, excess) row-major
  BigInt zero_;
};

/// Number of multisets of size k drawn from {0, ..., m-1} with the given sum,
/// for 0 <= k <= n, 1 <= m <= n and sum up to n(n-1)/2.
class MultisetTable {
 public:
  using Count = boost::multiprecision::checked_uint128_t;

  explicit MultisetTable(int n);

  int sides() const { return n_; }
  int max_sum() const { return max_sum_; }

  Count count(int k, int m, long sum) const;

 private:
  std::size_t row_offset(int k, int m) const { return offsets_[static_cast<std::size_t>(m) * (n_ + 1) + k]; }
  long row_length(int k, int m) const;

  int n_;
  int max_sum_;
  std::vector<std::size_t> offsets_;
  std::vector<Count> table_;
};

/// Tables are built once per n and shared read-only afterwards.
std::shared_ptr<const CompletionTable> completion_table(int n);
std::shared_ptr<const MultisetTable> multiset_table(int n);

/// count_balanced without materializing a table: last row only.
BigInt count_balanced_sequences(int n);

}  // namespace intransitive
