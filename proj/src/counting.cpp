#include "intransitive/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace intransitive {

namespace {

// One step of the faces-in-[0,n-1] convolution: next[e] = sum_{f=0}^{n-1} prev[e-f],
// maintained as a sliding window.
std::vector<BigInt> extend_row(const std::vector<BigInt>& prev, int n, int max_excess) {
  std::vector<BigInt> next(max_excess + 1);
  BigInt window = 0;
  for (int e = 0; e <= max_excess; ++e) {
    if (e < static_cast<int>(prev.size())) window += prev[e];
    const int leaving = e - n;
    if (leaving >= 0 && leaving < static_cast<int>(prev.size())) window -= prev[leaving];
    next[e] = window;
  }
  return next;
}

}  // namespace

CompletionTable::CompletionTable(int n) : n_(n), max_excess_(n * (n - 1) / 2) {
  if (n < 1) throw std::invalid_argument("CompletionTable: n must be >= 1");
  const std::size_t width = static_cast<std::size_t>(max_excess_) + 1;
  table_.resize(width * (n_ + 1));
  std::vector<BigInt> row(width);
  row[0] = 1;
  std::copy(row.begin(), row.end(), table_.begin());
  for (int k = 1; k <= n_; ++k) {
    row = extend_row(row, n_, max_excess_);
    std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(width * k));
  }
}

const BigInt& CompletionTable::count(int k, long excess) const {
  if (k < 0 || k > n_ || excess < 0 || excess > max_excess_) return zero_;
  return table_[static_cast<std::size_t>(k) * (max_excess_ + 1) + static_cast<std::size_t>(excess)];
}

long MultisetTable::row_length(int k, int m) const {
  return std::min<long>(static_cast<long>(k) * (m - 1), max_sum_) + 1;
}

MultisetTable::MultisetTable(int n) : n_(n), max_sum_(n * (n - 1) / 2) {
  if (n < 1) throw std::invalid_argument("MultisetTable: n must be >= 1");
  offsets_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
  std::size_t total = 0;
  for (int m = 1; m <= n_; ++m) {
    for (int k = 0; k <= n_; ++k) {
      offsets_[static_cast<std::size_t>(m) * (n_ + 1) + k] = total;
      total += static_cast<std::size_t>(row_length(k, m));
    }
  }
  table_.assign(total, Count(0));

  // m = 1: only the value 0 is available.
  for (int k = 0; k <= n_; ++k) table_[row_offset(k, 1)] = 1;
  // M(k, m, s) = M(k, m-1, s) + M(k-1, m, s-(m-1)).
  for (int m = 2; m <= n_; ++m) {
    for (int k = 0; k <= n_; ++k) {
      const long len = row_length(k, m);
      Count* out = &table_[row_offset(k, m)];
      for (long s = 0; s < len; ++s) {
        Count value = count(k, m - 1, s);
        if (k > 0) value += count(k - 1, m, s - (m - 1));
        out[s] = value;
      }
    }
  }
}

MultisetTable::Count MultisetTable::count(int k, int m, long sum) const {
  if (k < 0 || k > n_ || m < 1 || m > n_ || sum < 0) return 0;
  if (sum >= row_length(k, m)) return 0;
  return table_[row_offset(k, m) + static_cast<std::size_t>(sum)];
}

namespace {

template <typename Table>
std::shared_ptr<const Table> cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Table>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Table>(n);
  return slot;
}

}  // namespace

std::shared_ptr<const CompletionTable> completion_table(int n) { return cached<CompletionTable>(n); }
std::shared_ptr<const MultisetTable> multiset_table(int n) { return cached<MultisetTable>(n); }

BigInt count_balanced_sequences(int n) {
  if (n < 1) throw std::invalid_argument("count_balanced: n must be >= 1");
  const int max_excess = n * (n - 1) / 2;
  std::vector<BigInt> row(max_excess + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row = extend_row(row, n, max_excess);
  return row[max_excess];
}

}  // namespace intransitive
