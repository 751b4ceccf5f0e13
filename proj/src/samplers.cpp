#include "intransitive/samplers.hpp"

#include <vector>

#include "intransitive/counting.hpp"
#include "intransitive/errors.hpp"

namespace intransitive {

BigInt uniform_below(const BigInt& bound, RngStream& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 31) / 32;
  const unsigned top_bits = bits - 32 * (words - 1);
  const std::uint32_t top_mask = top_bits == 32 ? 0xFFFFFFFFu : ((1u << top_bits) - 1u);
  for (;;) {
    BigInt candidate = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint32_t word = rng.next_u32();
      if (w == 0) word &= top_mask;
      candidate <<= 32;
      candidate |= word;
    }
    if (candidate < bound) return candidate;
  }
}

RejectionSample sample_balanced_rejection(int n, RngStream& rng, const RejectionOptions& options) {
  if (n < 1) throw std::invalid_argument("sample_balanced_rejection: n must be >= 1");
  const std::int64_t target = target_sum(n);
  const auto bound = static_cast<std::uint32_t>(n);
  SamplerStats stats;
  std::vector<int> faces(n);
  while (stats.attempts < options.attempt_cap) {
    ++stats.attempts;
    std::int64_t sum = 0;
    if (options.mode == RejectionMode::full_sequence) {
      for (int& f : faces) {
        f = 1 + static_cast<int>(rng.below(bound));
        sum += f;
      }
      if (sum != target) continue;
    } else {
      for (int i = 0; i + 1 < n; ++i) {
        faces[i] = 1 + static_cast<int>(rng.below(bound));
        sum += faces[i];
      }
      const std::int64_t last = target - sum;
      if (last < 1 || last > n) continue;
      faces[n - 1] = static_cast<int>(last);
    }
    ++stats.accepts;
    return {Die(faces, Model::balanced_sequence), stats};
  }
  throw SamplerFailure("sample_balanced_rejection: attempt cap " + std::to_string(options.attempt_cap) +
                       " exceeded at n=" + std::to_string(n));
}

Die sample_balanced_exact(int n, RngStream& rng, int cap) {
  if (n < 1) throw std::invalid_argument("sample_balanced_exact: n must be >= 1");
  if (n > cap) throw CapExceeded("sample_balanced_exact", n, cap);
  const auto table = completion_table(n);
  long excess = table->max_excess();
  std::vector<int> faces(n);
  for (int pos = 0; pos < n; ++pos) {
    const int remaining = n - pos;
    BigInt r = uniform_below(table->count(remaining, excess), rng);
    int chosen = n - 1;
    for (int f = 0; f < n; ++f) {
      const BigInt& w = table->count(remaining - 1, excess - f);
      if (r < w) {
        chosen = f;
        break;
      }
      r -= w;
    }
    faces[pos] = chosen + 1;
    excess -= chosen;
  }
  return Die(std::move(faces), Model::balanced_sequence);
}

Die sample_multiset(int n, RngStream& rng, int cap) {
  if (n < 1) throw std::invalid_argument("sample_multiset: n must be >= 1");
  if (n > cap) throw CapExceeded("sample_multiset", n, cap);
  const auto table = multiset_table(n);
  int k = n;
  long sum = table->max_sum();
  std::vector<int> faces;
  faces.reserve(n);
  // Values are shifted to {0, ..., n-1}; decide the multiplicity of value m-1 for m = n..2.
  for (int m = n; m >= 2 && k > 0; --m) {
    const int value = m - 1;
    BigInt r = uniform_below(BigInt(table->count(k, m, sum)), rng);
    int mult = 0;
    for (int c = 0; c <= k && static_cast<long>(c) * value <= sum; ++c) {
      const BigInt w(table->count(k - c, m - 1, sum - static_cast<long>(c) * value));
      if (r < w) {
        mult = c;
        break;
      }
      r -= w;
    }
    faces.insert(faces.end(), mult, value + 1);
    k -= mult;
    sum -= static_cast<long>(mult) * value;
  }
  faces.insert(faces.end(), k, 1);
  return Die(std::move(faces), Model::multiset_canonical);
}

Die sample_die(int n, Model model, RngStream& rng) {
  if (model == Model::multiset_canonical) return sample_multiset(n, rng);
  return sample_balanced_rejection(n, rng, {RejectionMode::last_face, 1'000'000'000}).die;
}

}  // namespace intransitive
