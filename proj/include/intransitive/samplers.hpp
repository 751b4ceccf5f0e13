#pragma once

#include <cstdint>
#include <stdexcept>

#include "intransitive/die.hpp"
#include "intransitive/numeric.hpp"
#include "intransitive/rng.hpp"

namespace intransitive {

inline constexpr int kExactSamplerCap = 64;

struct SamplerStats {
  std::uint64_t attempts = 0;
  std::uint64_t accepts = 0;

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(accepts) / static_cast<double>(attempts);
  }
  SamplerStats& operator+=(const SamplerStats& o) {
    attempts += o.attempts;
    accepts += o.accepts;
    return *this;
  }
};

enum class RejectionMode {
  /// Draw all n faces i.i.d. uniform; accept iff the sum is n(n+1)/2.
  full_sequence,
  /// Draw n-1 faces; the last face is forced by the sum and accepted iff it lies in [1, n].
  /// Same target distribution, acceptance rate higher by a factor of n.
  last_face,
};

struct RejectionOptions {
  RejectionMode mode = RejectionMode::full_sequence;
  std::uint64_t attempt_cap = 1'000'000'000;
};

/// Raised when the rejection sampler exceeds its attempt cap.
class SamplerFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RejectionSample {
  Die die;
  SamplerStats stats;
};

RejectionSample sample_balanced_rejection(int n, RngStream& rng, const RejectionOptions& options = {});

/// Face-by-face sampling weighted by exact completion counts. Uniform over balanced sequences.
Die sample_balanced_exact(int n, RngStream& rng, int cap = kExactSamplerCap);

/// Uniform over multisets (returned sorted), sampling the multiplicity of each
/// value from the top down weighted by exact counts.
Die sample_multiset(int n, RngStream& rng, int cap = kExactSamplerCap);

/// Default sampler for experiments: last-face rejection for the balanced model,
/// the exact multiset sampler otherwise.
Die sample_die(int n, Model model, RngStream& rng);

/// Uniform integer in [0, bound), bound > 0.
BigInt uniform_below(const BigInt& bound, RngStream& rng);

}  // namespace intransitive
