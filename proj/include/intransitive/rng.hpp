#pragma once

#include <array>
#include <cstdint>

namespace intransitive {

/// Philox4x32-10 block function (Salmon et al., SC'11). Pure: same key and
/// counter always give the same four output words.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Counter-based random stream. The 64-bit seed is the Philox key; the stream
/// index occupies the high half of the counter and the block number the low
/// half, so every (seed, stream_index) pair owns a disjoint 2^64-block range.
class RngStream {
 public:
  static constexpr const char* generator_name = "philox4x32-10/stream-v1";

  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-shift with rejection; exact.
  std::uint32_t below(std::uint32_t bound);

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

}  // namespace intransitive
