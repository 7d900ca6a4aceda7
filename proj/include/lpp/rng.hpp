#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace lpp {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The block function maps a 128-bit counter and a 64-bit key to 128 random
/// bits. Nothing is carried between calls, so any replica can be generated
/// independently of the others, on any thread, in any order.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// SplitMix64 finalizer; used to derive independent seeds from a base seed.
std::uint64_t mix64(std::uint64_t z);

/// Seed for sub-run `stream` of a computation keyed by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

/// Stream of 64-bit words for replica `replica` of a run keyed by `seed`.
///
/// Key = seed. Counter words 2..3 hold the replica index, words 0..1 the
/// block index, so streams for distinct (seed, replica) never share a block.
/// Satisfies UniformRandomBitGenerator.
class ReplicaStream {
 public:
  using result_type = std::uint64_t;

  ReplicaStream(std::uint64_t seed, std::uint64_t replica)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        replica_(replica) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (buffered_ == 0) refill();
    return buffer_[--buffered_];
  }

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t replica_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

/// Threshold t such that a uniform 64-bit word u satisfies P(u < t) = p up to
/// 2^-64. Requires 0 < p < 1.
std::uint64_t bernoulli_threshold(double p);

}  // namespace lpp
