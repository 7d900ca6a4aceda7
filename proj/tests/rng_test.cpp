#include <gtest/gtest.h>

#include <array>
#include <set>

#include "lpp/rng.hpp"

namespace lpp {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Known-answer vectors published with the reference Philox implementation.
TEST(Philox4x32, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(ReplicaStream, SameSeedAndReplicaRepeat) {
  ReplicaStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
}

TEST(ReplicaStream, ReplicasAndSeedsDiffer) {
  std::set<std::uint64_t> first;
  for (std::uint64_t r = 0; r < 1000; ++r) first.insert(ReplicaStream(42, r)());
  for (std::uint64_t s = 0; s < 1000; ++s) first.insert(ReplicaStream(s + 1000, 0)());
  EXPECT_EQ(first.size(), 2000u);
}

TEST(BernoulliThreshold, ScalesProbabilityToFullRange) {
  EXPECT_EQ(bernoulli_threshold(0.5), std::uint64_t{1} << 63);
  EXPECT_EQ(bernoulli_threshold(0.25), std::uint64_t{1} << 62);
  EXPECT_THROW(bernoulli_threshold(0.0), std::invalid_argument);
  EXPECT_THROW(bernoulli_threshold(1.0), std::invalid_argument);
}

TEST(DeriveSeed, StreamsAreDistinct) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 1), derive_seed(2, 1));
  EXPECT_EQ(derive_seed(9, 3), derive_seed(9, 3));
}

}  // namespace
}  // namespace lpp
