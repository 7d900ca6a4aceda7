#include <gtest/gtest.h>

#include "lpp/io.hpp"
#include "lpp/window.hpp"

namespace lpp {
namespace {

TEST(ColoredWindow, PairIndexEnumeratesRowMajor) {
  const int n = 6;
  std::size_t expected = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) EXPECT_EQ(ColoredWindow::pair_index(n, i, j), expected++);
  }
  EXPECT_EQ(expected, ColoredWindow::pair_count(n));
}

TEST(ColoredWindow, BuilderSetsExactlyTheListedPairs) {
  const std::vector<std::pair<int, int>> edges{{0, 2}, {1, 3}, {2, 3}};
  const auto g = from_edge_list(3, edges);
  EXPECT_EQ(g.blue_edges(), edges);
  EXPECT_EQ(g.blue_count(), 3u);
  EXPECT_FALSE(g.is_blue(0, 1));
  EXPECT_EQ(g.color(1, 3), Color::Blue);
  WindowBuilder b(3);
  EXPECT_THROW(b.blue(2, 2), std::out_of_range);
  EXPECT_THROW(b.blue(0, 4), std::out_of_range);
  EXPECT_THROW(ColoredWindow(0), std::invalid_argument);
}

TEST(ColoredWindow, FromWordsRejectsStrayBits) {
  EXPECT_NO_THROW(ColoredWindow::from_words(2, {0b111}));
  EXPECT_THROW(ColoredWindow::from_words(2, {0b1000}), std::invalid_argument);
  EXPECT_THROW(ColoredWindow::from_words(2, {}), std::invalid_argument);
}

TEST(SampleWindow, BlueFractionMatchesP) {
  // 447 * 448 / 2 = 100128 pairs; sd of the fraction is about 0.00145.
  const auto g = sample_window(0.3, 447, 2024);
  const double frac = static_cast<double>(g.blue_count()) / static_cast<double>(g.pair_count());
  EXPECT_NEAR(frac, 0.3, 0.005);
}

TEST(SampleWindow, ReproducibleAndReplicaSensitive) {
  EXPECT_EQ(sample_window(0.5, 50, 7, 3), sample_window(0.5, 50, 7, 3));
  EXPECT_NE(sample_window(0.5, 50, 7, 3), sample_window(0.5, 50, 7, 4));
  EXPECT_NE(sample_window(0.5, 50, 7, 3), sample_window(0.5, 50, 8, 3));
  EXPECT_EQ(sample_window(0.5, 50, 7), sample_window(0.5, 50, 7, 0));
  EXPECT_THROW(sample_window(1.0, 5, 1), std::invalid_argument);
}

TEST(Complement, IsAnInvolution) {
  for (std::uint64_t r = 0; r < 20; ++r) {
    const auto g = sample_window(0.4, 13, 5, r);
    const auto c = complement(g);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.blue_count() + c.blue_count(), g.pair_count());
  }
}

TEST(RestrictToPrefix, KeepsColorsInside) {
  const auto g = sample_window(0.5, 20, 11);
  const auto h = restrict_to_prefix(g, 9);
  ASSERT_EQ(h.n(), 9);
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j <= 9; ++j) EXPECT_EQ(h.is_blue(i, j), g.is_blue(i, j));
  }
}

TEST(WindowJson, RoundTripsRandomWindows) {
  for (std::uint64_t r = 0; r < 50; ++r) {
    const int n = 1 + static_cast<int>(r % 17);
    const auto g = sample_window(0.35, n, 99, r);
    const auto doc = window_to_json(g);
    EXPECT_EQ(window_from_json(nlohmann::json::parse(doc.dump())), g);
  }
}

TEST(WindowJson, PairsAreSortedLexicographically) {
  const std::vector<std::pair<int, int>> edges{{2, 3}, {0, 3}, {0, 1}};
  const auto doc = window_to_json(from_edge_list(3, edges));
  EXPECT_EQ(doc.dump(), R"({"n":3,"blue":[[0,1],[0,3],[2,3]]})");
}

TEST(PathWeight, CountsColorsExactly) {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {2, 4}};
  const auto g = from_edge_list(4, edges);
  const auto s = path_weight(g, Rational(-1, 2), Path({0, 1, 2, 4}));
  EXPECT_EQ(s.blue_count, 2);
  EXPECT_EQ(s.red_count, 1);
  EXPECT_EQ(s.weight, ExtendedReal(Rational(3, 2)));
  EXPECT_TRUE(path_weight(g, MinusInfinity{}, Path({0, 1, 2, 4})).weight.is_minus_infinity());
  EXPECT_THROW(Path({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(path_weight(g, Rational(0), Path({0, 5})), std::invalid_argument);
}

}  // namespace
}  // namespace lpp
