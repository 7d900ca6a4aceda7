#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpp/weight.hpp"

namespace lpp {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

/// Restriction of the two-colored complete DAG to the vertices 0..n.
///
/// Every ordered pair (i, j), 0 <= i < j <= n, carries exactly one color.
/// Colors are packed one bit per pair in row-major order (by i, then j); this
/// order is also the order in which sample_window consumes random words, so
/// it is part of the reproducibility contract. Immutable once built.
class ColoredWindow {
 public:
  /// All-red window on 0..n. Requires n >= 1.
  explicit ColoredWindow(int n);

  int n() const { return n_; }
  std::size_t pair_count() const { return pair_count(n_); }
  static std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
  }

  /// Position of (i, j) in the packed enumeration. Requires 0 <= i < j <= n.
  static std::size_t pair_index(int n, int i, int j) {
    const auto ii = static_cast<std::size_t>(i);
    return ii * static_cast<std::size_t>(n) - ii * (ii - 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
  }

  bool is_blue(int i, int j) const {
    const std::size_t k = pair_index(n_, i, j);
    return (bits_[k >> 6] >> (k & 63)) & 1u;
  }
  Color color(int i, int j) const { return is_blue(i, j) ? Color::Blue : Color::Red; }

  std::size_t blue_count() const;

  /// Blue pairs in lexicographic order.
  std::vector<std::pair<int, int>> blue_edges() const;

  std::span<const std::uint64_t> words() const { return bits_; }

  /// Window from packed words in enumeration order. Throws
  /// std::invalid_argument on a size mismatch or stray bits past the last pair.
  static ColoredWindow from_words(int n, std::vector<std::uint64_t> words);

  friend bool operator==(const ColoredWindow&, const ColoredWindow&) = default;

 private:
  friend class WindowBuilder;

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a ColoredWindow. Pairs default to red.
class WindowBuilder {
 public:
  explicit WindowBuilder(int n) : window_(n) {}

  /// Throws std::out_of_range unless 0 <= i < j <= n.
  WindowBuilder& set(int i, int j, Color c);
  WindowBuilder& blue(int i, int j) { return set(i, j, Color::Blue); }

  ColoredWindow build() && { return std::move(window_); }

 private:
  ColoredWindow window_;
};

/// Each pair blue independently with probability p, driven by replica 0 of
/// `seed`. Throws std::invalid_argument unless 0 < p < 1 and n >= 1.
ColoredWindow sample_window(double p, int n, std::uint64_t seed);

/// Same, for replica `replica` of the run keyed by `seed`.
ColoredWindow sample_window(double p, int n, std::uint64_t seed, std::uint64_t replica);

/// Listed pairs blue, all others red. Duplicates are harmless; out-of-range
/// or reversed pairs throw std::out_of_range.
ColoredWindow from_edge_list(int n, std::span<const std::pair<int, int>> blue_edges);

/// Blue <-> red swapped on every pair.
ColoredWindow complement(const ColoredWindow& g);

/// Restriction to vertices 0..m. Requires 1 <= m <= g.n().
ColoredWindow restrict_to_prefix(const ColoredWindow& g, int m);

/// Strictly increasing vertex sequence i_0 < ... < i_l with l >= 1.
class Path {
 public:
  /// Throws std::invalid_argument on fewer than two vertices or a
  /// non-increasing sequence.
  explicit Path(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  int front() const { return vertices_.front(); }
  int back() const { return vertices_.back(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<int> vertices_;
};

/// Path with consecutive vertices first..last.
Path full_path(int first, int last);

struct PathSummary {
  ExtendedReal weight;
  int blue_count = 0;
  int red_count = 0;
  std::optional<Path> path;
};

/// Exact blue/red counts of `path` and its weight blue + x * red. Under
/// MinusInfinity the weight is -inf as soon as one edge is red. Throws
/// std::invalid_argument if the path leaves 0..n.
PathSummary path_weight(const ColoredWindow& g, const WeightParam& x, const Path& path);

}  // namespace lpp
