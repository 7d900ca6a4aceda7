#include "lpp/window.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "lpp/rng.hpp"

namespace lpp {

namespace {

std::size_t word_count(int n) { return (ColoredWindow::pair_count(n) + 63) / 64; }

void check_pair(int n, int i, int j) {
  if (i < 0 || j > n || i >= j) {
    throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 0 <= i < j <= " + std::to_string(n));
  }
}

}  // namespace

ColoredWindow::ColoredWindow(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("window needs n >= 1");
  bits_.assign(word_count(n), 0);
}

ColoredWindow ColoredWindow::from_words(int n, std::vector<std::uint64_t> words) {
  ColoredWindow g(n);
  if (words.size() != g.bits_.size()) throw std::invalid_argument("word count mismatch");
  const std::size_t used = g.pair_count() & 63;
  if (used != 0 && (words.back() >> used) != 0) {
    throw std::invalid_argument("bits set past the last pair");
  }
  g.bits_ = std::move(words);
  return g;
}

std::size_t ColoredWindow::blue_count() const {
  std::size_t count = 0;
  for (auto w : bits_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::vector<std::pair<int, int>> ColoredWindow::blue_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (is_blue(i, j)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

WindowBuilder& WindowBuilder::set(int i, int j, Color c) {
  check_pair(window_.n_, i, j);
  const std::size_t k = ColoredWindow::pair_index(window_.n_, i, j);
  const std::uint64_t mask = std::uint64_t{1} << (k & 63);
  if (c == Color::Blue) {
    window_.bits_[k >> 6] |= mask;
  } else {
    window_.bits_[k >> 6] &= ~mask;
  }
  return *this;
}

ColoredWindow sample_window(double p, int n, std::uint64_t seed) {
  return sample_window(p, n, seed, 0);
}

ColoredWindow sample_window(double p, int n, std::uint64_t seed, std::uint64_t replica) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("window needs n >= 1");
  const std::uint64_t threshold = bernoulli_threshold(p);
  ReplicaStream stream(seed, replica);
  // One 64-bit word per pair, consumed in enumeration order.
  const std::size_t pairs = ColoredWindow::pair_count(n);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t k = 0; k < pairs; ++k) {
    if (stream() < threshold) words[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  return ColoredWindow::from_words(n, std::move(words));
}

ColoredWindow from_edge_list(int n, std::span<const std::pair<int, int>> blue_edges) {
  WindowBuilder builder(n);
  for (const auto& [i, j] : blue_edges) builder.blue(i, j);
  return std::move(builder).build();
}

ColoredWindow complement(const ColoredWindow& g) {
  WindowBuilder builder(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (!g.is_blue(i, j)) builder.blue(i, j);
    }
  }
  return std::move(builder).build();
}

ColoredWindow restrict_to_prefix(const ColoredWindow& g, int m) {
  if (m < 1 || m > g.n()) throw std::invalid_argument("prefix length out of range");
  WindowBuilder builder(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (g.is_blue(i, j)) builder.blue(i, j);
    }
  }
  return std::move(builder).build();
}

Path::Path(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw std::invalid_argument("path needs at least one edge");
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    if (vertices_[k] <= vertices_[k - 1]) {
      throw std::invalid_argument("path vertices must be strictly increasing");
    }
  }
}

Path full_path(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return Path(std::move(v));
}

PathSummary path_weight(const ColoredWindow& g, const WeightParam& x, const Path& path) {
  if (path.front() < 0 || path.back() > g.n()) {
    throw std::invalid_argument("path leaves the window");
  }
  PathSummary s;
  const auto& v = path.vertices();
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (g.is_blue(v[k - 1], v[k])) {
      ++s.blue_count;
    } else {
      ++s.red_count;
    }
  }
  if (x.is_minus_infinity()) {
    s.weight = s.red_count > 0 ? ExtendedReal(MinusInfinity{}) : ExtendedReal(s.blue_count);
  } else if (x.is_exact()) {
    s.weight = ExtendedReal(Rational(s.blue_count) + x.exact() * s.red_count);
  } else {
    s.weight = ExtendedReal(s.blue_count + x.to_double() * s.red_count);
  }
  s.path = path;
  return s;
}

}  // namespace lpp
