#pragma once

#include <optional>
#include <vector>

#include "lpp/weight.hpp"
#include "lpp/window.hpp"

namespace lpp {

/// Red-edge extremes over the maximal paths, with one witness for each.
struct RedExtremes {
  int min_red = 0;
  int max_red = 0;
  Path witness_min;
  Path witness_max;
};

/// Heaviest-path weight W between two vertices plus the red-count range over
/// all paths attaining it. The range gives the one-sided slopes of x -> W at
/// x: the left slope is min_red, the right slope max_red.
///
/// `extremes` is absent exactly when W = -inf (x = -inf and no blue path).
struct MaximalProfile {
  ExtendedReal weight;
  std::optional<RedExtremes> extremes;
};

/// Exact W^x_{i,j} by forward dynamic programming, O((j-i)^2) time, O(j-i)
/// memory.
///
/// A prefix of a maximal path is maximal to its own endpoint, so every
/// maximal i -> v path is a maximal i -> u path followed by one edge (u, v)
/// with W_u + w(u, v) = W_v. Tracking, per vertex, the least and greatest
/// red count over those optimal predecessors therefore yields the exact red
/// range over all maximal paths without enumerating them.
///
/// Ties are decided by exact integer arithmetic when x is rational. For float
/// x ties use exact floating equality, which is not sound for certifying
/// criticality; pass a Rational there.
///
/// Throws std::invalid_argument unless 0 <= i < j <= n, and
/// std::overflow_error if the scaled weights would not fit in 62 bits.
MaximalProfile heaviest(const ColoredWindow& g, const WeightParam& x, int i, int j);

inline MaximalProfile heaviest(const ColoredWindow& g, const WeightParam& x) {
  return heaviest(g, x, 0, g.n());
}

/// Longest all-blue i -> j path; std::nullopt stands for -inf (no blue path).
std::optional<int> heaviest_blue(const ColoredWindow& g, int i, int j);

/// Enumeration guard for brute_force_profile.
inline constexpr int kBruteForceMaxSpan = 24;

/// Same contract as heaviest(), computed by enumerating all 2^(j-i-1) paths.
/// Ground-truth oracle; throws std::invalid_argument when j - i exceeds
/// kBruteForceMaxSpan. Witnesses are the lexicographically first paths (by
/// subset bitmask) attaining the extremes.
MaximalProfile brute_force_profile(const ColoredWindow& g, const WeightParam& x, int i, int j);

/// W^x_{0,n} and the red range, without witness paths. min_red/max_red are
/// zero when the weight is -inf.
struct WindowSummary {
  ExtendedReal weight;
  int min_red = 0;
  int max_red = 0;
};

WindowSummary summarize_window(const ColoredWindow& g, const WeightParam& x);

/// W^x_{0,v} for v = 0..n (entry 0 is 0). Unreachable vertices under
/// MinusInfinity hold -inf.
std::vector<ExtendedReal> prefix_heaviest(const ColoredWindow& g, const WeightParam& x);

}  // namespace lpp
