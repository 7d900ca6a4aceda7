#pragma once

#include <cstdint>
#include <vector>

#include "lpp/replicas.hpp"
#include "lpp/weight.hpp"
#include "lpp/window.hpp"

namespace lpp {

/// Transitive closure of the blue subgraph of a window: reach(i, j) for i < j
/// is true iff some all-blue path leads from i to j.
///
/// One bitset row per vertex, built by a descending sweep: row i is the union
/// over blue successors j of {j} and row j. O(n^2) word operations.
class ReachabilityClosure {
 public:
  explicit ReachabilityClosure(const ColoredWindow& g);

  int n() const { return n_; }

  /// Requires 0 <= i < j <= n.
  bool reach(int i, int j) const {
    const std::size_t k = static_cast<std::size_t>(i) * stride_ + static_cast<std::size_t>(j >> 6);
    return (rows_[k] >> (j & 63)) & 1u;
  }

  /// Either reach(min, max) or i == j.
  bool connected(int i, int j) const {
    if (i == j) return true;
    return i < j ? reach(i, j) : reach(j, i);
  }

 private:
  int n_;
  std::size_t stride_;
  std::vector<std::uint64_t> rows_;
};

inline ReachabilityClosure blue_closure(const ColoredWindow& g) { return ReachabilityClosure(g); }

/// Membership of a window in the inter-skeleton class, plus the vertices of
/// (0, n) that look like skeleton points from inside the window.
///
/// A window skeleton is reachable from every smaller vertex and reaches every
/// larger one, within 0..n. That over-approximates skeleton membership in the
/// infinite graph, which also depends on vertices outside the window.
struct SkeletonReport {
  bool is_h = false;
  std::vector<int> window_skeletons;
};

/// The window is in the class iff 0 reaches n and for every interior vertex j:
///  (1) some blue 0 -> n path passes through j, and
///  (2) some vertex i != j is not blue-connected to j in either direction.
/// For n = 1 this means (0, 1) is blue; for n = 2 it never holds.
SkeletonReport is_h(const ColoredWindow& g);

/// is_h of every prefix window 0..m, m = 1..n, from a single closure.
/// Entry 0 is unused (false). Relies on paths being increasing: reachability
/// inside 0..m only involves vertices in 0..m, so one closure serves all m.
std::vector<bool> h_prefix_indicator(const ReachabilityClosure& closure);

/// Rate of skeleton points, prod_{k>=1} (1 - q^k)^2 with q = 1 - p, truncated
/// after `terms` factors once the bound on the neglected log-tail,
/// 2 q^(K+1) / ((1 - q)(1 - q^(K+1))), falls below `tol`.
struct GammaValue {
  double value = 0.0;
  int terms = 0;
};

/// Throws std::invalid_argument unless 0 < p < 1 and tol > 0.
GammaValue gamma_exact(double p, double tol);

/// Monte Carlo frequencies of the inter-skeleton event on 0..m, m = 1..n_max.
///
/// Each replica samples one window on 0..n_max and scores every prefix; each
/// prefix has the law of a window sampled alone. `phat[m]`, `stderr[m]` for
/// m = 1..n_max (entry 0 unused). `mean` estimates sum_m m * P(H_{0,m}), the
/// expected skeleton gap; its standard error comes from the per-replica
/// totals sum_m m * 1{H_{0,m}}.
struct DeltaPmf {
  double p = 0.0;
  int n_max = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<double> phat;
  std::vector<double> stderr;
  double total_mass = 0.0;
  double mean = 0.0;
  double mean_stderr = 0.0;
};

/// Throws std::invalid_argument unless 0 < p < 1, n_max >= 1, reps >= 1.
DeltaPmf delta_pmf_mc(double p, int n_max, std::int64_t reps, std::uint64_t seed,
                      Execution exec = Execution::Parallel);

/// Renewal-sum estimate gamma * sum_{m <= n_max} E[W^x_{0,m}; H_{0,m}].
struct RenewalTerm {
  int m = 0;
  double contribution = 0.0;
  double stderr = 0.0;
  double cumulative = 0.0;
};

struct RenewalEstimate {
  double p = 0.0;
  WeightParam x;
  int n_max = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  double mean = 0.0;
  double stderr = 0.0;
  std::vector<RenewalTerm> terms;
  /// |contribution| of the last term, a truncation diagnostic.
  double last_term = 0.0;
  /// Estimated sum_{m <= n_max} P(H_{0,m}); the shortfall from 1 is the
  /// mass of gaps longer than n_max that the truncation drops.
  double captured_mass = 0.0;
};

/// Requires finite x < 2 (the range where maximal paths pass through every
/// skeleton point); throws std::invalid_argument otherwise.
RenewalEstimate renewal_C(double p, const WeightParam& x, int n_max, std::int64_t reps,
                          std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace lpp
