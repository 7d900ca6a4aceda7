#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpp/replicas.hpp"
#include "lpp/weight.hpp"

namespace lpp {

/// Monte Carlo estimate of C_p(x) by W^x_{0,n} / n over independent windows.
struct EstimateResult {
  double mean = 0.0;
  /// Sample sd / sqrt(reps); NaN when reps < 2.
  double stderr = 0.0;
  int n_window = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  WeightParam x;
  double p = 0.0;
};

/// Window-normalized one-sided slopes: mean max_red / n (right) and mean
/// min_red / n (left) over maximal 0 -> n paths. jump_stderr is the paired
/// standard error of (max_red - min_red) / n.
struct DerivativeEstimate {
  double d_plus = 0.0;
  double d_plus_stderr = 0.0;
  double d_minus = 0.0;
  double d_minus_stderr = 0.0;
  double jump = 0.0;
  double jump_stderr = 0.0;
  int n_window = 0;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  WeightParam x;
  double p = 0.0;
};

/// Replica r of a run keyed by `seed` always sees the same window, so runs
/// with equal (p, n_window, seed) are coupled across x.
///
/// Under MinusInfinity the per-window value is the positive part
/// max(W, 0) / n, so windows without a blue 0 -> n path count as 0.
/// Throws std::invalid_argument unless 0 < p < 1, n_window >= 1, reps >= 1.
EstimateResult direct_C(double p, const WeightParam& x, int n_window, std::int64_t reps,
                        std::uint64_t seed, Execution exec = Execution::Parallel);

/// Requires an exact rational x; floats and -inf throw std::invalid_argument
/// since ties must be detected exactly.
DerivativeEstimate side_derivatives(double p, const WeightParam& x, int n_window,
                                    std::int64_t reps, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

/// Compares C_p(x) with x C_q(1/x), q = 1 - p, using two independent runs
/// (the second keyed by derive_seed(seed, 1)).
struct ScalingReport {
  EstimateResult lhs;
  /// Estimate of C_q(1/x) before scaling by x.
  EstimateResult rhs_unscaled;
  double rhs = 0.0;
  double rhs_stderr = 0.0;
  double difference = 0.0;
  double combined_sigma = 0.0;

  bool within(double sigmas) const;
};

/// Requires finite x > 0.
ScalingReport scaling_check(double p, const WeightParam& x, int n_window, std::int64_t reps,
                            std::uint64_t seed, Execution exec = Execution::Parallel);

struct CurvePoint {
  EstimateResult estimate;
  /// Present for exact grid points.
  std::optional<DerivativeEstimate> derivatives;
};

/// Grid sweep on common windows. Every replica is checked for monotonicity
/// and convexity of x -> W^x_{0,n} along the grid; both hold for every
/// window, so a nonzero count signals a defect (float grids are compared with
/// a 1e-9 relative tolerance, exact grids exactly).
struct CurveResult {
  std::vector<CurvePoint> points;
  std::int64_t monotonicity_violations = 0;
  std::int64_t convexity_violations = 0;
};

/// Requires a strictly increasing grid (MinusInfinity allowed first).
CurveResult curve(double p, const std::vector<WeightParam>& grid, int n_window,
                  std::int64_t reps, std::uint64_t seed, Execution exec = Execution::Parallel);

/// Coupled midpoint-convexity check on estimates: for consecutive finite
/// triples lo < mid < hi, the interpolated value minus the estimate at mid
/// must not fall below -sigmas * (combined stderr). Returns the number of
/// failing triples.
int count_convexity_failures(const CurveResult& c, double sigmas);

}  // namespace lpp
