#include "lpp/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lpp/heaviest_path.hpp"
#include "lpp/rng.hpp"
#include "lpp/stats.hpp"
#include "lpp/window.hpp"

namespace lpp {

namespace {

void check_args(double p, int n_window, std::int64_t reps) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (n_window < 1) throw std::invalid_argument("n_window must be >= 1");
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
}

// summaries[r * grid.size() + g] for replica r and grid point g.
std::vector<WindowSummary> sample_summaries(double p, const std::vector<WeightParam>& grid,
                                            int n_window, std::int64_t reps,
                                            std::uint64_t seed, Execution exec) {
  const std::size_t k = grid.size();
  std::vector<WindowSummary> out(static_cast<std::size_t>(reps) * k);
  for_each_replica(exec, reps, [&](std::int64_t r) {
    const auto g = sample_window(p, n_window, seed, static_cast<std::uint64_t>(r));
    for (std::size_t i = 0; i < k; ++i) {
      out[static_cast<std::size_t>(r) * k + i] = summarize_window(g, grid[i]);
    }
  });
  return out;
}

double normalized_value(const WindowSummary& s, int n_window) {
  if (s.weight.is_minus_infinity()) return 0.0;
  const double w = s.weight.to_double();
  return w / n_window;
}

EstimateResult reduce_estimate(const std::vector<WindowSummary>& all, std::size_t stride,
                               std::size_t index, double p, const WeightParam& x, int n_window,
                               std::int64_t reps, std::uint64_t seed) {
  std::vector<double> values(static_cast<std::size_t>(reps));
  for (std::size_t r = 0; r < values.size(); ++r) {
    double v = normalized_value(all[r * stride + index], n_window);
    if (x.is_minus_infinity()) v = std::max(v, 0.0);
    values[r] = v;
  }
  const auto s = summarize_samples(values);
  return EstimateResult{s.mean, s.stderr, n_window, reps, seed, x, p};
}

DerivativeEstimate reduce_derivatives(const std::vector<WindowSummary>& all, std::size_t stride,
                                      std::size_t index, double p, const WeightParam& x,
                                      int n_window, std::int64_t reps, std::uint64_t seed) {
  const auto len = static_cast<std::size_t>(reps);
  std::vector<double> plus(len), minus(len), jump(len);
  for (std::size_t r = 0; r < len; ++r) {
    const auto& s = all[r * stride + index];
    plus[r] = static_cast<double>(s.max_red) / n_window;
    minus[r] = static_cast<double>(s.min_red) / n_window;
    jump[r] = static_cast<double>(s.max_red - s.min_red) / n_window;
  }
  const auto sp = summarize_samples(plus);
  const auto sm = summarize_samples(minus);
  const auto sj = summarize_samples(jump);
  DerivativeEstimate d;
  d.d_plus = sp.mean;
  d.d_plus_stderr = sp.stderr;
  d.d_minus = sm.mean;
  d.d_minus_stderr = sm.stderr;
  d.jump = sj.mean;
  d.jump_stderr = sj.stderr;
  d.n_window = n_window;
  d.reps = reps;
  d.seed = seed;
  d.x = x;
  d.p = p;
  return d;
}

// a <= b for window weights, -inf lowest.
bool weight_leq(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_minus_infinity()) return true;
  if (b.is_minus_infinity()) return false;
  if (a.is_exact() && b.is_exact()) return a.exact() <= b.exact();
  const double da = a.to_double(), db = b.to_double();
  return da <= db + 1e-9 * (1.0 + std::abs(da) + std::abs(db));
}

// (x_hi - x_lo) W_mid <= (x_hi - x_mid) W_lo + (x_mid - x_lo) W_hi.
bool convex_triple(const WeightParam& xl, const WeightParam& xm, const WeightParam& xh,
                   const ExtendedReal& wl, const ExtendedReal& wm, const ExtendedReal& wh) {
  if (xl.is_exact() && xm.is_exact() && xh.is_exact() && wl.is_exact() && wm.is_exact() &&
      wh.is_exact()) {
    const Rational lhs = (xh.exact() - xl.exact()) * wm.exact();
    const Rational rhs = (xh.exact() - xm.exact()) * wl.exact() + (xm.exact() - xl.exact()) * wh.exact();
    return lhs <= rhs;
  }
  const double l = (xh.to_double() - xl.to_double()) * wm.to_double();
  const double r = (xh.to_double() - xm.to_double()) * wl.to_double() +
                   (xm.to_double() - xl.to_double()) * wh.to_double();
  return l <= r + 1e-9 * (1.0 + std::abs(l) + std::abs(r));
}

}  // namespace

EstimateResult direct_C(double p, const WeightParam& x, int n_window, std::int64_t reps,
                        std::uint64_t seed, Execution exec) {
  check_args(p, n_window, reps);
  const std::vector<WeightParam> grid{x};
  const auto all = sample_summaries(p, grid, n_window, reps, seed, exec);
  return reduce_estimate(all, 1, 0, p, x, n_window, reps, seed);
}

DerivativeEstimate side_derivatives(double p, const WeightParam& x, int n_window,
                                    std::int64_t reps, std::uint64_t seed, Execution exec) {
  check_args(p, n_window, reps);
  if (!x.is_exact()) {
    throw std::invalid_argument("side derivatives need an exact rational x, got " + to_string(x));
  }
  const std::vector<WeightParam> grid{x};
  const auto all = sample_summaries(p, grid, n_window, reps, seed, exec);
  return reduce_derivatives(all, 1, 0, p, x, n_window, reps, seed);
}

bool ScalingReport::within(double sigmas) const {
  return std::abs(difference) <= sigmas * combined_sigma;
}

ScalingReport scaling_check(double p, const WeightParam& x, int n_window, std::int64_t reps,
                            std::uint64_t seed, Execution exec) {
  check_args(p, n_window, reps);
  if (!x.is_finite() || !(x.to_double() > 0.0)) {
    throw std::invalid_argument("scaling check needs x > 0, got " + to_string(x));
  }
  const WeightParam inverse = x.is_exact() ? WeightParam(Rational(1) / x.exact())
                                           : WeightParam(1.0 / x.to_double());
  ScalingReport rep;
  rep.lhs = direct_C(p, x, n_window, reps, seed, exec);
  rep.rhs_unscaled = direct_C(1.0 - p, inverse, n_window, reps, derive_seed(seed, 1), exec);
  const double scale = x.to_double();
  rep.rhs = scale * rep.rhs_unscaled.mean;
  rep.rhs_stderr = scale * rep.rhs_unscaled.stderr;
  rep.difference = rep.lhs.mean - rep.rhs;
  rep.combined_sigma = std::hypot(rep.lhs.stderr, rep.rhs_stderr);
  return rep;
}

CurveResult curve(double p, const std::vector<WeightParam>& grid, int n_window,
                  std::int64_t reps, std::uint64_t seed, Execution exec) {
  check_args(p, n_window, reps);
  if (grid.empty()) throw std::invalid_argument("empty x grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!less(grid[i - 1], grid[i])) {
      throw std::invalid_argument("x grid must be strictly increasing");
    }
  }
  const std::size_t k = grid.size();
  const auto all = sample_summaries(p, grid, n_window, reps, seed, exec);

  CurveResult out;
  for (std::size_t i = 0; i < k; ++i) {
    CurvePoint point{reduce_estimate(all, k, i, p, grid[i], n_window, reps, seed), std::nullopt};
    if (grid[i].is_exact()) {
      point.derivatives = reduce_derivatives(all, k, i, p, grid[i], n_window, reps, seed);
    }
    out.points.push_back(std::move(point));
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(reps); ++r) {
    const WindowSummary* row = &all[r * k];
    for (std::size_t i = 1; i < k; ++i) {
      if (!weight_leq(row[i - 1].weight, row[i].weight)) ++out.monotonicity_violations;
    }
    for (std::size_t i = 2; i < k; ++i) {
      if (!grid[i - 2].is_finite()) continue;
      if (!convex_triple(grid[i - 2], grid[i - 1], grid[i], row[i - 2].weight, row[i - 1].weight,
                         row[i].weight)) {
        ++out.convexity_violations;
      }
    }
  }
  return out;
}

int count_convexity_failures(const CurveResult& c, double sigmas) {
  int failures = 0;
  for (std::size_t i = 2; i < c.points.size(); ++i) {
    const auto& lo = c.points[i - 2].estimate;
    const auto& mid = c.points[i - 1].estimate;
    const auto& hi = c.points[i].estimate;
    if (!lo.x.is_finite()) continue;
    const double xl = lo.x.to_double(), xm = mid.x.to_double(), xh = hi.x.to_double();
    const double lambda = (xh - xm) / (xh - xl);
    const double interp = lambda * lo.mean + (1.0 - lambda) * hi.mean;
    const double sigma = std::sqrt(lambda * lambda * lo.stderr * lo.stderr +
                                   (1.0 - lambda) * (1.0 - lambda) * hi.stderr * hi.stderr +
                                   mid.stderr * mid.stderr);
    if (mid.mean > interp + sigmas * sigma) ++failures;
  }
  return failures;
}

}  // namespace lpp
