#include "lpp/skeleton.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpp/heaviest_path.hpp"
#include "lpp/stats.hpp"

namespace lpp {

ReachabilityClosure::ReachabilityClosure(const ColoredWindow& g)
    : n_(g.n()), stride_((static_cast<std::size_t>(g.n()) + 1 + 63) / 64) {
  rows_.assign(stride_ * (static_cast<std::size_t>(n_) + 1), 0);
  for (int i = n_ - 1; i >= 0; --i) {
    std::uint64_t* row = &rows_[static_cast<std::size_t>(i) * stride_];
    for (int j = i + 1; j <= n_; ++j) {
      if (!g.is_blue(i, j)) continue;
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
      const std::uint64_t* succ = &rows_[static_cast<std::size_t>(j) * stride_];
      // Row j only has bits above j.
      for (std::size_t w = static_cast<std::size_t>(j >> 6); w < stride_; ++w) row[w] |= succ[w];
    }
  }
}

SkeletonReport is_h(const ColoredWindow& g) {
  const ReachabilityClosure c(g);
  const int n = g.n();
  SkeletonReport report;
  report.is_h = c.reach(0, n);
  for (int j = 1; j < n; ++j) {
    const bool on_spanning_path = c.reach(0, j) && c.reach(j, n);
    bool has_unconnected = false;
    for (int i = 0; i <= n && !has_unconnected; ++i) {
      if (i != j && !c.connected(i, j)) has_unconnected = true;
    }
    if (!has_unconnected) report.window_skeletons.push_back(j);
    if (!on_spanning_path || !has_unconnected) report.is_h = false;
  }
  return report;
}

std::vector<bool> h_prefix_indicator(const ReachabilityClosure& c) {
  const int n = c.n();
  // reached_by_all[j]: every i < j reaches j.
  // reach_run[j]: largest r with j reaching every k in (j, r].
  std::vector<char> reached_by_all(static_cast<std::size_t>(n) + 1, 1);
  std::vector<int> reach_run(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (!c.reach(i, j)) {
        reached_by_all[j] = 0;
        break;
      }
    }
    int r = j;
    while (r < n && c.reach(j, r + 1)) ++r;
    reach_run[j] = r;
  }
  // Within 0..m, interior j fails condition (2) iff it is reached by all of
  // 0..j-1 and reaches all of j+1..m.
  std::vector<bool> out(static_cast<std::size_t>(n) + 1, false);
  for (int m = 1; m <= n; ++m) {
    bool ok = c.reach(0, m);
    for (int j = 1; j < m && ok; ++j) {
      const bool spanning = c.reach(0, j) && c.reach(j, m);
      const bool window_skeleton = reached_by_all[j] && reach_run[j] >= m;
      ok = spanning && !window_skeleton;
    }
    out[m] = ok;
  }
  return out;
}

GammaValue gamma_exact(double p, double tol) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const long double q = 1.0L - static_cast<long double>(p);
  long double log_gamma = 0.0L;
  long double qk = 1.0L;
  int k = 0;
  constexpr int kMaxTerms = 100'000'000;
  while (k < kMaxTerms) {
    ++k;
    qk *= q;
    log_gamma += 2.0L * std::log1p(-qk);
    const long double next = qk * q;
    const long double tail = 2.0L * next / ((1.0L - q) * (1.0L - next));
    if (tail < tol) break;
  }
  return GammaValue{static_cast<double>(std::exp(log_gamma)), k};
}

namespace {

void check_mc_args(double p, int n_max, std::int64_t reps) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
}

}  // namespace

DeltaPmf delta_pmf_mc(double p, int n_max, std::int64_t reps, std::uint64_t seed,
                      Execution exec) {
  check_mc_args(p, n_max, reps);
  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::vector<bool>> hits(static_cast<std::size_t>(reps));
  for_each_replica(exec, reps, [&](std::int64_t r) {
    const auto g = sample_window(p, n_max, seed, static_cast<std::uint64_t>(r));
    hits[static_cast<std::size_t>(r)] = h_prefix_indicator(ReachabilityClosure(g));
  });

  DeltaPmf out;
  out.p = p;
  out.n_max = n_max;
  out.reps = reps;
  out.seed = seed;
  std::vector<std::int64_t> counts(len, 0);
  std::vector<double> gap_totals(static_cast<std::size_t>(reps), 0.0);
  for (std::size_t r = 0; r < hits.size(); ++r) {
    std::int64_t total = 0;
    for (std::size_t m = 1; m < len; ++m) {
      if (hits[r][m]) {
        ++counts[m];
        total += static_cast<std::int64_t>(m);
      }
    }
    gap_totals[r] = static_cast<double>(total);
  }
  out.phat.assign(len, 0.0);
  out.stderr.assign(len, 0.0);
  for (std::size_t m = 1; m < len; ++m) {
    const double ph = static_cast<double>(counts[m]) / static_cast<double>(reps);
    out.phat[m] = ph;
    out.stderr[m] = bernoulli_stderr(ph, reps);
    out.total_mass += ph;
  }
  const auto s = summarize_samples(gap_totals);
  out.mean = s.mean;
  out.mean_stderr = s.stderr;
  return out;
}

RenewalEstimate renewal_C(double p, const WeightParam& x, int n_max, std::int64_t reps,
                          std::uint64_t seed, Execution exec) {
  check_mc_args(p, n_max, reps);
  if (!x.is_finite() || !(x.to_double() < 2.0)) {
    throw std::invalid_argument("renewal representation needs finite x < 2, got " +
                                to_string(x));
  }
  struct Hit {
    int m;
    double weight;
  };
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(reps));
  for_each_replica(exec, reps, [&](std::int64_t r) {
    const auto g = sample_window(p, n_max, seed, static_cast<std::uint64_t>(r));
    const auto indicator = h_prefix_indicator(ReachabilityClosure(g));
    const auto w = prefix_heaviest(g, x);
    auto& mine = hits[static_cast<std::size_t>(r)];
    for (int m = 1; m <= n_max; ++m) {
      if (indicator[static_cast<std::size_t>(m)]) {
        mine.push_back(Hit{m, w[static_cast<std::size_t>(m)].to_double()});
      }
    }
  });

  RenewalEstimate out;
  out.p = p;
  out.x = x;
  out.n_max = n_max;
  out.reps = reps;
  out.seed = seed;
  out.gamma = gamma_exact(p, 1e-15).value;

  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> sum(len, 0.0), sum_sq(len, 0.0);
  std::vector<std::int64_t> count(len, 0);
  std::vector<double> totals(static_cast<std::size_t>(reps), 0.0);
  for (std::size_t r = 0; r < hits.size(); ++r) {
    double total = 0.0;
    for (const Hit& h : hits[r]) {
      const auto m = static_cast<std::size_t>(h.m);
      sum[m] += h.weight;
      sum_sq[m] += h.weight * h.weight;
      ++count[m];
      total += h.weight;
    }
    totals[r] = total;
  }
  const double nreps = static_cast<double>(reps);
  double cumulative = 0.0;
  std::int64_t captured = 0;
  for (std::size_t m = 1; m < len; ++m) {
    const double mean = sum[m] / nreps;
    double sd = std::numeric_limits<double>::quiet_NaN();
    if (reps >= 2) {
      const double var = std::max(0.0, (sum_sq[m] - nreps * mean * mean) / (nreps - 1.0));
      sd = std::sqrt(var);
    }
    RenewalTerm term;
    term.m = static_cast<int>(m);
    term.contribution = out.gamma * mean;
    term.stderr = out.gamma * sd / std::sqrt(nreps);
    cumulative += term.contribution;
    term.cumulative = cumulative;
    out.terms.push_back(term);
    captured += count[m];
  }
  const auto s = summarize_samples(totals);
  out.mean = out.gamma * s.mean;
  out.stderr = out.gamma * s.stderr;
  out.last_term = std::abs(out.terms.back().contribution);
  out.captured_mass = static_cast<double>(captured) / nreps;
  return out;
}

}  // namespace lpp
