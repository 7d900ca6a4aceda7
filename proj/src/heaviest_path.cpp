#include "lpp/heaviest_path.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lpp {

namespace {

// A path with b blue and r red edges scores value(b, r); scores order paths
// exactly as their weights do.

// Weight scaled by the denominator of x = num/den: b*den + r*num.
struct ExactScorer {
  using value_type = std::int64_t;
  static constexpr bool kBlueOnly = false;
  std::int64_t den;
  std::int64_t num;
  value_type value(int b, int r) const { return b * den + r * num; }
  ExtendedReal to_weight(value_type s) const { return ExtendedReal(Rational(s, den)); }
};

struct FloatScorer {
  using value_type = double;
  static constexpr bool kBlueOnly = false;
  double x;
  value_type value(int b, int r) const { return b + x * r; }
  ExtendedReal to_weight(value_type s) const { return ExtendedReal(s); }
};

// x = -inf: red edges are never taken.
struct BlueScorer {
  using value_type = std::int64_t;
  static constexpr bool kBlueOnly = true;
  value_type value(int b, int) const { return b; }
  ExtendedReal to_weight(value_type s) const { return ExtendedReal(Rational(s)); }
};

template <class F>
decltype(auto) with_scorer(const WeightParam& x, int span, F&& f) {
  if (x.is_minus_infinity()) return f(BlueScorer{});
  if (x.is_exact()) {
    const Rational& r = x.exact();
    const std::int64_t bound = std::max<std::int64_t>(r.denominator(), std::abs(r.numerator()));
    if (bound > (std::int64_t{1} << 40) || static_cast<std::int64_t>(span) * bound >
                                                   (std::int64_t{1} << 62)) {
      throw std::overflow_error("scaled path weights would overflow for x = " + to_string(r));
    }
    return f(ExactScorer{r.denominator(), r.numerator()});
  }
  return f(FloatScorer{x.to_double()});
}

template <class Scorer>
struct ForwardTable {
  std::vector<char> reached;
  std::vector<int> blue;
  std::vector<int> red;
  std::vector<typename Scorer::value_type> score;
  std::vector<int> min_red;
  std::vector<int> max_red;
  std::vector<int> pred_min;
  std::vector<int> pred_max;
};

// Relaxes every pair (u, v), s <= u < v <= t, in increasing u. When u is
// processed all of its predecessors have been, so its entry is final.
template <bool kTrack, class Scorer>
ForwardTable<Scorer> run_forward(const ColoredWindow& g, int s, int t, const Scorer& sc) {
  const auto len = static_cast<std::size_t>(t - s) + 1;
  ForwardTable<Scorer> f;
  f.reached.assign(len, 0);
  f.blue.assign(len, 0);
  f.red.assign(len, 0);
  f.score.assign(len, typename Scorer::value_type{});
  if constexpr (kTrack) {
    f.min_red.assign(len, 0);
    f.max_red.assign(len, 0);
    f.pred_min.assign(len, -1);
    f.pred_max.assign(len, -1);
  }
  f.reached[0] = 1;
  const auto words = g.words();
  for (int u = s; u < t; ++u) {
    const int iu = u - s;
    if (!f.reached[iu]) continue;
    const std::size_t base = ColoredWindow::pair_index(g.n(), u, u + 1);
    for (int v = u + 1; v <= t; ++v) {
      const std::size_t k = base + static_cast<std::size_t>(v - u - 1);
      const bool blue = (words[k >> 6] >> (k & 63)) & 1u;
      if constexpr (Scorer::kBlueOnly) {
        if (!blue) continue;
      }
      const int iv = v - s;
      const int step_red = blue ? 0 : 1;
      const int cb = f.blue[iu] + (blue ? 1 : 0);
      const int cr = f.red[iu] + step_red;
      const auto cs = sc.value(cb, cr);
      if (!f.reached[iv] || cs > f.score[iv]) {
        f.reached[iv] = 1;
        f.blue[iv] = cb;
        f.red[iv] = cr;
        f.score[iv] = cs;
        if constexpr (kTrack) {
          f.min_red[iv] = f.min_red[iu] + step_red;
          f.max_red[iv] = f.max_red[iu] + step_red;
          f.pred_min[iv] = u;
          f.pred_max[iv] = u;
        }
      } else if constexpr (kTrack) {
        if (cs == f.score[iv]) {
          if (f.min_red[iu] + step_red < f.min_red[iv]) {
            f.min_red[iv] = f.min_red[iu] + step_red;
            f.pred_min[iv] = u;
          }
          if (f.max_red[iu] + step_red > f.max_red[iv]) {
            f.max_red[iv] = f.max_red[iu] + step_red;
            f.pred_max[iv] = u;
          }
        }
      }
    }
  }
  return f;
}

Path backtrack(const std::vector<int>& pred, int s, int t) {
  std::vector<int> rev{t};
  for (int v = t; v != s;) {
    v = pred[static_cast<std::size_t>(v - s)];
    rev.push_back(v);
  }
  std::reverse(rev.begin(), rev.end());
  return Path(std::move(rev));
}

void check_endpoints(const ColoredWindow& g, int i, int j) {
  if (i < 0 || j > g.n() || i >= j) {
    throw std::invalid_argument("need 0 <= i < j <= n, got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j));
  }
}

}  // namespace

MaximalProfile heaviest(const ColoredWindow& g, const WeightParam& x, int i, int j) {
  check_endpoints(g, i, j);
  return with_scorer(x, j - i, [&](const auto& sc) {
    const auto f = run_forward<true>(g, i, j, sc);
    const auto t = static_cast<std::size_t>(j - i);
    MaximalProfile profile;
    if (!f.reached[t]) {
      profile.weight = ExtendedReal(MinusInfinity{});
      return profile;
    }
    profile.weight = sc.to_weight(f.score[t]);
    profile.extremes = RedExtremes{f.min_red[t], f.max_red[t], backtrack(f.pred_min, i, j),
                                   backtrack(f.pred_max, i, j)};
    return profile;
  });
}

std::optional<int> heaviest_blue(const ColoredWindow& g, int i, int j) {
  check_endpoints(g, i, j);
  const auto f = run_forward<false>(g, i, j, BlueScorer{});
  const auto t = static_cast<std::size_t>(j - i);
  if (!f.reached[t]) return std::nullopt;
  return static_cast<int>(f.score[t]);
}

MaximalProfile brute_force_profile(const ColoredWindow& g, const WeightParam& x, int i, int j) {
  check_endpoints(g, i, j);
  const int inner = j - i - 1;
  if (j - i > kBruteForceMaxSpan) {
    throw std::invalid_argument("brute force limited to spans of " +
                                std::to_string(kBruteForceMaxSpan));
  }
  return with_scorer(x, j - i, [&](const auto& sc) {
    using Value = typename std::decay_t<decltype(sc)>::value_type;
    constexpr bool kBlueOnly = std::decay_t<decltype(sc)>::kBlueOnly;
    bool found = false;
    Value best{};
    int min_red = 0, max_red = 0;
    std::uint32_t min_mask = 0, max_mask = 0;
    const std::uint32_t total = std::uint32_t{1} << inner;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      int b = 0, r = 0, prev = i;
      auto step = [&](int v) {
        if (g.is_blue(prev, v)) {
          ++b;
        } else {
          ++r;
        }
        prev = v;
      };
      for (int bit = 0; bit < inner; ++bit) {
        if (mask & (std::uint32_t{1} << bit)) step(i + 1 + bit);
      }
      step(j);
      if (kBlueOnly && r > 0) continue;
      const Value s = sc.value(b, r);
      if (!found || s > best) {
        found = true;
        best = s;
        min_red = max_red = r;
        min_mask = max_mask = mask;
      } else if (s == best) {
        if (r < min_red) {
          min_red = r;
          min_mask = mask;
        }
        if (r > max_red) {
          max_red = r;
          max_mask = mask;
        }
      }
    }
    MaximalProfile profile;
    if (!found) {
      profile.weight = ExtendedReal(MinusInfinity{});
      return profile;
    }
    auto to_path = [&](std::uint32_t mask) {
      std::vector<int> v{i};
      for (int bit = 0; bit < inner; ++bit) {
        if (mask & (std::uint32_t{1} << bit)) v.push_back(i + 1 + bit);
      }
      v.push_back(j);
      return Path(std::move(v));
    };
    profile.weight = sc.to_weight(best);
    profile.extremes = RedExtremes{min_red, max_red, to_path(min_mask), to_path(max_mask)};
    return profile;
  });
}

WindowSummary summarize_window(const ColoredWindow& g, const WeightParam& x) {
  return with_scorer(x, g.n(), [&](const auto& sc) {
    const auto f = run_forward<true>(g, 0, g.n(), sc);
    const auto t = static_cast<std::size_t>(g.n());
    WindowSummary out;
    if (!f.reached[t]) {
      out.weight = ExtendedReal(MinusInfinity{});
      return out;
    }
    out.weight = sc.to_weight(f.score[t]);
    out.min_red = f.min_red[t];
    out.max_red = f.max_red[t];
    return out;
  });
}

std::vector<ExtendedReal> prefix_heaviest(const ColoredWindow& g, const WeightParam& x) {
  return with_scorer(x, g.n(), [&](const auto& sc) {
    const auto f = run_forward<false>(g, 0, g.n(), sc);
    std::vector<ExtendedReal> out(f.score.size());
    for (std::size_t v = 0; v < out.size(); ++v) {
      out[v] = f.reached[v] ? sc.to_weight(f.score[v]) : ExtendedReal(MinusInfinity{});
    }
    return out;
  });
}

}  // namespace lpp
