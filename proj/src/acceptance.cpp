#include "lpp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lpp/criticality.hpp"
#include "lpp/estimator.hpp"
#include "lpp/heaviest_path.hpp"
#include "lpp/rng.hpp"
#include "lpp/skeleton.hpp"
#include "lpp/window.hpp"

namespace lpp {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "FAILED " << what << "; ";
    }
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void balanced_sequences(Outcome& o, const AcceptanceOptions&) {
  const auto v = balanced_sequence(7, 4);
  o.require(v.bits == std::vector<int>{1, 1, 0, 1, 0, 1, 0}, "balanced_sequence(7,4) = 1101010");
  int checked = 0;
  for (int N = 1; N <= 12; ++N) {
    for (int n = 1; n <= N; ++n) {
      const auto expected = balanced_sequence(N, n).bits;
      int found = 0;
      bool matches = false;
      std::vector<int> bits(static_cast<std::size_t>(N));
      for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
        for (int k = 0; k < N; ++k) bits[static_cast<std::size_t>(k)] = (mask >> k) & 1u;
        if (satisfies_balance_conditions(N, n, bits)) {
          ++found;
          matches = bits == expected;
        }
      }
      o.require(found == 1 && matches,
                "unique balanced sequence for (" + std::to_string(N) + "," + std::to_string(n) +
                    "), found " + std::to_string(found));
      ++checked;
    }
  }
  o.detail << "(7,4) -> 1101010; unique for all " << checked << " pairs N <= 12";
}

void sturm_golden(Outcome& o, const AcceptanceOptions&) {
  const Rational x(-11, 7);
  const auto w = sturm_graph(x);
  const auto& sp = w.params;
  const auto& c = w.certificate;
  o.require(sp.ell == 2 && sp.s == 3 && sp.t == 7, "(ell,s,t) = (2,3,7)");
  o.require(sp.m == 31 && sp.n == 93 && c.graph.n() == 93, "m = 31, n = 93");
  std::vector<int> gaps;
  for (std::size_t j = 1; j < sp.pivots.size(); ++j) gaps.push_back(sp.pivots[j] - sp.pivots[j - 1]);
  o.require(gaps == std::vector<int>{4, 5, 4, 5, 4, 5, 4}, "pivot gaps 4545454");
  o.require(c.max_weight == Rational(69), "W = 69");
  o.require(std::min(c.red_a, c.red_b) == 0 && std::max(c.red_a, c.red_b) == 7, "red counts {0,7}");
  o.require(c.dp_min_red == 0 && c.dp_max_red == 7, "DP red range [0,7]");
  o.require(c.is_h && is_h(c.graph).is_h, "graph in the class");
  const auto sub = path_weight(c.graph, x, Path({35, 37, 38, 39, 41, 42, 43, 44}));
  const auto sub2 = path_weight(c.graph, x, Path({35, 37, 38, 39, 41, 44}));
  o.require(sub.weight == ExtendedReal(Rational(-5, 7)), "sub-path weight -5/7");
  o.require(sub2.weight == ExtendedReal(Rational(-1, 7)), "sub-path weight -1/7");
  o.detail << "ell=2 s=3 t=7 m=31 n=93 gaps=4545454 W=" << to_string(c.max_weight)
           << " reds={" << c.red_a << "," << c.red_b << "} sub-paths " << to_string(sub.weight)
           << ", " << to_string(sub2.weight);
}

void check_certificate(Outcome& o, const Certificate& c, const std::string& label) {
  const auto r = certify(c.graph, c.x);
  o.require(r.critical_witness, label + " certifies");
  o.require(r.is_h, label + " in class");
  o.require(r.profile.weight == ExtendedReal(c.max_weight), label + " W matches");
}

void witness_battery(Outcome& o, const AcceptanceOptions&) {
  int count = 0;
  const auto z = witness_zero();
  check_certificate(o, z, "zero");
  o.require(z.max_weight == Rational(2) && std::min(z.red_a, z.red_b) == 0 && std::max(z.red_a, z.red_b) == 1,
            "zero: W = 2, reds {0,1}");
  ++count;
  for (int ell = 1; ell <= 6; ++ell) {
    const auto c = witness_negative_integer(ell);
    check_certificate(o, c, "-" + std::to_string(ell));
    o.require(c.max_weight == Rational(ell + 2), "negative integer " + std::to_string(ell) + ": W = ell + 2");
    ++count;
  }
  for (int k = 2; k <= 6; ++k) {
    const auto c = witness_reciprocal(k);
    check_certificate(o, c, "1/" + std::to_string(k));
    o.require(c.max_weight == Rational(3), "reciprocal " + std::to_string(k) + ": W = 3");
    ++count;
  }
  for (int k = 2; k <= 6; ++k) {
    check_certificate(o, witness_integer(k), std::to_string(k));
    ++count;
  }
  for (int a = 1; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const Rational x(-a, b);
      if (is_integer(x) || x.denominator() != b) continue;
      const auto w = sturm_graph(x);
      check_certificate(o, w.certificate, to_string(x));
      ++count;
    }
  }
  o.detail << count << " certificates re-certified";
}

void oracle_equivalence(Outcome& o, const AcceptanceOptions& opt) {
  const std::vector<WeightParam> xs{Rational(-5, 2), Rational(-1), Rational(0),    Rational(1, 3),
                                    Rational(1, 2),  Rational(1),  Rational(3, 2), Rational(7, 5),
                                    MinusInfinity{}};
  const double ps[] = {0.2, 0.5, 0.8};
  constexpr int kCases = 10'000;
  const std::uint64_t seed = derive_seed(opt.seed, 4);
  int mismatches = 0;
  for (int c = 0; c < kCases; ++c) {
    ReplicaStream pick(seed, static_cast<std::uint64_t>(c));
    const int n = 1 + static_cast<int>(pick() % 12);
    const double p = ps[pick() % 3];
    const auto& x = xs[pick() % xs.size()];
    const auto g = sample_window(p, n, derive_seed(seed, 1), static_cast<std::uint64_t>(c));
    const auto dp = heaviest(g, x);
    const auto bf = brute_force_profile(g, x, 0, n);
    bool same = dp.weight == bf.weight && dp.extremes.has_value() == bf.extremes.has_value();
    if (same && dp.extremes) {
      same = dp.extremes->min_red == bf.extremes->min_red &&
             dp.extremes->max_red == bf.extremes->max_red;
    }
    if (!same) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " DP/brute-force mismatches");
  o.detail << kCases << " random (G, x), n <= 12, mismatches=" << mismatches;
}

// Every short blue edge lies on the path and every long edge of the path is blue.
bool respects_edge_properties(const ColoredWindow& g, const Path& path) {
  const auto& v = path.vertices();
  std::vector<char> on_path_short(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] - v[k - 1] == 1) {
      on_path_short[static_cast<std::size_t>(v[k - 1])] = 1;
    } else if (!g.is_blue(v[k - 1], v[k])) {
      return false;
    }
  }
  for (int i = 0; i < g.n(); ++i) {
    if (g.is_blue(i, i + 1) && !on_path_short[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

void edge_properties(Outcome& o, const AcceptanceOptions& opt) {
  const double ps[] = {0.2, 0.5, 0.8};
  const Rational xs[] = {Rational(1, 3), Rational(1, 2), Rational(3, 2)};
  constexpr int kWindows = 1000;
  constexpr int kWindowSize = 60;
  int violations = 0;
  int paths = 0;
  for (std::size_t pi = 0; pi < 3; ++pi) {
    const std::uint64_t seed = derive_seed(opt.seed, 50 + pi);
    for (int r = 0; r < kWindows; ++r) {
      const auto g = sample_window(ps[pi], kWindowSize, seed, static_cast<std::uint64_t>(r));
      for (const auto& x : xs) {
        const auto prof = heaviest(g, x);
        for (const Path* path : {&prof.extremes->witness_min, &prof.extremes->witness_max}) {
          ++paths;
          if (!respects_edge_properties(g, *path)) ++violations;
        }
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail << paths << " maximal paths on " << 3 * kWindows << " windows (n=" << kWindowSize
           << "), violations=" << violations;
}

void small_window_expectation(Outcome& o, const AcceptanceOptions& opt) {
  const auto e = direct_C(0.5, Rational(0), 2, 1'000'000, derive_seed(opt.seed, 6), opt.exec);
  const double z = (e.mean - 0.5625) / e.stderr;
  o.require(std::abs(z) <= 4.0, "|z| <= 4");
  o.detail << "mean=" << fmt(e.mean) << " stderr=" << fmt(e.stderr, 3) << " z=" << fmt(z, 3);
}

void identity_checks(Outcome& o, const AcceptanceOptions& opt) {
  constexpr int kN = 200;
  constexpr std::int64_t kReps = 10'000;
  const std::uint64_t seed = derive_seed(opt.seed, 7);

  const auto one = direct_C(0.5, Rational(1), kN, kReps, seed, opt.exec);
  o.require(one.mean == 1.0 && one.stderr == 0.0, "x=1 gives exactly 1 with stderr 0");
  o.detail << "x=1: " << fmt(one.mean, 17) << " +- " << fmt(one.stderr) << "; ";

  const std::pair<double, Rational> scaling[] = {{0.3, Rational(5, 2)}, {0.6, Rational(4)}};
  for (const auto& [p, x] : scaling) {
    const auto s = scaling_check(p, x, kN, kReps, seed, opt.exec);
    const double z = s.difference / s.combined_sigma;
    o.require(s.within(3.0), "scaling at p=" + fmt(p) + " x=" + to_string(x));
    o.detail << "scaling(" << fmt(p) << "," << to_string(x) << ") z=" << fmt(z, 3) << "; ";
  }

  std::vector<WeightParam> grid;
  for (const char* s : {"-3", "-2", "-1", "0", "1/2", "1", "3/2"}) grid.push_back(parse_weight(s));
  const auto c = curve(0.5, grid, kN, kReps, seed, opt.exec);
  const int failures = count_convexity_failures(c, 3.0);
  o.require(c.convexity_violations == 0, "zero pathwise convexity violations");
  o.require(c.monotonicity_violations == 0, "zero pathwise monotonicity violations");
  o.require(failures == 0, "estimate-level convexity within 3 sigma");
  o.detail << "convexity violations=" << c.convexity_violations << "; ";

  const auto direct = direct_C(0.5, Rational(0), kN, kReps, seed, opt.exec);
  const auto renewal = renewal_C(0.5, Rational(0), kN, kReps, derive_seed(seed, 2), opt.exec);
  const double sigma = std::hypot(direct.stderr, renewal.stderr);
  const double z = (renewal.mean - direct.mean) / sigma;
  o.require(std::abs(z) <= 3.0, "renewal vs direct within 3 sigma");
  o.detail << "direct=" << fmt(direct.mean) << " renewal=" << fmt(renewal.mean) << " z=" << fmt(z, 3);
}

void renewal_structure(Outcome& o, const AcceptanceOptions& opt) {
  constexpr double p = 0.7;
  const auto pmf = delta_pmf_mc(p, 60, 100'000, derive_seed(opt.seed, 8), opt.exec);
  const double z1 = (pmf.phat[1] - p) / pmf.stderr[1];
  o.require(std::abs(z1) <= 3.0, "n=1 frequency matches P((0,1) blue) = p");
  o.require(pmf.phat[2] == 0.0, "n=2 frequency exactly 0");
  o.require(pmf.total_mass >= 0.999, "total mass >= 0.999");
  const double target = 1.0 / gamma_exact(p, 1e-12).value;
  const double z = (pmf.mean - target) / pmf.mean_stderr;
  o.require(std::abs(z) <= 3.0, "mean within 3 sigma of 1/gamma");
  o.detail << "phat1=" << fmt(pmf.phat[1]) << " phat2=" << fmt(pmf.phat[2])
           << " mass=" << fmt(pmf.total_mass) << " mean=" << fmt(pmf.mean)
           << " 1/gamma=" << fmt(target) << " z=" << fmt(z, 3);
}

void jump_detection(Outcome& o, const AcceptanceOptions& opt) {
  const std::uint64_t seed = derive_seed(opt.seed, 9);
  auto run = [&](const Rational& x) {
    return side_derivatives(0.5, x, 40, 10'000, seed, opt.exec);
  };
  for (const Rational& x : {Rational(0), Rational(-1), Rational(1, 2), Rational(2)}) {
    const auto d = run(x);
    o.require(d.jump > 5.0 * d.jump_stderr, "jump above 5 sigma at x=" + to_string(x));
    o.detail << to_string(x) << ": " << fmt(d.jump, 4) << "/" << fmt(d.jump_stderr, 3) << "; ";
  }
  for (const Rational& x : {Rational(3, 7), Rational(5, 3)}) {
    const auto d = run(x);
    o.require(d.jump <= 3.0 * d.jump_stderr, "jump within 3 sigma at x=" + to_string(x));
    o.detail << to_string(x) << ": " << fmt(d.jump, 4) << "/" << fmt(d.jump_stderr, 3) << "; ";
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  void (*run)(Outcome&, const AcceptanceOptions&);
};

constexpr Criterion kCriteria[] = {
    {1, "balanced sequence (7,4) and uniqueness for N <= 12", 10.0, balanced_sequences},
    {2, "Sturm witness at x = -11/7", 0.0, sturm_golden},
    {3, "witness battery re-certified", 30.0, witness_battery},
    {4, "heaviest path DP vs brute force", 120.0, oracle_equivalence},
    {5, "short and long edge properties of maximal paths", 0.0, edge_properties},
    {6, "exact n=2 expectation at p=1/2, x=0", 60.0, small_window_expectation},
    {7, "identity checks at n=200", 600.0, identity_checks},
    {8, "skeleton gap distribution at p=0.7", 0.0, renewal_structure},
    {9, "derivative jumps at p=1/2, n=40", 0.0, jump_detection},
};

}  // namespace

int acceptance_criterion_count() { return static_cast<int>(std::size(kCriteria)); }

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& c : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit_seconds;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o, options);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail.str();
    if (r.limit_seconds > 0.0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; over the " + fmt(r.limit_seconds) + " s budget";
    }
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s  %d  %-52s (%.2f s)  ", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace lpp
