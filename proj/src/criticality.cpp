#include "lpp/criticality.hpp"

#include <numeric>
#include <set>
#include <utility>

#include "lpp/skeleton.hpp"

namespace lpp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

Certificate finalize(std::string construction, ColoredWindow graph, const Rational& x,
                     Path path_a, Path path_b) {
  const auto profile = heaviest(graph, x);
  const auto sa = path_weight(graph, x, path_a);
  const auto sb = path_weight(graph, x, path_b);
  const bool member = is_h(graph).is_h;
  auto fail = [&](const std::string& what) {
    throw CertificationError(construction + " witness at x = " + to_string(x) + ": " + what);
  };
  if (!profile.extremes) fail("no maximal path");
  if (!(sa.weight == profile.weight)) fail("path_a weight " + to_string(sa.weight) + " != W " + to_string(profile.weight));
  if (!(sb.weight == profile.weight)) fail("path_b weight " + to_string(sb.weight) + " != W " + to_string(profile.weight));
  if (sa.red_count == sb.red_count) fail("paths share a red count");
  if (!member) fail("graph not in the inter-skeleton class");
  Certificate c{std::move(construction),
                std::move(graph),
                x,
                profile.weight.exact(),
                std::move(path_a),
                std::move(path_b),
                sa.red_count,
                sb.red_count,
                profile.extremes->min_red,
                profile.extremes->max_red,
                member};
  return c;
}

}  // namespace

bool satisfies_balance_conditions(int N, int n, std::span<const int> bits) {
  if (N < 1 || n < 1 || n > N || static_cast<int>(bits.size()) != N) return false;
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(N) + 1, 0);
  for (int k = 1; k <= N; ++k) {
    const int b = bits[static_cast<std::size_t>(k - 1)];
    if (b != 0 && b != 1) return false;
    prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k - 1)] + b;
  }
  if (bits[0] != 1) return false;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      const std::int64_t sum = prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i)];
      const std::int64_t scaled = static_cast<std::int64_t>(j - i) * n;
      const std::int64_t lo = floor_div(scaled, N);
      const std::int64_t hi = ceil_div(scaled, N);
      if (sum != lo && sum != hi) return false;
      if (j == N && sum != lo) return false;
    }
  }
  return true;
}

BalancedSequence balanced_sequence(int N, int n) {
  if (n < 1 || n > N) throw std::invalid_argument("balanced sequence needs 1 <= n <= N");
  BalancedSequence v{N, n, {}};
  v.bits.reserve(static_cast<std::size_t>(N));
  for (std::int64_t k = 1; k <= N; ++k) {
    v.bits.push_back(static_cast<int>(ceil_div(k * n, N) - ceil_div((k - 1) * n, N)));
  }
  if (!satisfies_balance_conditions(N, n, v.bits)) {
    throw CertificationError("mechanical word fails the balance conditions for (" +
                             std::to_string(N) + "," + std::to_string(n) + ")");
  }
  return v;
}

NegativeRationalParts decompose_negative(const Rational& x) {
  if (x >= 0 || is_integer(x)) {
    throw std::invalid_argument("need a negative non-integer rational, got " + to_string(x));
  }
  NegativeRationalParts parts;
  parts.ell = -lpp::floor(x);
  const Rational frac = x + parts.ell;
  parts.s = frac.numerator();
  parts.t = frac.denominator();
  return parts;
}

SturmWitness sturm_graph(const Rational& x) {
  const auto parts = decompose_negative(x);
  SturmParameters sp;
  sp.ell = parts.ell;
  sp.s = parts.s;
  sp.t = parts.t;
  sp.m = sp.t * (sp.ell + 3) - (sp.s + 1);
  sp.n = 3 * sp.m;
  if (sp.n > 200'000) throw std::invalid_argument("Sturm graph too large for x = " + to_string(x));
  sp.sequence = balanced_sequence(static_cast<int>(sp.t), static_cast<int>(sp.t - sp.s));

  const int ell = static_cast<int>(sp.ell);
  const int t = static_cast<int>(sp.t);
  const int m = static_cast<int>(sp.m);
  const int n = static_cast<int>(sp.n);
  const auto& v = sp.sequence.bits;
  sp.pivots.push_back(m);
  sp.pivots.push_back(m + ell + 1 + v[0]);
  for (int j = 2; j <= t; ++j) sp.pivots.push_back(sp.pivots.back() + ell + 2 + v[static_cast<std::size_t>(j - 1)]);
  const auto& a = sp.pivots;
  if (a[static_cast<std::size_t>(t)] != 2 * m) {
    throw CertificationError("pivots do not end at 2m for x = " + to_string(x));
  }

  std::set<int> no_short{a[0], a[static_cast<std::size_t>(t)] - 1};
  for (int j = 1; j < t; ++j) {
    const int aj = a[static_cast<std::size_t>(j)];
    no_short.insert({aj - 1, aj, aj + 1});
  }
  WindowBuilder b(n);
  for (int i = 0; i < n; ++i) {
    if (!no_short.contains(i)) b.blue(i, i + 1);
  }
  for (int j = 1; j <= t; ++j) b.blue(a[static_cast<std::size_t>(j - 1)], a[static_cast<std::size_t>(j)]);
  for (int j = 1; j < t; ++j) b.blue(a[static_cast<std::size_t>(j)] - 1, a[static_cast<std::size_t>(j)] + 1);
  b.blue(a[static_cast<std::size_t>(t)] - 1, a[static_cast<std::size_t>(t)]);
  b.blue(0, a[0] + 1);
  for (int j = 1; j < t; ++j) {
    b.blue(0, a[static_cast<std::size_t>(j)] + 2);
    b.blue(a[static_cast<std::size_t>(j)] + 1, n);
  }

  std::vector<int> pa;
  for (int i = 0; i <= m; ++i) pa.push_back(i);
  for (int j = 1; j <= t; ++j) pa.push_back(a[static_cast<std::size_t>(j)]);
  for (int i = 2 * m + 1; i <= n; ++i) pa.push_back(i);

  const std::set<int> skipped(a.begin() + 1, a.begin() + t);
  std::vector<int> pb;
  for (int i = 0; i <= n; ++i) {
    if (!skipped.contains(i)) pb.push_back(i);
  }

  SturmWitness w{finalize("sturm", std::move(b).build(), x, Path(std::move(pa)), Path(std::move(pb))),
                 std::move(sp)};
  const Rational expected(2 * w.params.m + w.params.t);
  if (w.certificate.max_weight != expected || w.certificate.red_a != 0 ||
      w.certificate.red_b != t) {
    throw CertificationError("Sturm witness weights differ from 2m + t for x = " + to_string(x));
  }
  return w;
}

Certificate witness_zero() {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  return finalize("zero", from_edge_list(3, edges), Rational(0), Path({0, 1, 3}),
                  Path({0, 1, 2, 3}));
}

Certificate witness_negative_integer(int ell) {
  if (ell < 1) throw std::invalid_argument("negative-integer witness needs ell >= 1");
  const int n = 2 * ell + 3;
  WindowBuilder b(n);
  for (int i = 0; i <= ell; ++i) b.blue(i, i + 1);
  for (int i = ell + 2; i <= 2 * ell + 2; ++i) b.blue(i, i + 1);
  b.blue(0, ell + 2);
  b.blue(ell + 1, n);
  std::vector<int> pa;
  for (int i = 0; i <= ell + 1; ++i) pa.push_back(i);
  pa.push_back(n);
  return finalize("negative-integer", std::move(b).build(), Rational(-ell), Path(std::move(pa)),
                  full_path(0, n));
}

namespace {

ColoredWindow reciprocal_graph(int k) {
  const int n = k + 2;
  WindowBuilder b(n);
  for (int i = 1; i < n; ++i) {
    b.blue(0, i);
    b.blue(i, n);
  }
  b.blue(1, n - 1);
  return std::move(b).build();
}

Certificate from_dp_witnesses(std::string construction, ColoredWindow g, const Rational& x) {
  const auto profile = heaviest(g, x);
  if (!profile.extremes) throw CertificationError(construction + ": no maximal path");
  return finalize(std::move(construction), std::move(g), x, profile.extremes->witness_min,
                  profile.extremes->witness_max);
}

}  // namespace

Certificate witness_reciprocal(int k) {
  if (k < 2) throw std::invalid_argument("reciprocal witness needs k >= 2");
  return from_dp_witnesses("reciprocal", reciprocal_graph(k), Rational(1, k));
}

Certificate witness_integer(int k) {
  if (k < 2) throw std::invalid_argument("integer witness needs k >= 2");
  const ColoredWindow inner = complement(reciprocal_graph(k));
  const int n = inner.n() + 2;
  WindowBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (i == 0 || j == n || inner.is_blue(i - 1, j - 1)) b.blue(i, j);
    }
  }
  return from_dp_witnesses("integer", std::move(b).build(), Rational(k));
}

bool is_critical_value(const Rational& x) {
  if (x <= 0) return true;
  if (is_integer(x)) return x.numerator() >= 2;
  return x.numerator() == 1 && x.denominator() >= 2;
}

std::optional<Certificate> witness_for(const Rational& x) {
  if (x == Rational(0)) return witness_zero();
  if (x < 0) {
    if (is_integer(x)) return witness_negative_integer(static_cast<int>(-x.numerator()));
    return sturm_graph(x).certificate;
  }
  if (is_integer(x) && x.numerator() >= 2) return witness_integer(static_cast<int>(x.numerator()));
  if (x.numerator() == 1 && x.denominator() >= 2) {
    return witness_reciprocal(static_cast<int>(x.denominator()));
  }
  return std::nullopt;
}

CertifyResult certify(const ColoredWindow& g, const Rational& x) {
  CertifyResult r;
  r.is_h = is_h(g).is_h;
  r.profile = heaviest(g, x);
  r.critical_witness = r.is_h && r.profile.extremes &&
                       r.profile.extremes->min_red != r.profile.extremes->max_red;
  return r;
}

std::optional<Certificate> search_small_witness(const Rational& x, int max_n) {
  if (max_n > 6) throw std::invalid_argument("exhaustive witness search limited to n <= 6");
  for (int n = 1; n <= max_n; ++n) {
    const auto pairs = ColoredWindow::pair_count(n);
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      auto g = ColoredWindow::from_words(n, {mask});
      if (!is_h(g).is_h) continue;
      const auto profile = heaviest(g, x);
      if (!profile.extremes || profile.extremes->min_red == profile.extremes->max_red) continue;
      return finalize("search", std::move(g), x, profile.extremes->witness_min,
                      profile.extremes->witness_max);
    }
  }
  return std::nullopt;
}

}  // namespace lpp
