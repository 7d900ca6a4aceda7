#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpp/heaviest_path.hpp"
#include "lpp/rational.hpp"
#include "lpp/window.hpp"

namespace lpp {

/// A constructed witness failed its own exact check. Indicates a bug, never
/// bad input.
class CertificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Binary word v_1..v_N in which every window of length d holds
/// floor(d n / N) or ceil(d n / N) ones, every suffix of length d holds
/// exactly floor(d n / N) ones, and v_1 = 1. bits[k - 1] holds v_k.
struct BalancedSequence {
  int N = 0;
  int n = 0;
  std::vector<int> bits;
};

/// Checks the three conditions above over all O(N^2) windows.
bool satisfies_balance_conditions(int N, int n, std::span<const int> bits);

/// The unique (N, n)-balanced sequence, built from the upper mechanical word
/// v_k = ceil(k n / N) - ceil((k - 1) n / N) and verified exhaustively.
/// Throws std::invalid_argument unless 1 <= n <= N.
BalancedSequence balanced_sequence(int N, int n);

/// A graph in the inter-skeleton class with two maximal 0 -> n paths whose
/// red counts differ, at the designated x. All weights are exact.
struct Certificate {
  std::string construction;
  ColoredWindow graph;
  Rational x;
  Rational max_weight;
  Path path_a;
  Path path_b;
  int red_a = 0;
  int red_b = 0;
  /// Red range over all maximal paths, from the heaviest-path DP.
  int dp_min_red = 0;
  int dp_max_red = 0;
  bool is_h = false;
};

/// x = -ell + s/t with ell >= 1, 0 < s < t, gcd(s, t) = 1.
struct NegativeRationalParts {
  std::int64_t ell = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

/// Throws std::invalid_argument unless x < 0 and x is not an integer.
NegativeRationalParts decompose_negative(const Rational& x);

struct SturmParameters {
  std::int64_t ell = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  /// a_0..a_t.
  std::vector<int> pivots;
  BalancedSequence sequence;
};

struct SturmWitness {
  Certificate certificate;
  SturmParameters params;
};

/// Sturm graph for a negative non-integer rational x.
///
/// With x = -ell + s/t, m = t(ell + 3) - (s + 1) and n = 3m, the vertex set
/// splits into [0, m], [m, 2m], [2m, 3m]. Pivots a_0 = m,
/// a_1 = a_0 + ell + 1 + v_1, a_j = a_{j-1} + ell + 2 + v_j follow the
/// (t, t - s)-balanced sequence v, so a_t = 2m. Blue edges:
///   - short edges (i, i+1) except at a_0, a_t - 1 and a_j - 1, a_j, a_j + 1
///     for 1 <= j < t;
///   - pivot edges (a_{j-1}, a_j);
///   - hops (a_j - 1, a_j + 1) for 0 < j < t, and (a_t - 1, a_t). A hop
///     over a_0 would let a path skip the red edge (a_0, a_0 + 1) and beat
///     2m + t by -x;
///   - hyper edges (0, a_0 + 1), (0, a_j + 2) and (a_j + 1, n) for 0 < j < t.
/// path_a runs 0..a_0, then pivot to pivot, then a_t..n, all blue. path_b
/// visits every vertex except a_1..a_{t-1} and uses exactly t red edges. Both
/// weigh 2m + t.
///
/// Throws std::invalid_argument for integer or nonnegative x, and
/// CertificationError if the DP does not confirm the certificate.
SturmWitness sturm_graph(const Rational& x);

/// x = 0 on n = 3 with blue edges (0,1), (1,3), (0,2), (2,3).
Certificate witness_zero();

/// x = -ell on n = 2 ell + 3: two blue runs 0..ell+1 and ell+2..n joined by
/// (0, ell+2) and (ell+1, n).
Certificate witness_negative_integer(int ell);

/// x = 1/k on n = k + 2: blue (0, i), (i, n) for 0 < i < n, plus (1, n-1).
/// Paths and red counts come from the DP witnesses.
Certificate witness_reciprocal(int k);

/// x = k. The complement of the 1/k graph has the same maximal paths (every
/// weight scales by k) but vertex 1 can only be entered from 0, so it is not
/// in the inter-skeleton class. Adding a new first and last vertex whose
/// incident edges are all blue restores membership and keeps the maximal
/// path set (extended by the two new end edges).
Certificate witness_integer(int k);

/// Dispatches to the construction for x, or nullopt when x is not critical.
std::optional<Certificate> witness_for(const Rational& x);

/// x <= 0, or x = k, or x = 1/k for an integer k >= 2.
bool is_critical_value(const Rational& x);

struct CertifyResult {
  bool critical_witness = false;
  bool is_h = false;
  MaximalProfile profile;
};

/// True iff g is in the inter-skeleton class and its maximal 0 -> n paths at
/// x do not all share one red count. Exact arithmetic throughout.
CertifyResult certify(const ColoredWindow& g, const Rational& x);

/// Exhaustive search over all colorings with n <= max_n (max_n <= 6) for a
/// certificate at x; returns the first hit in (n, packed-bits) order. Smallest
/// n found, but no other minimality claim.
std::optional<Certificate> search_small_witness(const Rational& x, int max_n);

}  // namespace lpp
