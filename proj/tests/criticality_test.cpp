#include <gtest/gtest.h>

#include <numeric>

#include "lpp/criticality.hpp"
#include "lpp/skeleton.hpp"
#include "oracles.hpp"

namespace lpp {
namespace {

std::string word(const BalancedSequence& v) {
  std::string s;
  for (int b : v.bits) s += static_cast<char>('0' + b);
  return s;
}

TEST(BalancedSequence, KnownWords) {
  EXPECT_EQ(word(balanced_sequence(7, 4)), "1101010");
  EXPECT_EQ(word(balanced_sequence(5, 5)), "11111");
  EXPECT_EQ(word(balanced_sequence(4, 1)), "1000");
  EXPECT_THROW(balanced_sequence(3, 4), std::invalid_argument);
}

TEST(BalancedSequence, ConditionsRejectNearMisses) {
  const std::vector<int> ok{1, 1, 0, 1, 0, 1, 0};
  EXPECT_TRUE(satisfies_balance_conditions(7, 4, ok));
  const std::vector<int> late{1, 0, 1, 0, 1, 1, 0};
  EXPECT_FALSE(satisfies_balance_conditions(7, 4, late));
  const std::vector<int> leading_zero{0, 1, 1, 0, 1, 0, 1};
  EXPECT_FALSE(satisfies_balance_conditions(7, 4, leading_zero));
}

TEST(Decompose, SplitsIntoFloorAndFraction) {
  const auto d = decompose_negative(Rational(-11, 7));
  EXPECT_EQ(d.ell, 2);
  EXPECT_EQ(d.s, 3);
  EXPECT_EQ(d.t, 7);
  const auto e = decompose_negative(Rational(-1, 3));
  EXPECT_EQ(e.ell, 1);
  EXPECT_EQ(e.s, 2);
  EXPECT_EQ(e.t, 3);
  EXPECT_THROW(decompose_negative(Rational(-2)), std::invalid_argument);
  EXPECT_THROW(decompose_negative(Rational(1, 2)), std::invalid_argument);
}

TEST(SturmGraph, ElevenSevenths) {
  const auto w = sturm_graph(Rational(-11, 7));
  EXPECT_EQ(w.params.pivots, (std::vector<int>{31, 35, 40, 44, 49, 53, 58, 62}));
  EXPECT_EQ(word(w.params.sequence), "1101010");
  EXPECT_EQ(w.certificate.max_weight, Rational(69));
  EXPECT_EQ(w.certificate.red_a, 0);
  EXPECT_EQ(w.certificate.red_b, 7);
  const auto& g = w.certificate.graph;
  const Rational x(-11, 7);
  EXPECT_EQ(path_weight(g, x, Path({35, 37, 38, 39, 41, 42, 43, 44})).weight,
            ExtendedReal(Rational(-5, 7)));
  EXPECT_EQ(path_weight(g, x, Path({35, 37, 38, 39, 41, 44})).weight, ExtendedReal(Rational(-1, 7)));
  // Between consecutive pivots the best path weighs exactly one pivot edge.
  for (std::size_t j = 1; j < w.params.pivots.size(); ++j) {
    EXPECT_EQ(heaviest(g, x, w.params.pivots[j - 1], w.params.pivots[j]).weight, ExtendedReal(1));
  }
}

TEST(SturmGraph, EveryNegativeFractionCertifies) {
  for (int b = 2; b <= 12; ++b) {
    for (int a = 1; a <= 30; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Rational x(-a, b);
      const auto w = sturm_graph(x);
      EXPECT_EQ(w.certificate.max_weight, Rational(2 * w.params.m + w.params.t)) << to_string(x);
      EXPECT_EQ(w.params.n, 3 * w.params.m);
      EXPECT_TRUE(certify(w.certificate.graph, x).critical_witness) << to_string(x);
    }
  }
}

TEST(Witnesses, FamiliesCarryTheirKnownWeights) {
  const auto z = witness_zero();
  EXPECT_EQ(z.max_weight, Rational(2));
  for (int ell = 1; ell <= 6; ++ell) {
    const auto c = witness_negative_integer(ell);
    EXPECT_EQ(c.max_weight, Rational(ell + 2));
    // The all-short path and the jump across (ell + 1, n) are both maximal.
    const int n = c.graph.n();
    EXPECT_EQ(path_weight(c.graph, c.x, full_path(0, n)).weight, ExtendedReal(c.max_weight));
  }
  for (int k = 2; k <= 6; ++k) {
    const auto c = witness_reciprocal(k);
    const int n = c.graph.n();
    EXPECT_EQ(c.max_weight, Rational(3));
    const auto full = path_weight(c.graph, c.x, full_path(0, n));
    EXPECT_EQ(full.weight, ExtendedReal(Rational(3)));
    EXPECT_EQ(full.red_count, k);
    EXPECT_EQ(path_weight(c.graph, c.x, Path({0, 1, n - 1, n})).weight, ExtendedReal(Rational(3)));
    EXPECT_EQ(c.dp_min_red, 0);
    EXPECT_EQ(c.dp_max_red, k);
  }
  for (int k = 2; k <= 6; ++k) {
    const auto c = witness_integer(k);
    EXPECT_TRUE(c.is_h);
    EXPECT_NE(c.red_a, c.red_b);
    // The plain complement has the same maximal paths but is outside the class.
    EXPECT_FALSE(is_h(complement(witness_reciprocal(k).graph)).is_h);
  }
}

TEST(Witnesses, CertificatesAgreeWithEnumeration) {
  std::vector<Certificate> certs{witness_zero(), witness_negative_integer(1), witness_negative_integer(2),
                                 witness_reciprocal(2), witness_reciprocal(3), witness_integer(2),
                                 witness_integer(3)};
  for (const auto& c : certs) {
    ASSERT_LE(c.graph.n(), 16);
    const auto ref = oracle::max_over_paths(c.graph, c.x);
    EXPECT_EQ(ref.weight, c.max_weight) << c.construction;
    EXPECT_EQ(ref.min_red, c.dp_min_red);
    EXPECT_EQ(ref.max_red, c.dp_max_red);
    EXPECT_TRUE(oracle::in_class(c.graph));
  }
}

// Rationals a/b, |a|, b <= 6: a witness exists exactly for x <= 0, x = k, x = 1/k.
TEST(Criticality, SmallRationalSweep) {
  for (int b = 1; b <= 6; ++b) {
    for (int a = -6; a <= 6; ++a) {
      const Rational x(a, b);
      const bool expected_critical =
          x <= Rational(0) || (x.denominator() == 1 && x.numerator() >= 2) ||
          (x.numerator() == 1 && x.denominator() >= 2);
      EXPECT_EQ(is_critical_value(x), expected_critical) << to_string(x);
      const auto w = witness_for(x);
      EXPECT_EQ(w.has_value(), expected_critical) << to_string(x);
      if (w) {
        EXPECT_EQ(w->x, x);
        EXPECT_TRUE(certify(w->graph, x).critical_witness) << to_string(x);
      }
    }
  }
}

TEST(Criticality, IrrationalApproximantIsNotCritical) {
  // A continued-fraction convergent of sqrt(2)/2.
  const Rational x(470832, 665857);
  EXPECT_FALSE(is_critical_value(x));
  EXPECT_FALSE(witness_for(x).has_value());
}

TEST(Criticality, UnitRedWeightNeverCertifies) {
  for (std::uint64_t r = 0; r < 200; ++r) {
    const auto g = sample_window(0.5, 12, 4242, r);
    EXPECT_FALSE(certify(g, Rational(1)).critical_witness);
  }
}

TEST(SmallSearch, FindsWitnessesOnlyAtCriticalValues) {
  const auto zero = search_small_witness(Rational(0), 4);
  ASSERT_TRUE(zero.has_value());
  EXPECT_LE(zero->graph.n(), 3);
  EXPECT_TRUE(certify(zero->graph, Rational(0)).critical_witness);
  // Sturm-type witnesses for non-integer negatives need more than six vertices.
  EXPECT_FALSE(search_small_witness(Rational(-1, 2), 6).has_value());
  EXPECT_TRUE(search_small_witness(Rational(-1), 5).has_value());
  EXPECT_TRUE(search_small_witness(Rational(1, 2), 4).has_value());
  EXPECT_TRUE(search_small_witness(Rational(2), 4).has_value());
  EXPECT_FALSE(search_small_witness(Rational(2, 3), 5).has_value());
  EXPECT_FALSE(search_small_witness(Rational(3, 2), 5).has_value());
  EXPECT_THROW(search_small_witness(Rational(0), 7), std::invalid_argument);
}

}  // namespace
}  // namespace lpp
