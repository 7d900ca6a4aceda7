#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "lpp/rational.hpp"

namespace lpp {

/// Tag for the distinguished value -infinity. Never represented as a float.
struct MinusInfinity {
  friend bool operator==(MinusInfinity, MinusInfinity) { return true; }
};

/// Weight given to red edges. Blue edges always weigh 1.
///
/// Exact rationals are required wherever ties between path weights matter
/// (criticality certification, side derivatives). Floats are accepted by the
/// Monte Carlo estimators of C_p(x) only.
class WeightParam {
 public:
  WeightParam() : value_(Rational(0)) {}
  WeightParam(MinusInfinity) : value_(MinusInfinity{}) {}
  WeightParam(Rational x) : value_(x) {}
  template <std::integral I>
  WeightParam(I x) : value_(Rational(static_cast<std::int64_t>(x))) {}
  explicit WeightParam(double x);

  static WeightParam minus_infinity() { return WeightParam(MinusInfinity{}); }

  bool is_minus_infinity() const { return std::holds_alternative<MinusInfinity>(value_); }
  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_float() const { return std::holds_alternative<double>(value_); }
  bool is_finite() const { return !is_minus_infinity(); }

  /// Requires is_exact().
  const Rational& exact() const;
  /// Finite values only; exact values are converted.
  double to_double() const;

  friend bool operator==(const WeightParam&, const WeightParam&) = default;

 private:
  std::variant<MinusInfinity, Rational, double> value_;
};

/// Accepts "-inf", "a/b", integers (exact) and decimals (float).
WeightParam parse_weight(std::string_view text);

/// Like parse_weight but refuses decimals and -inf: for commands whose
/// correctness depends on exact ties.
Rational parse_exact_weight(std::string_view text);

std::string to_string(const WeightParam& x);

/// Strict order on finite values with -inf below everything.
bool less(const WeightParam& a, const WeightParam& b);

/// An extended real: -infinity, an exact rational, or a float.
class ExtendedReal {
 public:
  ExtendedReal() : value_(Rational(0)) {}
  ExtendedReal(MinusInfinity) : value_(MinusInfinity{}) {}
  ExtendedReal(Rational r) : value_(r) {}
  template <std::integral I>
  ExtendedReal(I r) : value_(Rational(static_cast<std::int64_t>(r))) {}
  explicit ExtendedReal(double d) : value_(d) {}

  bool is_minus_infinity() const { return std::holds_alternative<MinusInfinity>(value_); }
  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_float() const { return std::holds_alternative<double>(value_); }

  const Rational& exact() const;
  /// -inf maps to -std::numeric_limits<double>::infinity() for reporting only.
  double to_double() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  std::variant<MinusInfinity, Rational, double> value_;
};

std::string to_string(const ExtendedReal& v);

}  // namespace lpp
