#include "lpp/weight.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lpp {

WeightParam::WeightParam(double x) : value_(x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("float weight must be finite; use MinusInfinity for -inf");
  }
}

const Rational& WeightParam::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::invalid_argument("weight parameter is not an exact rational");
}

double WeightParam::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return lpp::to_double(*r);
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  throw std::invalid_argument("weight parameter is -inf");
}

WeightParam parse_weight(std::string_view text) {
  if (text == "-inf" || text == "-infinity" || text == "minus-infinity") {
    return WeightParam::minus_infinity();
  }
  if (looks_like_decimal(text)) {
    std::string owned(text);
    char* end = nullptr;
    const double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || owned.empty()) {
      throw std::invalid_argument("malformed number: '" + owned + "'");
    }
    return WeightParam(v);
  }
  return WeightParam(parse_rational(text));
}

Rational parse_exact_weight(std::string_view text) {
  if (looks_like_decimal(text)) {
    throw std::invalid_argument("exact rational required (use a/b form), got decimal '" +
                                std::string(text) + "'");
  }
  if (text.find("inf") != std::string_view::npos) {
    throw std::invalid_argument("exact rational required, got '" + std::string(text) + "'");
  }
  return parse_rational(text);
}

std::string to_string(const WeightParam& x) {
  if (x.is_minus_infinity()) return "-inf";
  if (x.is_exact()) return to_string(x.exact());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x.to_double());
  return buf;
}

bool less(const WeightParam& a, const WeightParam& b) {
  if (a.is_minus_infinity()) return !b.is_minus_infinity();
  if (b.is_minus_infinity()) return false;
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

const Rational& ExtendedReal::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::invalid_argument("extended real is not an exact rational");
}

double ExtendedReal::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return lpp::to_double(*r);
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  return -std::numeric_limits<double>::infinity();
}

std::string to_string(const ExtendedReal& v) {
  if (v.is_minus_infinity()) return "-inf";
  if (v.is_exact()) return to_string(v.exact());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.to_double());
  return buf;
}

}  // namespace lpp
