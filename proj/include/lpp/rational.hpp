#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace lpp {

/// Exact rational number in lowest terms with a positive denominator.
/// boost::rational normalizes on every operation, so gcd(|num|, den) == 1
/// holds for every value.
using Rational = boost::rational<std::int64_t>;

/// Parses "a/b" or a plain integer "a". Whitespace and decimals are rejected.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// True when `text` looks like a decimal literal ("0.5", "-2.25", "1e-3").
bool looks_like_decimal(std::string_view text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Largest integer not exceeding r.
std::int64_t floor(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace lpp
