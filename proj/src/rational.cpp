#include "lpp/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace lpp {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("malformed rational: empty string");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("malformed rational: negative denominator in '" +
                                std::string(text) + "'");
  }
  const std::int64_t den = parse_int(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational: zero denominator in '" +
                                std::string(text) + "'");
  }
  return Rational(num, den);
}

bool looks_like_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return false;
  return text.find_first_of(".eE") != std::string_view::npos;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t floor(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  // Integer division truncates toward zero; fix up negative non-integers.
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) return q - 1;
  return q;
}

}  // namespace lpp
