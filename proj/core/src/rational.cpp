#include <absorb/rational.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace absorb {

namespace {

Rational pow10(long e) {
  boost::multiprecision::cpp_int p = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
  return e < 0 ? Rational(boost::multiprecision::cpp_int(1), p) : Rational(p);
}

Rational parse_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  boost::multiprecision::cpp_int mantissa = 0;
  long scale = 0;
  bool seen_digit = false;
  bool after_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (after_point) --scale;
      seen_digit = true;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal");
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E')
      throw std::invalid_argument("malformed rational literal");
    ++i;
    long exponent = 0;
    const auto* first = s.data() + i;
    const auto* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last)
      throw std::invalid_argument("malformed exponent in rational literal");
    if (exponent > 4096 || exponent < -4096)
      throw std::invalid_argument("exponent out of range in rational literal");
    scale += exponent;
  }
  Rational out = Rational(mantissa) * pow10(scale);
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational rational_from_decimal_double(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("non-finite value has no rational form");
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::invalid_argument("to_chars failed");
  return parse_decimal(std::string_view(buf.data(), ptr - buf.data()));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return num / den;
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace absorb
