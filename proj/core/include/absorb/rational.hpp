#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <type_traits>

namespace absorb {

/// Arbitrary-precision integer fraction.
using Rational = boost::multiprecision::cpp_rational;

enum class ScalarMode { Float, Rational };

template <class T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rational>;

template <class T>
constexpr ScalarMode scalar_mode_of() {
  return is_rational_v<T> ? ScalarMode::Rational : ScalarMode::Float;
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
T from_double(double x);

template <>
inline double from_double<double>(double x) {
  return x;
}

/// Converts through the shortest decimal that round-trips `x`, so that a value
/// typed as 0.1 becomes exactly 1/10 rather than its binary approximation.
/// Throws std::invalid_argument for non-finite input.
Rational rational_from_decimal_double(double x);

template <>
inline Rational from_double<Rational>(double x) {
  return rational_from_decimal_double(x);
}

/// Parses "p", "p/q", or a decimal literal such as "-1.25e-3" exactly.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& x);

}  // namespace absorb
