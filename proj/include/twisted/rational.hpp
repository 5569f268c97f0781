#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace twisted {

namespace mp = boost::multiprecision;

/// Arbitrary precision integer; expression templates are off so the type
/// behaves like a plain value inside Eigen expressions.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// A rational number or +infinity (nullopt).
using ExtendedRational = std::optional<Rational>;

inline constexpr std::nullopt_t kInfinity = std::nullopt;

/// Parses "p" or "p/q" (optional leading minus, no decimals, q > 0).
Rational parse_rational(std::string_view text);

/// "p" when integral, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

Integer floor(const Rational& value);

bool is_integral(const Rational& value);

inline ExtendedRational min_extended(const ExtendedRational& a, const ExtendedRational& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

inline ExtendedRational shifted(const ExtendedRational& a, const Rational& b) {
  if (!a) return kInfinity;
  return *a + b;
}

/// True when `value` lies strictly below `bound` (every rational is below +inf).
inline bool below(const Rational& value, const ExtendedRational& bound) {
  return !bound || value < *bound;
}

}  // namespace twisted
