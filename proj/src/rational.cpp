#include "twisted/rational.hpp"

#include "twisted/errors.hpp"

#include <regex>

namespace twisted {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^(-?[0-9]+)(?:/([0-9]+))?$)");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer numerator(match[1].str());
  Integer denominator(1);
  if (match[2].matched) {
    denominator = Integer(match[2].str());
    if (denominator == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational& value) {
  const Integer num = mp::numerator(value);
  const Integer den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer floor(const Rational& value) {
  const Integer num = mp::numerator(value);
  const Integer den = mp::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

bool is_integral(const Rational& value) { return mp::denominator(value) == 1; }

}  // namespace twisted
