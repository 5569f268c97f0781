#include "twisted/novikov.hpp"

#include "twisted/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twisted {

namespace {

using TermMap = std::map<Rational, Rational>;

std::vector<NovikovSeries::Term> to_terms(const TermMap& map, const ExtendedRational& trunc) {
  std::vector<NovikovSeries::Term> out;
  out.reserve(map.size());
  for (const auto& [exponent, coefficient] : map) {
    if (coefficient != 0 && below(exponent, trunc)) out.push_back({exponent, coefficient});
  }
  return out;
}

}  // namespace

NovikovSeries::NovikovSeries(int constant) : NovikovSeries(Rational(constant)) {}

NovikovSeries::NovikovSeries(const Rational& constant) {
  if (constant != 0) terms_.push_back({Rational(0), constant});
}

NovikovSeries NovikovSeries::make(std::vector<Term> terms, ExtendedRational trunc) {
  TermMap merged;
  for (auto& term : terms) merged[term.exponent] += term.coefficient;
  NovikovSeries out;
  out.trunc_ = std::move(trunc);
  out.terms_ = to_terms(merged, out.trunc_);
  return out;
}

NovikovSeries NovikovSeries::monomial(const Rational& coefficient, const Rational& exponent) {
  return make({{exponent, coefficient}});
}

NovikovSeries NovikovSeries::big_o(const Rational& trunc) {
  NovikovSeries out;
  out.trunc_ = trunc;
  return out;
}

ExtendedRational NovikovSeries::valuation() const {
  if (!terms_.empty()) return terms_.front().exponent;
  if (is_exact()) return kInfinity;
  throw ZeroUpToPrecision("valuation undetermined: no term known below t^" +
                          format_rational(*trunc_));
}

ExtendedRational NovikovSeries::valuation_bound() const {
  if (!terms_.empty()) return terms_.front().exponent;
  return trunc_;
}

NovikovSeries NovikovSeries::truncated(const Rational& bound) const {
  NovikovSeries out;
  out.trunc_ = min_extended(trunc_, bound);
  for (const auto& term : terms_) {
    if (!below(term.exponent, out.trunc_)) break;
    out.terms_.push_back(term);
  }
  return out;
}

NovikovSeries NovikovSeries::operator-() const {
  NovikovSeries out = *this;
  for (auto& term : out.terms_) term.coefficient = -term.coefficient;
  return out;
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& other) {
  TermMap merged;
  for (const auto& term : terms_) merged[term.exponent] += term.coefficient;
  for (const auto& term : other.terms_) merged[term.exponent] += term.coefficient;
  trunc_ = min_extended(trunc_, other.trunc_);
  terms_ = to_terms(merged, trunc_);
  return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& other) { return *this += -other; }

NovikovSeries& NovikovSeries::operator*=(const NovikovSeries& other) {
  *this = *this * other;
  return *this;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return NovikovSeries();
  // Unknown tail of a (from trunc a upward) times the lowest possible term of b.
  const ExtendedRational trunc =
      min_extended(b.valuation_bound() ? shifted(a.trunc(), *b.valuation_bound()) : kInfinity,
                   a.valuation_bound() ? shifted(b.trunc(), *a.valuation_bound()) : kInfinity);
  TermMap product;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      Rational exponent = x.exponent + y.exponent;
      if (!below(exponent, trunc)) continue;
      product[exponent] += x.coefficient * y.coefficient;
    }
  }
  return NovikovSeries::make(to_terms(product, trunc), trunc);
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
  if (!a.is_exact() || !b.is_exact()) {
    throw NotExact("equality of truncated series is undecidable; use agree_below");
  }
  return a.terms() == b.terms();
}

bool agree_below(const NovikovSeries& a, const NovikovSeries& b, const Rational& cutoff) {
  auto difference = (a - b).truncated(cutoff);
  return difference.terms().empty();
}

bool agree_below(const NovikovSeries& a, const NovikovSeries& b) {
  const auto cutoff = min_extended(a.trunc(), b.trunc());
  if (!cutoff) return (a - b).terms().empty();
  return agree_below(a, b, *cutoff);
}

ExtendedRational valuation(const NovikovSeries& a) { return a.valuation(); }

NovikovSeries inverse(const NovikovSeries& a, const Rational& precision) {
  if (!a.is_exact()) throw NotExact("inverse requires an exact series");
  if (a.is_exact_zero()) throw ZeroDivision("inverse of zero");

  const auto& lead = a.terms().front();
  const Rational shift = lead.exponent;
  // a = c t^v (1 - u); u = 1 - a / (c t^v) has strictly positive valuation.
  const NovikovSeries normalizer = NovikovSeries::monomial(1 / lead.coefficient, -shift);
  const NovikovSeries u = NovikovSeries(1) - a * normalizer;

  // Need exponents below precision after multiplying back by t^-v.
  const Rational inner = precision + shift;
  NovikovSeries sum = NovikovSeries(1).truncated(inner);
  NovikovSeries power = sum;
  while (true) {
    power = (power * u).truncated(inner);
    if (power.terms().empty()) break;
    sum += power;
  }
  return (sum * normalizer).truncated(precision);
}

NovikovSeries divide_exact(const NovikovSeries& a, const NovikovSeries& b) {
  if (!a.is_exact() || !b.is_exact()) throw NotExact("divide_exact requires exact series");
  if (b.is_exact_zero()) throw ZeroDivision("division by zero");
  if (a.is_exact_zero()) return NovikovSeries();

  const auto& low = b.terms().front();
  const Rational top = a.terms().back().exponent - b.terms().back().exponent;
  std::vector<NovikovSeries::Term> quotient;
  NovikovSeries remainder = a;
  while (!remainder.is_exact_zero()) {
    const auto& r = remainder.terms().front();
    NovikovSeries::Term step{r.exponent - low.exponent, r.coefficient / low.coefficient};
    if (step.exponent > top) throw std::domain_error("divide_exact: not divisible");
    quotient.push_back(step);
    remainder -= NovikovSeries::monomial(step.coefficient, step.exponent) * b;
  }
  return NovikovSeries::make(std::move(quotient));
}

std::string to_string(const NovikovSeries& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponent, coefficient] : a.terms()) {
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (exponent == 0) {
      out << format_rational(magnitude);
      continue;
    }
    if (!unit) out << format_rational(magnitude) << "*";
    out << "t";
    if (exponent != 1) {
      const bool paren = !is_integral(exponent) || exponent < 0;
      out << "^" << (paren ? "(" : "") << format_rational(exponent) << (paren ? ")" : "");
    }
  }
  if (a.trunc()) {
    if (!first) out << " + ";
    out << "O(t^" << format_rational(*a.trunc()) << ")";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace twisted
