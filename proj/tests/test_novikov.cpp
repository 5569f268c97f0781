#include "doctest.h"
#include "oracles.hpp"

using namespace twisted;
using oracle::coefficients;

namespace {

NovikovSeries series(std::vector<std::pair<Rational, Rational>> terms, ExtendedRational trunc = kInfinity) {
  std::vector<NovikovSeries::Term> out;
  for (auto& [e, c] : terms) out.push_back({e, c});
  return NovikovSeries::make(out, trunc);
}

NovikovSeries t(const Rational& e) { return NovikovSeries::monomial(Rational(1), e); }

}  // namespace

TEST_SUITE("novikov_field") {

TEST_CASE("make canonicalizes") {
  const auto a = series({{2, -1}, {0, 1}});
  CHECK(to_string(a) == "1 - t^2");
  CHECK(a.is_exact());

  CHECK(series({{1, 2}, {1, -2}}).is_exact_zero());

  const auto b = series({{0, 1}, {5, 7}}, Rational(3));
  REQUIRE(b.trunc());
  CHECK(*b.trunc() == 3);
  CHECK(b.terms().size() == 1);
  CHECK(to_string(b) == "1 + O(t^3)");
}

TEST_CASE("make is idempotent on canonical input") {
  oracle::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = oracle::random_series(rng);
    CHECK(NovikovSeries::make(a.terms(), a.trunc()).same_representation(a));
  }
}

TEST_CASE("addition") {
  CHECK(series({{0, 1}, {1, 1}}) + series({{0, -1}, {1, 1}}) == series({{1, 2}}));

  const auto s = series({{0, 1}}, Rational(2)) + t(3);
  CHECK(s.same_representation(series({{0, 1}}, Rational(2))));

  CHECK(series({{0, 1}, {5, -1}}) + t(5) == NovikovSeries(1));
}

TEST_CASE("multiplication") {
  CHECK((NovikovSeries(1) - t(1)) * (NovikovSeries(1) + t(1)) == NovikovSeries(1) - t(2));

  const auto partial = series({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, Rational(4));
  const auto product = (NovikovSeries(1) - t(1)) * partial;
  CHECK(product.same_representation(series({{0, 1}}, Rational(4))));

  CHECK(t(Rational(1, 2)) * t(Rational(3, 2)) == t(2));
}

TEST_CASE("multiplication truncation uses the valuation of the other factor") {
  // (t^2 + O(t^5)) * (t^-1 + O(t^3)) is known below min(5 - 1, 3 + 2) = 4.
  const auto a = series({{2, 1}}, Rational(5));
  const auto b = series({{-1, 1}}, Rational(3));
  const auto p = a * b;
  REQUIRE(p.trunc());
  CHECK(*p.trunc() == 4);
  CHECK(coefficients(p) == oracle::Coefficients{{1, 1}});
  CHECK((NovikovSeries() * b).is_exact_zero());
}

TEST_CASE("valuation") {
  CHECK(*valuation(NovikovSeries(1) - t(3)) == 0);
  CHECK_FALSE(valuation(NovikovSeries()).has_value());
  CHECK_THROWS_AS(valuation(NovikovSeries::big_o(Rational(2))), ZeroUpToPrecision);
}

TEST_CASE("inverse of 1 - t^2 against the geometric series") {
  const auto inv = inverse(NovikovSeries(1) - t(2), Rational(7));
  REQUIRE(inv.trunc());
  CHECK(*inv.trunc() == 7);
  CHECK(coefficients(inv) == oracle::geometric(Rational(2), Rational(7)));
}

TEST_CASE("inverse of a monomial") {
  const auto inv = inverse(t(3), Rational(5));
  CHECK(coefficients(inv) == oracle::Coefficients{{-3, 1}});
}

TEST_CASE("inverse of 1 - t^-1") {
  const auto inv = inverse(NovikovSeries(1) - t(-1), Rational(3));
  REQUIRE(inv.trunc());
  CHECK(*inv.trunc() == 3);
  CHECK(coefficients(inv) == oracle::Coefficients{{1, -1}, {2, -1}});
  const auto product = inv * (NovikovSeries(1) - t(-1));
  CHECK(agree_below(product, NovikovSeries(1), Rational(2)));
}

TEST_CASE("inverse errors") {
  CHECK_THROWS_AS(inverse(NovikovSeries(), Rational(3)), ZeroDivision);
  CHECK_THROWS_AS(inverse(series({{0, 1}}, Rational(4)), Rational(3)), NotExact);
}

TEST_CASE("equality refuses truncated operands") {
  CHECK_THROWS_AS((void)(NovikovSeries::big_o(Rational(1)) == NovikovSeries()), NotExact);
  CHECK(agree_below(series({{0, 1}, {3, 1}}), series({{0, 1}}, Rational(2))));
}

TEST_CASE("field axioms on random exact series") {
  oracle::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_series(rng);
    const auto b = oracle::random_series(rng);
    const auto c = oracle::random_series(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == NovikovSeries());
    CHECK(coefficients(a * b) == oracle::convolve(coefficients(a), coefficients(b)));
  }
}

TEST_CASE("inverse property on random series") {
  oracle::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_series(rng);
    if (a.is_exact_zero()) continue;
    const Rational precision(rng.uniform(-10, 20));
    const auto inv = inverse(a, precision);
    REQUIRE(inv.trunc());
    CHECK(*inv.trunc() == precision);
    // a * inv = 1 on every exponent below precision + val(a).
    const Rational cutoff = precision + *valuation(a);
    const auto product = oracle::convolve(coefficients(a), coefficients(inv));
    oracle::Coefficients one;
    if (0 < cutoff) one[0] = 1;
    CHECK(oracle::below(product, cutoff) == one);
  }
}

TEST_CASE("valuation is additive") {
  oracle::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_series(rng);
    const auto b = oracle::random_series(rng);
    if (a.is_exact_zero() || b.is_exact_zero()) continue;
    CHECK(*valuation(a * b) == *valuation(a) + *valuation(b));
  }
}

TEST_CASE("exact division") {
  const auto a = NovikovSeries(1) - t(3);
  const auto b = NovikovSeries(1) - t(1);
  CHECK(divide_exact(a, b) == NovikovSeries(1) + t(1) + t(2));
  CHECK_THROWS_AS(divide_exact(NovikovSeries(1), b), std::domain_error);
}

}  // TEST_SUITE
