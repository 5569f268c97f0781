#pragma once

#include "twisted/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace twisted {

/// An element of the universal Novikov field, stored as finitely many terms
/// a_r t^r (rational r, rational a_r) below a truncation bound.
///
/// Terms are kept strictly ascending in exponent with no zero coefficients,
/// and every stored exponent lies below `trunc()`. Exponents at or above the
/// truncation are unknown; `trunc() == kInfinity` means the series is exact.
/// A default constructed series is the exact zero.
class NovikovSeries {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  NovikovSeries() = default;
  explicit NovikovSeries(int constant);
  explicit NovikovSeries(const Rational& constant);

  /// Canonicalizes arbitrary input: sorts, merges duplicate exponents, drops
  /// zero coefficients and anything at or above `trunc`.
  static NovikovSeries make(std::vector<Term> terms, ExtendedRational trunc = kInfinity);
  static NovikovSeries monomial(const Rational& coefficient, const Rational& exponent);
  /// Exact zero known only below `trunc`: O(t^trunc).
  static NovikovSeries big_o(const Rational& trunc);

  const std::vector<Term>& terms() const { return terms_; }
  const ExtendedRational& trunc() const { return trunc_; }

  bool is_exact() const { return !trunc_.has_value(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  /// The leading term is known, so the series is nonzero in the field.
  bool is_known_nonzero() const { return !terms_.empty(); }

  /// Smallest exponent with nonzero coefficient; +inf for the exact zero.
  /// Throws ZeroUpToPrecision when no term is known below a finite truncation.
  ExtendedRational valuation() const;

  /// Lowest exponent that can carry a nonzero coefficient: the first term,
  /// else the truncation bound.
  ExtendedRational valuation_bound() const;

  /// Drops every term at or above `bound` and lowers the truncation to it.
  NovikovSeries truncated(const Rational& bound) const;

  NovikovSeries operator-() const;
  NovikovSeries& operator+=(const NovikovSeries& other);
  NovikovSeries& operator-=(const NovikovSeries& other);
  NovikovSeries& operator*=(const NovikovSeries& other);

  friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
  friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);

  /// Mathematical equality. Only decidable when both operands are exact;
  /// throws NotExact otherwise (use `agree_below`).
  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

  /// Equality of the stored data, truncation included.
  bool same_representation(const NovikovSeries& other) const {
    return trunc_ == other.trunc_ && terms_ == other.terms_;
  }

 private:
  std::vector<Term> terms_;
  ExtendedRational trunc_;
};

/// True iff a and b have the same coefficients on every exponent below the
/// smaller of the two truncations.
bool agree_below(const NovikovSeries& a, const NovikovSeries& b);

/// Same, against an explicit cutoff that must not exceed either truncation.
bool agree_below(const NovikovSeries& a, const NovikovSeries& b, const Rational& cutoff);

ExtendedRational valuation(const NovikovSeries& a);

/// Inverse of an exact nonzero series, correct on all exponents below
/// `precision`. Writes a = c t^v (1 - u) with val(u) > 0 and sums the
/// geometric series in u.
NovikovSeries inverse(const NovikovSeries& a, const Rational& precision);

/// q with a = q * b, for exact a and b where the division is known to be
/// exact. Throws std::domain_error if b does not divide a.
NovikovSeries divide_exact(const NovikovSeries& a, const NovikovSeries& b);

std::string to_string(const NovikovSeries& a);

}  // namespace twisted

namespace Eigen {

template <>
struct NumTraits<twisted::NovikovSeries> : GenericNumTraits<twisted::NovikovSeries> {
  using Real = twisted::NovikovSeries;
  using NonInteger = twisted::NovikovSeries;
  using Nested = twisted::NovikovSeries;
  using Literal = twisted::NovikovSeries;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
