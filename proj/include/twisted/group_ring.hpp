#pragma once

#include "twisted/novikov.hpp"
#include "twisted/rational.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace twisted {

/// Element of the group ring Z[H^1(Y;Z)] = Z[t_1^+-1, ..., t_b^+-1], stored as
/// a map from exponent vectors (length = rank) to nonzero integer coefficients.
///
/// Rank 0 elements are plain integers; they embed in every rank through the
/// unit map and are promoted silently when combined with a ranked element.
/// A default constructed element is the integer zero.
class LaurentPoly {
 public:
  using Exponent = std::vector<std::int64_t>;
  using TermMap = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(int constant);
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly zero(std::size_t rank);
  static LaurentPoly constant(std::size_t rank, const Integer& value);
  static LaurentPoly monomial(const Integer& coefficient, Exponent exponent);
  /// Canonicalizes: merges duplicate exponents, drops zero coefficients.
  /// Throws RankMismatch if an exponent vector has the wrong length.
  static LaurentPoly make(std::size_t rank, const std::vector<std::pair<Exponent, Integer>>& terms);
  /// Univariate shorthand: sum of c t^k for (k, c) pairs, rank 1.
  static LaurentPoly univariate(const std::vector<std::pair<std::int64_t, Integer>>& terms);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  /// Rank shared by a and b after promotion of rank-0 operands.
  static std::size_t common_rank(const LaurentPoly& a, const LaurentPoly& b);
  void promote(std::size_t rank);

  std::size_t rank_ = 0;
  TermMap terms_;
};

/// The homomorphism H^1(Y;Z) -> Q, gamma -> integral of gamma ^ omega, given by
/// its values on a basis.
struct OmegaHom {
  std::vector<Rational> values;

  std::size_t rank() const { return values.size(); }
  static OmegaHom univariate(const Rational& d) { return OmegaHom{{d}}; }
};

/// True iff a = +-e^g for a single exponent vector g.
bool is_unit(const LaurentPoly& a);

/// Inverse of a unit; throws ZeroDivision otherwise.
LaurentPoly unit_inverse(const LaurentPoly& a);

/// Sum of coefficients: the augmentation Z[H^1] -> Z.
Integer augment(const LaurentPoly& a);

/// The ring map e^g -> t^{omega(g)} into the Novikov field. Exact result.
NovikovSeries to_novikov(const LaurentPoly& a, const OmegaHom& omega);

/// a(t_1 ... t_b) with every variable set to a power of t chosen so distinct
/// monomials of total spread < `spread` stay distinct (Kronecker substitution).
/// Injective on polynomials whose exponent differences are below `spread`.
NovikovSeries kronecker_image(const LaurentPoly& a, std::int64_t spread);

std::string to_string(const LaurentPoly& a);

}  // namespace twisted

namespace Eigen {

template <>
struct NumTraits<twisted::LaurentPoly> : GenericNumTraits<twisted::LaurentPoly> {
  using Real = twisted::LaurentPoly;
  using NonInteger = twisted::LaurentPoly;
  using Nested = twisted::LaurentPoly;
  using Literal = twisted::LaurentPoly;
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
