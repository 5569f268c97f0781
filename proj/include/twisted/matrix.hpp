#pragma once

#include "twisted/errors.hpp"
#include "twisted/group_ring.hpp"
#include "twisted/novikov.hpp"
#include "twisted/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace twisted {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = Matrix<Integer>;
using NovikovMatrix = Matrix<NovikovSeries>;
using LaurentMatrix = Matrix<LaurentPoly>;

using Index = Eigen::Index;

/// Ring-specific hooks for exact elimination. `decided_zero` and
/// `known_nonzero` may both be false for a truncated Novikov entry whose
/// value is unknown below its truncation.
template <class Scalar>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer one() { return Integer(1); }
  static bool decided_zero(const Integer& x) { return x == 0; }
  static bool known_nonzero(const Integer& x) { return x != 0; }
  /// Smaller is a better pivot.
  static Integer pivot_key(const Integer& x) { return x < 0 ? Integer(-x) : x; }
  static bool divisible_elimination(const Matrix<Integer>&) { return true; }
  static Integer divide_exact(const Integer& a, const Integer& b) { return a / b; }
};

template <>
struct RingTraits<NovikovSeries> {
  static NovikovSeries one() { return NovikovSeries(1); }
  static bool decided_zero(const NovikovSeries& x) { return x.is_exact_zero(); }
  static bool known_nonzero(const NovikovSeries& x) { return x.is_known_nonzero(); }
  /// Minimal valuation first.
  static Rational pivot_key(const NovikovSeries& x) { return *x.valuation(); }
  static bool divisible_elimination(const Matrix<NovikovSeries>& m) {
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        if (!m(i, j).is_exact()) return false;
      }
    }
    return true;
  }
  static NovikovSeries divide_exact(const NovikovSeries& a, const NovikovSeries& b) {
    return twisted::divide_exact(a, b);
  }
};

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!RingTraits<Scalar>::decided_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <>
inline bool is_zero_matrix<LaurentPoly>(const Matrix<LaurentPoly>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

/// Rank over the fraction field of an integral domain (Z, or the exact
/// Novikov series, whose fraction field embeds in the Novikov field) by
/// fraction-free Bareiss elimination with full pivoting.
///
/// Pivot choice: smallest `pivot_key` (valuation over Novikov, magnitude over
/// Z), then smallest column, then smallest row. When some entry is truncated
/// the Bareiss division is skipped and plain cross-multiplication is used;
/// if the remaining block holds only entries of undetermined value the rank
/// is undetermined and InsufficientPrecision is thrown.
template <class Scalar>
std::size_t rank(Matrix<Scalar> m) {
  using Traits = RingTraits<Scalar>;
  const bool divide = Traits::divisible_elimination(m);
  Scalar previous = Traits::one();
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::optional<std::pair<Index, Index>> pivot;
    bool undetermined = false;
    for (Index j = r; j < cols; ++j) {
      for (Index i = r; i < rows; ++i) {
        const Scalar& x = m(i, j);
        if (!Traits::known_nonzero(x)) {
          if (!Traits::decided_zero(x)) undetermined = true;
          continue;
        }
        if (!pivot || Traits::pivot_key(x) < Traits::pivot_key(m(pivot->first, pivot->second))) {
          pivot = {i, j};
        }
      }
    }
    if (!pivot) {
      if (undetermined) {
        throw InsufficientPrecision(
            "rank undetermined: remaining entries are zero only up to their truncation");
      }
      break;
    }
    m.row(r).swap(m.row(pivot->first));
    m.col(r).swap(m.col(pivot->second));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = r + 1; j < cols; ++j) {
        Scalar value = m(r, r) * m(i, j) - m(i, r) * m(r, j);
        m(i, j) = divide ? Traits::divide_exact(value, previous) : std::move(value);
      }
      m(i, r) = Scalar(0);
    }
    previous = m(r, r);
  }
  return static_cast<std::size_t>(r);
}

/// Rank of a group-ring matrix over its fraction field, via a Kronecker
/// substitution into one variable that is injective on every minor.
std::size_t rank(const Matrix<LaurentPoly>& m);

/// Entrywise image of a matrix under a ring map.
template <class To, class From, class Map>
Matrix<To> map_entries(const Matrix<From>& m, Map&& f) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = f(m(i, j));
  }
  return out;
}

/// Submatrix on the given row and column index lists (either may be empty).
template <class Scalar>
Matrix<Scalar> submatrix(const Matrix<Scalar>& m, const std::vector<Index>& rows,
                         const std::vector<Index>& cols) {
  Matrix<Scalar> out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) out(Index(i), Index(j)) = m(rows[i], cols[j]);
  }
  return out;
}

/// Matrix of the given shape filled with the ring zero.
template <class Scalar>
Matrix<Scalar> zero_matrix(Index rows, Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}

}  // namespace twisted
