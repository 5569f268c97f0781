#pragma once

#include "twisted/matrix.hpp"

#include <vector>

namespace twisted {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  /// Nonzero diagonal entries of D, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Determinant by fraction-free elimination (square input).
Integer determinant(const IntegerMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion_i (torsion_i > 1,
/// divisibility chain).
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of m : Z^cols -> Z^rows.
AbelianGroup cokernel(const IntegerMatrix& m);

std::string to_string(const AbelianGroup& group);

}  // namespace twisted
