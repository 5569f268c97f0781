#pragma once

#include "twisted/homology.hpp"

#include <variant>

namespace twisted {

/// The module M in C (x)_{Z[H^1]} M.
struct CoefficientSystem {
  struct Universal {};
  struct TrivialZ {};
  std::variant<Universal, TrivialZ, OmegaHom> variant;

  static CoefficientSystem universal() { return {Universal{}}; }
  static CoefficientSystem trivial() { return {TrivialZ{}}; }
  static CoefficientSystem omega(OmegaHom w) { return {std::move(w)}; }
};

/// Entrywise image of the differential: the identity, the augmentation, or
/// e^g -> t^{omega(g)}. Novikov images are exact polynomials.
ChainComplex<LaurentPoly> base_change_universal(const ChainComplex<LaurentPoly>& c);
ChainComplex<Integer> base_change_trivial(const ChainComplex<LaurentPoly>& c);
ChainComplex<NovikovSeries> base_change_omega(const ChainComplex<LaurentPoly>& c,
                                              const OmegaHom& omega);

using AnyComplex =
    std::variant<ChainComplex<Integer>, ChainComplex<LaurentPoly>, ChainComplex<NovikovSeries>>;

AnyComplex base_change(const ChainComplex<LaurentPoly>& c, const CoefficientSystem& system);

/// Tor over Z[t^+-1] of the trivial module Z against Lambda_omega, from the
/// resolution 0 -> Z[t^+-1] -(1-t)-> Z[t^+-1] -> Z -> 0.
struct TorResult {
  std::size_t tor0 = 0;
  std::size_t tor1 = 0;
  /// 1 - t^d, the resolution map after base change.
  NovikovSeries map;
  /// Inverse of `map` below the requested precision, when it is nonzero.
  std::optional<NovikovSeries> inverse;
};

TorResult tor_trivial(const OmegaHom& omega, const Rational& precision);

struct ChangeOfRings {
  std::size_t tensor = 0;  // dim M (x) Lambda
  std::size_t tor1 = 0;    // dim Tor_1(M, Lambda)
  friend bool operator==(const ChangeOfRings&, const ChangeOfRings&) = default;
};

/// Summandwise: free(n) -> (n, 0); trivial Z -> tor_trivial; Z[t^+-1]/(p) ->
/// (0, 0) if p maps to a nonzero series, else (1, 1).
/// Throws Unclassified if the module carries no classification.
ChangeOfRings module_change(const FinitelyPresentedModule& module, const OmegaHom& omega,
                            const Rational& precision);

/// Per-degree record of the universal coefficients computation.
struct UcssEntry {
  ChangeOfRings here;             // from H_k
  std::size_t tor_from_below = 0; // Tor_1(H_{k-1}, Lambda)
  std::size_t dimension = 0;      // here.tensor + tor_from_below
};

struct UcssResult {
  std::map<Rational, UcssEntry> entries;
  FieldHomology homology;
};

/// Universal coefficients for a length-one resolution: the sequence
/// 0 -> H_k (x) Lambda -> H_k(C (x) Lambda) -> Tor_1(H_{k-1}, Lambda) -> 0
/// splits over the field, so dim = tensor(H_k) + tor1(H_{k-1}).
/// Only group rings of rank 1 are accepted (RankMismatch otherwise).
UcssResult ucss(const LaurentHomology& h, const OmegaHom& omega, const Rational& precision);

/// Same computation with trivial Z coefficients (untwisted homology), as
/// abelian groups per degree.
IntegerHomology ucss_trivial(const LaurentHomology& h);

}  // namespace twisted
