#pragma once

#include "twisted/coefficients.hpp"

#include <string>

namespace twisted {

enum class Flavor { Hat, PlusGradedModule };

template <class Scalar>
struct ModelComplex {
  ChainComplex<Scalar> complex;
  std::string provenance;
  Flavor flavor = Flavor::Hat;
};

/// Twisted hat complex of S^1 x S^2 over Z[t, t^-1]: x+ (degree 1/2) maps to
/// (1 - t) x- (degree -1/2).
ModelComplex<LaurentPoly> s1xs2_universal();

/// Its omega-twisted version for omega = d PD[mu]: Lambda -t^c(1 - t^d)-> Lambda.
ModelComplex<NovikovSeries> s1xs2_omega(std::int64_t d, const Rational& c = Rational(0));

/// Lambda in degree 0 with zero differential: the unit for connected sums.
ModelComplex<NovikovSeries> novikov_point();

/// Hat complex of a connected sum, as the tensor product over Lambda.
ModelComplex<NovikovSeries> connected_sum_hat(const ModelComplex<NovikovSeries>& a,
                                              const ModelComplex<NovikovSeries>& b);

/// Evidence that a 3-manifold containing a nonseparating sphere S with
/// omega(S) = d has vanishing twisted Floer homology.
struct VanishingCertificate {
  enum class Verdict { Vanishes, Inconclusive };
  std::int64_t pairing = 0;
  Verdict verdict = Verdict::Inconclusive;
  /// Homology of the S^1 x S^2 summand, s1xs2_omega(d, 0).
  FieldHomology summand_homology;
  /// Inverse of 1 - t^d below `precision` (present when d != 0).
  std::optional<NovikovSeries> unit_inverse;
  Rational precision;
  /// Total homology of (S^1 x S^2 summand) tensor (S^1 x S^2 with d = 0), a
  /// witness of the Kunneth step: zero whenever the summand is acyclic.
  std::size_t kunneth_witness = 0;
};

inline constexpr int kVanishingPrecision = 12;

VanishingCertificate sphere_vanishing(std::int64_t d,
                                      const Rational& precision = Rational(kVanishingPrecision));

/// Checks a certificate by recomputing it.
VerifyReport verify_vanishing(const VanishingCertificate& certificate);

std::string to_string(VanishingCertificate::Verdict verdict);

/// Universally twisted HF+ of 0-surgery on the right-handed trefoil, taken
/// from the known identification: trivial Z in degrees -1/2 + 2i for
/// 0 <= i < tower_length (truncating an infinite tower) and Z[t, t^-1] in
/// degree -3/2. Requires tower_length >= 1.
LaurentHomology trefoil_zero_surgery_module(std::size_t tower_length);

inline constexpr const char* kTrefoilProvenance =
    "HF+ of 0-surgery on the right-handed trefoil with universal twisted coefficients, "
    "as identified by Ozsvath-Szabo (absolutely graded Floer homology); axiomatized, "
    "not computed from a Heegaard diagram";

}  // namespace twisted
