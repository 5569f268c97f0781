#pragma once

#include "twisted/floer_models.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace twisted {

/// Integer 2x2 matrix [[a, b], [c, d]] of determinant 1. Arithmetic is
/// overflow-checked (std::overflow_error).
struct SL2Matrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws NotUnimodular unless ad - bc = 1.
  static SL2Matrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static SL2Matrix identity() { return {}; }

  std::int64_t trace() const;
  SL2Matrix inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n);
SL2Matrix power(const SL2Matrix& m, std::int64_t exponent);
std::string to_string(const SL2Matrix& m);

/// Right-handed Dehn twists along the two standard nonseparating curves.
inline const SL2Matrix kTwistA{1, 1, 0, 1};
inline const SL2Matrix kTwistB{1, 0, -1, 1};

/// Word over {A, B}; its value is the left-to-right product of the twists.
struct TwistWord {
  std::string letters;

  /// Throws std::invalid_argument on letters outside {A, B}.
  static TwistWord parse(std::string letters);
  SL2Matrix product() const;
  std::size_t size() const { return letters.size(); }
};

SL2Matrix twist_matrix(char letter);

/// Positive word whose product is exactly m. Euclidean reduction of the first
/// column writes m in T_A^+-1, T_B^+-1; negative letters are then rewritten
/// with T_A^-1 = T_B (T_A T_B)^5 and T_B^-1 = (T_A T_B)^5 T_A. Not minimal.
TwistWord factor_positive_twists(const SL2Matrix& m);

/// T_A T_B = [[0, 1], [-1, 1]], the order-6 monodromy of 0-surgery on the
/// right-handed trefoil, used as the end of every surgery chain.
SL2Matrix reference_monodromy();

/// H_1 of the mapping torus: Z + coker(M - I).
struct WangHomology {
  std::size_t rank = 0;  // free rank, base circle included
  std::vector<Integer> torsion;
};

WangHomology wang_homology(const SL2Matrix& m);

/// The class omega, through its value on the fiber. Auxiliary evaluations on
/// the remaining H_1 generators are carried along but never used.
struct OmegaClassSpec {
  std::int64_t fiber_pairing = 0;
  std::vector<Rational> auxiliary;
};

inline constexpr const char* kTriangleInference =
    "zero vertex in the surgery exact triangle => cobordism map is an isomorphism";

struct SurgeryStep {
  std::size_t index = 0;
  char letter = 'A';
  SL2Matrix before;
  SL2Matrix after;
  int handle_framing = -1;
  std::int64_t sphere_pairing = 0;
  /// eta_i can be isotoped off the surgery knot K_i, so omega(F) is unchanged.
  bool eta_disjoint_from_knot = true;
  VanishingCertificate vanishing;
  std::string inference = kTriangleInference;
};

struct TerminalRecord {
  std::size_t tower_length = 0;
  std::int64_t fiber_pairing = 0;
  /// Module description per degree, as in the universally twisted input.
  std::map<Rational, std::string> input;
  std::map<Rational, UcssEntry> ucss;
};

struct Conclusion {
  std::string module = "Lambda";
  Rational degree;
  std::size_t dimension = 0;
  /// Supported in a single Spin^c structure (Lambda is a field), torsion by
  /// conjugation symmetry.
  bool torsion_spinc_support = false;
};

/// Replay of the surgery argument: a chain of torus bundles from Y to
/// 0-surgery on the trefoil, one right-handed twist per step, each step an
/// isomorphism because the 0-surgered vertex contains a nonseparating sphere
/// pairing to d, and a terminal universal-coefficients computation.
struct SurgeryCertificate {
  SL2Matrix monodromy;
  OmegaClassSpec omega;
  TwistWord word;
  std::vector<SurgeryStep> steps;
  TerminalRecord terminal;
  Conclusion conclusion;
};

inline constexpr std::size_t kDefaultTowerLength = 3;

/// Throws FiberPairingZero when omega(F) = 0.
SurgeryCertificate build_certificate(const SL2Matrix& monodromy, const OmegaClassSpec& omega,
                                     std::size_t tower_length = kDefaultTowerLength);

/// Recomputes everything in the certificate; diagnostics name the failing part.
VerifyReport verify_certificate(const SurgeryCertificate& certificate);

}  // namespace twisted
