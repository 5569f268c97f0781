#pragma once

#include "twisted/chain_complex.hpp"
#include "twisted/smith.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twisted {

/// Marks a graded module as the first `length` terms of an infinite tower
/// start, start + period, ...
struct TowerFlag {
  Rational start;
  Rational period;
  std::size_t length = 0;
  friend bool operator==(const TowerFlag&, const TowerFlag&) = default;
};

template <class Group>
struct Graded {
  std::map<Rational, Group> by_degree;
  std::optional<TowerFlag> tower;

  const Group* at(const Rational& degree) const {
    auto it = by_degree.find(degree);
    return it == by_degree.end() ? nullptr : &it->second;
  }
};

/// Dimensions over the Novikov field, per degree.
using FieldHomology = Graded<std::size_t>;
using IntegerHomology = Graded<AbelianGroup>;

std::size_t total_dimension(const FieldHomology& h);

/// Degrees carrying a nonzero dimension.
std::map<Rational, std::size_t> support(const FieldHomology& h);

// ---------------------------------------------------------------------------
// Modules over Z[t, t^-1]

struct Summand {
  enum class Kind { Free, TrivialZ, Cyclic };
  Kind kind = Kind::Free;
  /// Free rank for Kind::Free.
  std::size_t rank = 1;
  /// The relation p for Kind::Cyclic and Kind::TrivialZ (Z[t^+-1]/(p)).
  LaurentPoly relation;
  /// Rank of Z[t^+-1]/(p) as an abelian group, when p has unit leading and
  /// trailing coefficients (then it is free of rank deg p over Z).
  std::optional<std::size_t> abelian_rank;

  static Summand free(std::size_t rank);
  static Summand trivial_z();
  static Summand cyclic(LaurentPoly relation, std::optional<std::size_t> abelian_rank = {});
};

/// One elementary operation on a presentation matrix (relations x generators).
struct PresentationStep {
  enum class Kind {
    RowScale,  // row `target` *= factor (a unit)
    RowAdd,    // row `target` += factor * row `source`
    ColAdd,    // column `target` += factor * column `source`
    DropPivot, // remove row `source` and column `target` (entry 1, rest of both cleared)
    DropRow    // remove zero row `target`
  };
  Kind kind;
  Index source = 0;
  Index target = 0;
  LaurentPoly factor;
};

/// Module given by generators and relations over Z[H^1] (rows are relations).
///
/// `classification`, when present, lists the summands; it is certified by
/// `steps`, which carry `presentation` to the diagonal normal form of the
/// summands (see `verify_classification`). When `cycle_condition` is set the
/// module is the subquotient ker(cycle_condition) / im(presentation^T) and no
/// classification is attempted.
struct FinitelyPresentedModule {
  std::size_t group_rank = 1;
  LaurentMatrix presentation;
  std::optional<LaurentMatrix> cycle_condition;
  std::optional<std::vector<Summand>> classification;
  std::vector<PresentationStep> steps;

  bool is_classified() const { return classification.has_value(); }
  bool is_zero() const { return classification && classification->empty(); }

  static FinitelyPresentedModule zero(std::size_t group_rank = 1);
  static FinitelyPresentedModule free(std::size_t rank, std::size_t group_rank = 1);
  static FinitelyPresentedModule trivial_z();
  static FinitelyPresentedModule cyclic(const LaurentPoly& relation);
};

using LaurentHomology = Graded<FinitelyPresentedModule>;

/// Classifies coker(presentation^T) by unit-pivot elimination followed by
/// recognition of single-entry relations. Over more than one variable the
/// module is returned unclassified.
FinitelyPresentedModule classify_presentation(const LaurentMatrix& presentation,
                                              std::size_t group_rank);

/// Replays the recorded steps on the presentation and checks the result is
/// the normal form of the recorded summands.
VerifyReport verify_classification(const FinitelyPresentedModule& module);

/// Classifies Z[t^+-1]/(p) for a single nonzero, non-unit relation.
Summand classify_cyclic(const LaurentPoly& relation);

std::string to_string(const Summand& summand);
std::string to_string(const FinitelyPresentedModule& module);

/// One cancellation: d(source) had unit coefficient `unit` on `target`.
struct Cancellation {
  std::string source;
  std::string target;
  LaurentPoly unit;
};

struct ReducedComplex {
  ChainComplex<LaurentPoly> complex;
  std::vector<Cancellation> log;
};

/// Repeatedly cancels generator pairs joined by a unit entry (Gaussian
/// elimination of the complex). The result is chain homotopy equivalent and
/// has no unit entries.
ReducedComplex cancel_unit_pivots(const ChainComplex<LaurentPoly>& c);

// ---------------------------------------------------------------------------
// Homology

/// dim H_k = dim C_k - rank d_k - rank d_{k+1} over the Novikov field.
/// Throws InvalidComplex if the complex fails verification and
/// InsufficientPrecision if some rank is not determined by the known terms.
FieldHomology homology_field(const ChainComplex<NovikovSeries>& c);

IntegerHomology homology_integer(const ChainComplex<Integer>& c);

LaurentHomology homology_laurent(const ChainComplex<LaurentPoly>& c);

// ---------------------------------------------------------------------------
// Long exact sequence of a cone

/// Rank of the map induced on H_k by a chain map over the Novikov field:
///   rank [[d_k(src), 0], [f_k, d_{k+1}(dst)]] - rank d_k(src) - rank d_{k+1}(dst).
std::size_t induced_rank(const ChainMap<NovikovSeries>& f, const Rational& degree);

struct LesNode {
  std::string label;  // "C", "D" or "Cone"
  Rational degree;
  std::size_t dimension = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool exact = false;
};

/// ... -> H_k(C) -f-> H_k(D) -i-> H_k(Cone) -p-> H_{k-1}(C) -> ...
struct LesReport {
  FieldHomology source;
  FieldHomology target;
  FieldHomology cone;
  std::vector<LesNode> nodes;  // descending degree, C / D / Cone within a degree
  bool exact = true;
  /// (i o f)_*, (p o i)_* and (f[1] o p)_* all vanish.
  bool composites_vanish = true;
};

LesReport les_of_cone(const ChainMap<NovikovSeries>& f);

}  // namespace twisted
