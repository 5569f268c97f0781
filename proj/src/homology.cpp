#include "twisted/homology.hpp"

#include <set>

namespace twisted {

std::size_t total_dimension(const FieldHomology& h) {
  std::size_t total = 0;
  for (const auto& [degree, dim] : h.by_degree) total += dim;
  return total;
}

std::map<Rational, std::size_t> support(const FieldHomology& h) {
  std::map<Rational, std::size_t> out;
  for (const auto& [degree, dim] : h.by_degree) {
    if (dim != 0) out.emplace(degree, dim);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summands and presentations

Summand Summand::free(std::size_t rank) {
  Summand s;
  s.kind = Kind::Free;
  s.rank = rank;
  return s;
}

Summand Summand::trivial_z() {
  Summand s;
  s.kind = Kind::TrivialZ;
  s.relation = LaurentPoly::univariate({{0, 1}, {1, -1}});
  s.abelian_rank = 1;
  return s;
}

Summand Summand::cyclic(LaurentPoly relation, std::optional<std::size_t> abelian_rank) {
  Summand s;
  s.kind = Kind::Cyclic;
  s.relation = std::move(relation);
  s.abelian_rank = abelian_rank;
  return s;
}

FinitelyPresentedModule FinitelyPresentedModule::zero(std::size_t group_rank) {
  FinitelyPresentedModule m;
  m.group_rank = group_rank;
  m.presentation = LaurentMatrix(0, 0);
  m.classification = std::vector<Summand>{};
  return m;
}

FinitelyPresentedModule FinitelyPresentedModule::free(std::size_t rank, std::size_t group_rank) {
  FinitelyPresentedModule m;
  m.group_rank = group_rank;
  m.presentation = LaurentMatrix(0, Index(rank));
  m.classification = std::vector<Summand>{};
  if (rank > 0) m.classification->push_back(Summand::free(rank));
  return m;
}

FinitelyPresentedModule FinitelyPresentedModule::trivial_z() {
  FinitelyPresentedModule m;
  m.presentation = LaurentMatrix(1, 1);
  m.presentation(0, 0) = Summand::trivial_z().relation;
  m.classification = std::vector<Summand>{Summand::trivial_z()};
  return m;
}

FinitelyPresentedModule FinitelyPresentedModule::cyclic(const LaurentPoly& relation) {
  return classify_presentation(LaurentMatrix::Constant(1, 1, relation), 1);
}

namespace {

LaurentMatrix drop(const LaurentMatrix& m, std::optional<Index> row, std::optional<Index> col) {
  std::vector<Index> rows;
  std::vector<Index> cols;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i != row) rows.push_back(i);
  }
  for (Index j = 0; j < m.cols(); ++j) {
    if (j != col) cols.push_back(j);
  }
  return submatrix(m, rows, cols);
}

void apply_step(LaurentMatrix& w, const PresentationStep& step) {
  using Kind = PresentationStep::Kind;
  switch (step.kind) {
    case Kind::RowScale:
      for (Index j = 0; j < w.cols(); ++j) w(step.target, j) = step.factor * w(step.target, j);
      break;
    case Kind::RowAdd:
      for (Index j = 0; j < w.cols(); ++j) w(step.target, j) += step.factor * w(step.source, j);
      break;
    case Kind::ColAdd:
      for (Index i = 0; i < w.rows(); ++i) w(i, step.target) += step.factor * w(i, step.source);
      break;
    case Kind::DropPivot:
      w = drop(w, step.source, step.target);
      break;
    case Kind::DropRow:
      w = drop(w, step.target, std::nullopt);
      break;
  }
}

bool row_is_zero(const LaurentMatrix& w, Index r) {
  for (Index j = 0; j < w.cols(); ++j) {
    if (!w(r, j).is_zero()) return false;
  }
  return true;
}

// Summands read off a matrix in which every row has exactly one nonzero
// entry and no column has two; nullopt if the matrix is not of that shape.
std::optional<std::vector<Summand>> read_normal_form(const LaurentMatrix& w) {
  std::vector<std::optional<LaurentPoly>> column_relation(std::size_t(w.cols()));
  for (Index i = 0; i < w.rows(); ++i) {
    std::optional<Index> hit;
    for (Index j = 0; j < w.cols(); ++j) {
      if (w(i, j).is_zero()) continue;
      if (hit) return std::nullopt;
      hit = j;
    }
    if (!hit || column_relation[std::size_t(*hit)]) return std::nullopt;
    column_relation[std::size_t(*hit)] = w(i, *hit);
  }
  std::size_t free_rank = 0;
  std::vector<Summand> torsion;
  for (const auto& relation : column_relation) {
    if (!relation) {
      ++free_rank;
    } else {
      torsion.push_back(classify_cyclic(*relation));
    }
  }
  std::vector<Summand> out;
  if (free_rank > 0) out.push_back(Summand::free(free_rank));
  out.insert(out.end(), torsion.begin(), torsion.end());
  return out;
}

std::optional<std::pair<Index, Index>> find_unit(const LaurentMatrix& w) {
  for (Index j = 0; j < w.cols(); ++j) {
    for (Index i = 0; i < w.rows(); ++i) {
      if (is_unit(w(i, j))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

Summand classify_cyclic(const LaurentPoly& relation) {
  const auto& terms = relation.terms();
  if (relation.rank() > 1 || terms.empty()) return Summand::cyclic(relation);
  const auto exponent = [](const LaurentPoly::Exponent& e) { return e.empty() ? 0 : e[0]; };
  const std::int64_t low = exponent(terms.begin()->first);
  const std::int64_t high = exponent(terms.rbegin()->first);
  const Integer& trailing = terms.begin()->second;
  const Integer& leading = terms.rbegin()->second;
  const auto n = static_cast<Index>(high - low);
  const bool unit_ends = (leading == 1 || leading == -1) && (trailing == 1 || trailing == -1);
  if (n == 0 || !unit_ends) return Summand::cyclic(relation);

  // Z[t^+-1]/(p) = Z[t]/(q) with q monic of degree n: free abelian of rank n,
  // t acting by the companion matrix of q.
  IntegerMatrix companion = IntegerMatrix::Zero(n, n);
  for (Index i = 1; i < n; ++i) companion(i, i - 1) = 1;
  for (const auto& [e, c] : terms) {
    const Index power = exponent(e) - low;
    if (power < n) companion(power, n - 1) = -(c * leading);
  }
  // t acts trivially iff coker(companion - 1) keeps full rank n.
  const AbelianGroup coinvariants = cokernel(companion - IntegerMatrix::Identity(n, n));
  if (coinvariants.free_rank == std::size_t(n) && n == 1) {
    Summand s = Summand::trivial_z();
    s.relation = relation;
    return s;
  }
  return Summand::cyclic(relation, std::size_t(n));
}

FinitelyPresentedModule classify_presentation(const LaurentMatrix& presentation,
                                              std::size_t group_rank) {
  FinitelyPresentedModule module;
  module.group_rank = group_rank;
  module.presentation = presentation;
  if (group_rank > 1) return module;

  using Kind = PresentationStep::Kind;
  LaurentMatrix w = presentation;
  auto record = [&](PresentationStep step) {
    apply_step(w, step);
    module.steps.push_back(std::move(step));
  };
  while (const auto pivot = find_unit(w)) {
    const auto [r, g] = *pivot;
    if (!(w(r, g) == LaurentPoly(1))) record({Kind::RowScale, 0, r, unit_inverse(w(r, g))});
    for (Index i = 0; i < w.rows(); ++i) {
      if (i != r && !w(i, g).is_zero()) record({Kind::RowAdd, r, i, -w(i, g)});
    }
    for (Index j = 0; j < w.cols(); ++j) {
      if (j != g && !w(r, j).is_zero()) record({Kind::ColAdd, g, j, -w(r, j)});
    }
    record({Kind::DropPivot, r, g, LaurentPoly()});
  }
  for (Index i = w.rows() - 1; i >= 0; --i) {
    if (row_is_zero(w, i)) record({Kind::DropRow, 0, i, LaurentPoly()});
  }
  module.classification = read_normal_form(w);
  return module;
}

VerifyReport verify_classification(const FinitelyPresentedModule& module) {
  VerifyReport report;
  if (!module.classification) {
    report.fail("module is not classified");
    return report;
  }
  LaurentMatrix w = module.presentation;
  for (const auto& step : module.steps) {
    const bool in_range = step.target >= 0 && step.source >= 0 &&
                          step.target < std::max(w.rows(), w.cols()) &&
                          step.source < std::max(w.rows(), w.cols());
    if (!in_range) {
      report.fail("step index out of range");
      return report;
    }
    if (step.kind == PresentationStep::Kind::RowScale && !is_unit(step.factor)) {
      report.fail("row scaled by a non-unit " + to_string(step.factor));
    }
    if (step.kind == PresentationStep::Kind::DropPivot) {
      if (!(w(step.source, step.target) == LaurentPoly(1))) report.fail("dropped pivot is not 1");
      for (Index j = 0; j < w.cols(); ++j) {
        if (j != step.target && !w(step.source, j).is_zero()) report.fail("pivot row not cleared");
      }
      for (Index i = 0; i < w.rows(); ++i) {
        if (i != step.source && !w(i, step.target).is_zero()) report.fail("pivot column not cleared");
      }
    }
    if (step.kind == PresentationStep::Kind::DropRow && !row_is_zero(w, step.target)) {
      report.fail("dropped a nonzero relation");
    }
    apply_step(w, step);
  }
  const auto normal = read_normal_form(w);
  if (!normal) {
    report.fail("recorded steps do not reach a diagonal normal form");
    return report;
  }
  const auto& claimed = *module.classification;
  if (normal->size() != claimed.size()) {
    report.fail("summand count differs from the normal form");
    return report;
  }
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    const auto& a = (*normal)[i];
    const auto& b = claimed[i];
    const bool same = a.kind == b.kind &&
                      (a.kind == Summand::Kind::Free ? a.rank == b.rank : a.relation == b.relation);
    if (!same) report.fail("summand " + std::to_string(i) + " differs from the normal form");
  }
  return report;
}

std::string to_string(const Summand& summand) {
  switch (summand.kind) {
    case Summand::Kind::Free:
      return summand.rank == 1 ? "Z[t,t^-1]" : "Z[t,t^-1]^" + std::to_string(summand.rank);
    case Summand::Kind::TrivialZ:
      return "Z (trivial action)";
    case Summand::Kind::Cyclic:
      return "Z[t,t^-1]/(" + to_string(summand.relation) + ")";
  }
  return {};
}

std::string to_string(const FinitelyPresentedModule& module) {
  if (!module.classification) {
    std::string shape = std::to_string(module.presentation.rows()) + "x" +
                        std::to_string(module.presentation.cols());
    return module.cycle_condition ? "unclassified (subquotient, presentation " + shape + ")"
                                  : "unclassified (presentation " + shape + ")";
  }
  if (module.classification->empty()) return "0";
  std::string out;
  for (const auto& s : *module.classification) {
    if (!out.empty()) out += " + ";
    out += to_string(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unit-pivot cancellation

ReducedComplex cancel_unit_pivots(const ChainComplex<LaurentPoly>& c) {
  std::vector<Generator> gens = c.generators();
  LaurentMatrix d = c.differential();
  std::vector<Cancellation> log;
  while (true) {
    std::optional<std::pair<Index, Index>> pivot;
    for (Index j = 0; j < d.cols() && !pivot; ++j) {
      for (Index i = 0; i < d.rows(); ++i) {
        if (is_unit(d(i, j))) {
          pivot = {i, j};
          break;
        }
      }
    }
    if (!pivot) break;
    const auto [target, source] = *pivot;
    const LaurentPoly inverse = unit_inverse(d(target, source));
    log.push_back({gens[std::size_t(source)].name, gens[std::size_t(target)].name, d(target, source)});

    // d'(b, a) = d(b, a) - d(b, source) u^-1 d(target, a)
    for (Index a = 0; a < d.cols(); ++a) {
      if (a == source || d(target, a).is_zero()) continue;
      const LaurentPoly scale = inverse * d(target, a);
      for (Index b = 0; b < d.rows(); ++b) {
        if (b == target || d(b, source).is_zero()) continue;
        d(b, a) -= d(b, source) * scale;
      }
    }
    std::vector<Index> keep;
    for (Index i = 0; i < d.rows(); ++i) {
      if (i != source && i != target) keep.push_back(i);
    }
    d = submatrix(d, keep, keep);
    std::vector<Generator> kept;
    for (Index i : keep) kept.push_back(gens[std::size_t(i)]);
    gens = std::move(kept);
  }
  return {ChainComplex<LaurentPoly>(std::move(gens), std::move(d), c.group_rank()), std::move(log)};
}

// ---------------------------------------------------------------------------
// Homology

namespace {

template <class Scalar>
void require_valid(const ChainComplex<Scalar>& c) {
  if (auto report = verify(c); !report) throw InvalidComplex(report.problems.front());
}

}  // namespace

FieldHomology homology_field(const ChainComplex<NovikovSeries>& c) {
  require_valid(c);
  FieldHomology out;
  for (const auto& k : c.degrees()) {
    const std::size_t dim = c.rank_in_degree(k);
    const std::size_t boundary_out = rank(c.block(k));
    const std::size_t boundary_in = rank(c.block(k + 1));
    out.by_degree[k] = dim - boundary_out - boundary_in;
  }
  return out;
}

IntegerHomology homology_integer(const ChainComplex<Integer>& c) {
  require_valid(c);
  IntegerHomology out;
  for (const auto& k : c.degrees()) {
    const std::size_t boundary_out = smith_normal_form(c.block(k)).rank();
    AbelianGroup h = cokernel(c.block(k + 1));
    h.free_rank -= boundary_out;
    out.by_degree[k] = std::move(h);
  }
  return out;
}

LaurentHomology homology_laurent(const ChainComplex<LaurentPoly>& c) {
  require_valid(c);
  const ReducedComplex reduced = cancel_unit_pivots(c);
  const auto& r = reduced.complex;
  const std::size_t group_rank = c.group_rank();
  LaurentHomology out;
  for (const auto& k : c.degrees()) {
    const std::size_t dim = r.rank_in_degree(k);
    if (dim == 0) {
      out.by_degree[k] = FinitelyPresentedModule::zero(group_rank);
      continue;
    }
    const LaurentMatrix outgoing = r.block(k);
    const LaurentMatrix incoming = r.block(k + 1);
    if (is_zero_matrix(outgoing)) {
      out.by_degree[k] = classify_presentation(incoming.transpose(), group_rank);
    } else if (rank(outgoing) == dim) {
      out.by_degree[k] = FinitelyPresentedModule::zero(group_rank);
    } else {
      FinitelyPresentedModule m;
      m.group_rank = group_rank;
      m.presentation = incoming.transpose();
      m.cycle_condition = outgoing;
      out.by_degree[k] = std::move(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Long exact sequence

std::size_t induced_rank(const ChainMap<NovikovSeries>& f, const Rational& degree) {
  const auto src_k = f.source.indices_in_degree(degree);
  const auto src_below = f.source.indices_in_degree(degree - 1);
  const auto dst_k = f.target.indices_in_degree(degree);
  const auto dst_above = f.target.indices_in_degree(degree + 1);

  const NovikovMatrix d_src = f.source.block(degree);
  const NovikovMatrix d_dst = f.target.block(degree + 1);
  const NovikovMatrix f_k = submatrix(f.matrix, dst_k, src_k);

  const auto rows = Index(src_below.size() + dst_k.size());
  const auto cols = Index(src_k.size() + dst_above.size());
  NovikovMatrix stacked = zero_matrix<NovikovSeries>(rows, cols);
  stacked.topLeftCorner(d_src.rows(), d_src.cols()) = d_src;
  stacked.bottomLeftCorner(f_k.rows(), f_k.cols()) = f_k;
  stacked.bottomRightCorner(d_dst.rows(), d_dst.cols()) = d_dst;
  return rank(stacked) - rank(d_src) - rank(d_dst);
}

LesReport les_of_cone(const ChainMap<NovikovSeries>& f) {
  const ChainComplex<NovikovSeries> cone = mapping_cone(f);
  const auto include = cone_inclusion(f, cone);
  const auto project = cone_projection(f, cone);
  const ChainMap<NovikovSeries> shifted_f{suspension(f.source), suspension(f.target), f.matrix};

  LesReport report;
  report.source = homology_field(f.source);
  report.target = homology_field(f.target);
  report.cone = homology_field(cone);

  std::set<Rational> degrees;
  for (const auto& k : f.source.degrees()) {
    degrees.insert(k);
    degrees.insert(k + 1);
  }
  for (const auto& k : f.target.degrees()) degrees.insert(k);

  auto dim = [](const FieldHomology& h, const Rational& k) {
    const auto* d = h.at(k);
    return d ? *d : std::size_t(0);
  };
  const auto compose_i_f = compose(include, f);
  const auto compose_p_i = compose(project, include);
  const auto compose_f_p = compose(shifted_f, project);

  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
    const Rational& k = *it;
    const std::size_t f_k = induced_rank(f, k);
    const std::size_t i_k = induced_rank(include, k);
    const std::size_t p_k = induced_rank(project, k);
    const std::size_t p_above = induced_rank(project, k + 1);  // H_{k+1}(Cone) -> H_k(C)

    LesNode c{"C", k, dim(report.source, k), p_above, f_k, false};
    LesNode d{"D", k, dim(report.target, k), f_k, i_k, false};
    LesNode m{"Cone", k, dim(report.cone, k), i_k, p_k, false};
    for (auto* node : {&c, &d, &m}) {
      node->exact = node->rank_in + node->rank_out == node->dimension;
      report.exact = report.exact && node->exact;
      report.nodes.push_back(*node);
    }
    if (induced_rank(compose_i_f, k) != 0 || induced_rank(compose_p_i, k) != 0 ||
        induced_rank(compose_f_p, k) != 0) {
      report.composites_vanish = false;
    }
  }
  return report;
}

}  // namespace twisted
