#pragma once

#include "twisted/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace twisted {

struct Generator {
  std::string name;
  Rational degree;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Free chain complex over the ring `Scalar` with rationally graded generators.
///
/// The whole differential is stored as one square matrix: entry (i, j) is the
/// coefficient of generator i in d(generator j). It may only be nonzero when
/// degree(i) = degree(j) - 1; `verify` checks this together with d o d = 0.
/// `group_rank` records the number of group-ring variables for complexes over
/// Z[t_1^+-1, ...] and is 0 otherwise.
template <class Scalar>
class ChainComplex {
 public:
  using value_type = Scalar;

  ChainComplex() = default;
  ChainComplex(std::vector<Generator> generators, Matrix<Scalar> differential,
               std::size_t group_rank = 0)
      : generators_(std::move(generators)),
        differential_(std::move(differential)),
        group_rank_(group_rank) {
    const auto n = static_cast<Index>(generators_.size());
    if (differential_.rows() != n || differential_.cols() != n) {
      throw InvalidComplex("differential must be " + std::to_string(n) + "x" +
                           std::to_string(n));
    }
  }

  /// Complex with zero differential on the given generators.
  static ChainComplex free_module(std::vector<Generator> generators, std::size_t group_rank = 0) {
    const auto n = static_cast<Index>(generators.size());
    return ChainComplex(std::move(generators), zero_matrix<Scalar>(n, n), group_rank);
  }

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Matrix<Scalar>& differential() const { return differential_; }
  std::size_t group_rank() const { return group_rank_; }

  /// Occupied degrees, ascending.
  std::vector<Rational> degrees() const {
    std::set<Rational> seen;
    for (const auto& g : generators_) seen.insert(g.degree);
    return {seen.begin(), seen.end()};
  }

  std::vector<Index> indices_in_degree(const Rational& degree) const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].degree == degree) out.push_back(static_cast<Index>(i));
    }
    return out;
  }

  std::size_t rank_in_degree(const Rational& degree) const {
    return indices_in_degree(degree).size();
  }

  /// d_k : C_k -> C_{k-1}, rows indexed by degree k-1 generators.
  Matrix<Scalar> block(const Rational& degree) const {
    return submatrix(differential_, indices_in_degree(degree - 1), indices_in_degree(degree));
  }

  std::optional<Index> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].name == name) return static_cast<Index>(i);
    }
    return std::nullopt;
  }

 private:
  std::vector<Generator> generators_;
  Matrix<Scalar> differential_;
  std::size_t group_rank_ = 0;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(std::string message) {
    ok = false;
    problems.push_back(std::move(message));
  }
  explicit operator bool() const { return ok; }
};

namespace detail {

inline bool entry_vanishes(const Integer& x) { return x == 0; }
inline bool entry_vanishes(const LaurentPoly& x) { return x.is_zero(); }
// A truncated entry with no known term vanishes as far as can be decided.
inline bool entry_vanishes(const NovikovSeries& x) { return !x.is_known_nonzero(); }

inline std::string entry_string(const Integer& x) { return x.str(); }
inline std::string entry_string(const LaurentPoly& x) { return to_string(x); }
inline std::string entry_string(const NovikovSeries& x) { return to_string(x); }

}  // namespace detail

/// Checks unique names, grading (every nonzero entry lowers degree by one),
/// group-ring ranks, and d o d = 0.
template <class Scalar>
VerifyReport verify(const ChainComplex<Scalar>& c) {
  VerifyReport report;
  const auto& gens = c.generators();
  std::set<std::string> names;
  for (const auto& g : gens) {
    if (!names.insert(g.name).second) report.fail("duplicate generator name '" + g.name + "'");
  }
  const auto& d = c.differential();
  for (Index j = 0; j < d.cols(); ++j) {
    for (Index i = 0; i < d.rows(); ++i) {
      if (detail::entry_vanishes(d(i, j))) continue;
      if (gens[i].degree != gens[j].degree - 1) {
        report.fail("entry " + gens[j].name + " -> " + gens[i].name + " does not lower degree by 1");
      }
      if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
        if (d(i, j).rank() != 0 && d(i, j).rank() != c.group_rank()) {
          report.fail("entry " + gens[j].name + " -> " + gens[i].name + " has group ring rank " +
                      std::to_string(d(i, j).rank()));
        }
      }
    }
  }
  if (!report.ok) return report;
  const Matrix<Scalar> square = d * d;
  for (Index j = 0; j < square.cols(); ++j) {
    for (Index i = 0; i < square.rows(); ++i) {
      if (!detail::entry_vanishes(square(i, j))) {
        report.fail("d^2 " + gens[j].name + " -> " + gens[i].name + " = " +
                    detail::entry_string(square(i, j)));
      }
    }
  }
  return report;
}

/// Degree-preserving map between complexes; entry (i, j) is the coefficient
/// of target generator i in f(source generator j).
template <class Scalar>
struct ChainMap {
  ChainComplex<Scalar> source;
  ChainComplex<Scalar> target;
  Matrix<Scalar> matrix;
};

/// True iff f is degree preserving and f d = d f.
template <class Scalar>
VerifyReport verify(const ChainMap<Scalar>& f) {
  VerifyReport report;
  const auto& src = f.source.generators();
  const auto& dst = f.target.generators();
  if (f.matrix.rows() != Index(dst.size()) || f.matrix.cols() != Index(src.size())) {
    report.fail("chain map matrix has the wrong shape");
    return report;
  }
  for (Index j = 0; j < f.matrix.cols(); ++j) {
    for (Index i = 0; i < f.matrix.rows(); ++i) {
      if (!detail::entry_vanishes(f.matrix(i, j)) && dst[i].degree != src[j].degree) {
        report.fail("map entry " + src[j].name + " -> " + dst[i].name + " changes degree");
      }
    }
  }
  const Matrix<Scalar> defect =
      f.matrix * f.source.differential() - f.target.differential() * f.matrix;
  for (Index j = 0; j < defect.cols(); ++j) {
    for (Index i = 0; i < defect.rows(); ++i) {
      if (!detail::entry_vanishes(defect(i, j))) {
        report.fail("f d - d f nonzero at " + src[j].name + " -> " + dst[i].name);
      }
    }
  }
  return report;
}

/// Sign (-1)^floor(degree). Degrees within a complex differ by integers, so
/// this alternates along the differential for half-integral gradings too.
inline int koszul_sign(const Rational& degree) {
  return floor(degree) % 2 == 0 ? 1 : -1;
}

/// Tensor product with d(x (x) y) = dx (x) y + (-1)^floor(|x|) x (x) dy.
/// Generator x (x) y sits at index i * |D| + j and has degree |x| + |y|.
template <class Scalar>
ChainComplex<Scalar> tensor(const ChainComplex<Scalar>& c, const ChainComplex<Scalar>& d) {
  const auto n = static_cast<Index>(c.size());
  const auto m = static_cast<Index>(d.size());
  std::vector<Generator> gens;
  gens.reserve(std::size_t(n * m));
  for (const auto& x : c.generators()) {
    for (const auto& y : d.generators()) gens.push_back({x.name + "⊗" + y.name, x.degree + y.degree});
  }
  Matrix<Scalar> diff = zero_matrix<Scalar>(n * m, n * m);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < m; ++y) {
      const Index col = x * m + y;
      for (Index x2 = 0; x2 < n; ++x2) {
        if (detail::entry_vanishes(c.differential()(x2, x))) continue;
        diff(x2 * m + y, col) += c.differential()(x2, x);
      }
      const Scalar sign(koszul_sign(c.generators()[std::size_t(x)].degree));
      for (Index y2 = 0; y2 < m; ++y2) {
        if (detail::entry_vanishes(d.differential()(y2, y))) continue;
        diff(x * m + y2, col) += sign * d.differential()(y2, y);
      }
    }
  }
  return ChainComplex<Scalar>(std::move(gens), std::move(diff),
                              std::max(c.group_rank(), d.group_rank()));
}

/// C[1] with differential -d: the complex the cone projects onto.
template <class Scalar>
ChainComplex<Scalar> suspension(const ChainComplex<Scalar>& c) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.degree += 1;
  return ChainComplex<Scalar>(std::move(gens), Matrix<Scalar>(-c.differential()), c.group_rank());
}

/// Cone(f) = C[1] + D with d(x, y) = (-dx, f x + dy). Source generators come
/// first and are renamed "C:<name>", target generators "D:<name>".
/// Throws NotChainMap if f d != d f.
template <class Scalar>
ChainComplex<Scalar> mapping_cone(const ChainMap<Scalar>& f) {
  if (auto report = verify(f); !report) {
    throw NotChainMap(report.problems.front());
  }
  const auto n = static_cast<Index>(f.source.size());
  const auto m = static_cast<Index>(f.target.size());
  std::vector<Generator> gens;
  for (const auto& g : f.source.generators()) gens.push_back({"C:" + g.name, g.degree + 1});
  for (const auto& g : f.target.generators()) gens.push_back({"D:" + g.name, g.degree});
  Matrix<Scalar> diff = zero_matrix<Scalar>(n + m, n + m);
  diff.topLeftCorner(n, n) = -f.source.differential();
  diff.bottomLeftCorner(m, n) = f.matrix;
  diff.bottomRightCorner(m, m) = f.target.differential();
  return ChainComplex<Scalar>(std::move(gens), std::move(diff),
                              std::max(f.source.group_rank(), f.target.group_rank()));
}

/// Inclusion D -> Cone(f).
template <class Scalar>
ChainMap<Scalar> cone_inclusion(const ChainMap<Scalar>& f, const ChainComplex<Scalar>& cone) {
  const auto n = static_cast<Index>(f.source.size());
  const auto m = static_cast<Index>(f.target.size());
  Matrix<Scalar> map = zero_matrix<Scalar>(n + m, m);
  for (Index i = 0; i < m; ++i) map(n + i, i) = Scalar(1);
  return {f.target, cone, std::move(map)};
}

/// Projection Cone(f) -> C[1] (with differential -d).
template <class Scalar>
ChainMap<Scalar> cone_projection(const ChainMap<Scalar>& f, const ChainComplex<Scalar>& cone) {
  const auto n = static_cast<Index>(f.source.size());
  const auto m = static_cast<Index>(f.target.size());
  Matrix<Scalar> map = zero_matrix<Scalar>(n, n + m);
  for (Index i = 0; i < n; ++i) map(i, i) = Scalar(1);
  return {cone, suspension(f.source), std::move(map)};
}

template <class Scalar>
ChainMap<Scalar> compose(const ChainMap<Scalar>& g, const ChainMap<Scalar>& f) {
  return {f.source, g.target, g.matrix * f.matrix};
}

}  // namespace twisted
