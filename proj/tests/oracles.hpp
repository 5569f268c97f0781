// Independent reference computations and random generators shared by the
// unit tests and the acceptance checks. Nothing here calls the elimination
// code under test.
#pragma once

#include "twisted/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace oracle {

using namespace twisted;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  int nonzero(int bound) {
    int v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Series

using Coefficients = std::map<Rational, Rational>;

inline Coefficients coefficients(const NovikovSeries& a) {
  Coefficients out;
  for (const auto& t : a.terms()) out[t.exponent] = t.coefficient;
  return out;
}

/// Exponents in [-5, 5] with denominator 6, small integer coefficients.
inline NovikovSeries random_series(Rng& rng, int max_terms = 6) {
  std::vector<NovikovSeries::Term> terms;
  const int n = rng.uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    terms.push_back({Rational(rng.uniform(-30, 30), 6), Rational(rng.nonzero(5))});
  }
  return NovikovSeries::make(terms);
}

/// Schoolbook convolution on coefficient maps.
inline Coefficients convolve(const Coefficients& a, const Coefficients& b) {
  Coefficients out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// 1 + t^d + t^2d + ... restricted to exponents below `precision`, d > 0.
inline Coefficients geometric(const Rational& d, const Rational& precision) {
  Coefficients out;
  for (Rational e = 0; e < precision; e += d) out[e] = 1;
  return out;
}

inline Coefficients below(const Coefficients& a, const Rational& cutoff) {
  Coefficients out;
  for (const auto& [e, c] : a) {
    if (e < cutoff) out[e] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer matrices

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Determinant by cofactor expansion along the first row.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  if (n == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][j] * laplace_det(minor);
    out += (j % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
                    std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    current.push_back(i);
    subsets(n, k, i + 1, current, out);
    current.pop_back();
  }
}

/// Invariant factors d_k / d_{k-1}, with d_k the gcd of all k x k minors.
inline std::vector<Integer> determinantal_invariant_factors(const IntegerMatrix& m) {
  const std::size_t rows = std::size_t(m.rows());
  const std::size_t cols = std::size_t(m.cols());
  std::vector<Integer> divisors{Integer(1)};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> scratch;
    subsets(rows, k, 0, scratch, rs);
    subsets(cols, k, 0, scratch, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m(Index(r[i]), Index(c[j]));
        }
        g = gcd(g, abs_int(laplace_det(minor)));
      }
    }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

inline IntegerMatrix random_integer_matrix(Rng& rng, int max_dim = 6, int bound = 20) {
  const int r = rng.uniform(1, max_dim);
  const int c = rng.uniform(1, max_dim);
  IntegerMatrix m(r, c);
  const bool sparse = rng.coin();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      m(i, j) = (sparse && rng.uniform(0, 2) != 0) ? 0 : rng.uniform(-bound, bound);
    }
  }
  // Some low-rank cases: copy a combination of earlier rows.
  if (r > 1 && rng.uniform(0, 3) == 0) {
    const int a = rng.uniform(-2, 2);
    for (int j = 0; j < c; ++j) m(r - 1, j) = Integer(a) * m(0, j);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Complexes over Lambda with known homology

/// Small nonzero series: a signed monomial or binomial with integer exponents.
inline NovikovSeries random_unitish(Rng& rng) {
  NovikovSeries s = NovikovSeries::monomial(Rational(rng.nonzero(3)), Rational(rng.uniform(-2, 3)));
  if (rng.coin()) s += NovikovSeries::monomial(Rational(rng.nonzero(3)), Rational(rng.uniform(-2, 3)));
  if (!s.is_known_nonzero()) s = NovikovSeries(1);
  return s;
}

struct KnownComplex {
  ChainComplex<NovikovSeries> complex;
  std::map<Rational, std::size_t> homology;  // every occupied degree
  std::map<Rational, std::size_t> ranks;     // rank of d out of each degree
};

/// Elementary change of basis inside one degree: d -> E d E^-1 with
/// E = I + s e_ij. Returns false if i, j are not in the same degree.
inline void conjugate(NovikovMatrix& d, Index i, Index j, const NovikovSeries& s) {
  for (Index c = 0; c < d.cols(); ++c) d(i, c) += s * d(j, c);
  for (Index r = 0; r < d.rows(); ++r) d(r, j) -= d(r, i) * s;
}

struct StandardShape {
  std::vector<Generator> generators;
  NovikovMatrix d;
  std::map<Rational, std::size_t> homology;
  std::map<Rational, std::size_t> ranks;
  /// Generators carrying homology, and (source, target) pairs of d.
  std::vector<Index> cycles;
  std::vector<std::pair<Index, Index>> pairs;
};

/// Direct sum of pieces Lambda (homology) and Lambda -u-> Lambda.
inline StandardShape random_standard(Rng& rng, int max_generators, const std::string& prefix) {
  StandardShape out;
  const Rational base = rng.coin() ? Rational(0) : Rational(-1, 2);
  const int span = rng.uniform(0, 9) == 0 ? 1 : rng.uniform(2, 4);
  int budget = rng.uniform(1, max_generators);
  auto degree = [&](int k) { return base + Rational(k); };
  auto add = [&](int k) {
    out.generators.push_back({prefix + std::to_string(out.generators.size()), degree(k)});
    return Index(out.generators.size() - 1);
  };
  std::vector<std::pair<int, NovikovSeries>> edges;
  for (int k = 0; k < span; ++k) out.homology[degree(k)] = 0, out.ranks[degree(k)] = 0;
  while (budget > 0) {
    if (budget >= 2 && span > 1 && rng.uniform(0, 3) != 0) {
      const int k = rng.uniform(1, span - 1);
      const Index s = add(k);
      const Index t = add(k - 1);
      out.pairs.push_back({s, t});
      out.ranks[degree(k)] += 1;
      budget -= 2;
    } else {
      const int k = rng.uniform(0, span - 1);
      out.cycles.push_back(add(k));
      out.homology[degree(k)] += 1;
      budget -= 1;
    }
  }
  const Index n = Index(out.generators.size());
  out.d = zero_matrix<NovikovSeries>(n, n);
  for (const auto& [s, t] : out.pairs) out.d(t, s) = random_unitish(rng);
  return out;
}

inline std::vector<std::pair<Index, Index>> same_degree_pairs(const std::vector<Generator>& gens) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < Index(gens.size()); ++i) {
    for (Index j = 0; j < Index(gens.size()); ++j) {
      if (i != j && gens[std::size_t(i)].degree == gens[std::size_t(j)].degree) out.push_back({i, j});
    }
  }
  return out;
}

inline KnownComplex random_known_complex(Rng& rng, int max_generators = 8) {
  StandardShape s = random_standard(rng, max_generators, "g");
  const auto pairs = same_degree_pairs(s.generators);
  if (!pairs.empty()) {
    const int ops = rng.uniform(0, 8);
    for (int k = 0; k < ops; ++k) {
      const auto& [i, j] = pairs[std::size_t(rng.uniform(0, int(pairs.size()) - 1))];
      conjugate(s.d, i, j, random_unitish(rng));
    }
  }
  return {ChainComplex<NovikovSeries>(s.generators, s.d), s.homology, s.ranks};
}

/// A chain map C -> D with known induced rank in every degree: a diagonal
/// chain map between standard complexes, plus a null-homotopic part
/// d h + h d, then independent changes of basis on both sides.
struct KnownChainMap {
  ChainMap<NovikovSeries> map;
  std::map<Rational, std::size_t> induced_rank;
};

inline KnownChainMap random_known_chain_map(Rng& rng) {
  StandardShape c = random_standard(rng, 5, "c");
  StandardShape extra = random_standard(rng, 3, "e");
  // D = C' + extra, where C' is a copy of C with fresh names.
  std::vector<Generator> dgens;
  for (const auto& g : c.generators) dgens.push_back({"d" + g.name, g.degree});
  for (const auto& g : extra.generators) dgens.push_back(g);
  const Index nc = Index(c.generators.size());
  const Index nd = Index(dgens.size());
  NovikovMatrix dd = zero_matrix<NovikovSeries>(nd, nd);
  dd.topLeftCorner(nc, nc) = c.d;
  dd.bottomRightCorner(nd - nc, nd - nc) = extra.d;

  NovikovMatrix f = zero_matrix<NovikovSeries>(nd, nc);
  std::map<Rational, std::size_t> induced;
  for (Index h : c.cycles) {
    if (rng.uniform(0, 2) != 0) {
      f(h, h) = random_unitish(rng);
      induced[c.generators[std::size_t(h)].degree] += 1;
    }
  }
  for (const auto& [s, t] : c.pairs) {
    if (rng.coin()) f(s, s) = NovikovSeries(1), f(t, t) = NovikovSeries(1);
  }
  // Null-homotopic part: h raises degree by one.
  NovikovMatrix h = zero_matrix<NovikovSeries>(nd, nc);
  for (Index i = 0; i < nd; ++i) {
    for (Index j = 0; j < nc; ++j) {
      if (dgens[std::size_t(i)].degree == c.generators[std::size_t(j)].degree + 1 && rng.uniform(0, 2) == 0) {
        h(i, j) = random_unitish(rng);
      }
    }
  }
  f += dd * h + h * c.d;

  NovikovMatrix dc = c.d;
  const auto cpairs = same_degree_pairs(c.generators);
  const auto dpairs = same_degree_pairs(dgens);
  for (int k = 0; k < 4; ++k) {
    if (!cpairs.empty()) {
      const auto& [i, j] = cpairs[std::size_t(rng.uniform(0, int(cpairs.size()) - 1))];
      const NovikovSeries s = random_unitish(rng);
      conjugate(dc, i, j, s);
      for (Index r = 0; r < f.rows(); ++r) f(r, j) -= f(r, i) * s;
    }
    if (!dpairs.empty()) {
      const auto& [i, j] = dpairs[std::size_t(rng.uniform(0, int(dpairs.size()) - 1))];
      const NovikovSeries s = random_unitish(rng);
      conjugate(dd, i, j, s);
      for (Index col = 0; col < f.cols(); ++col) f(i, col) += s * f(j, col);
    }
  }
  ChainMap<NovikovSeries> map{ChainComplex<NovikovSeries>(c.generators, dc),
                              ChainComplex<NovikovSeries>(dgens, dd), f};
  for (const auto& g : c.generators) induced.try_emplace(g.degree, 0);
  return {std::move(map), std::move(induced)};
}

inline std::map<Rational, std::size_t> convolution(const std::map<Rational, std::size_t>& a,
                                                   const std::map<Rational, std::size_t>& b) {
  std::map<Rational, std::size_t> out;
  for (const auto& [ka, da] : a) {
    for (const auto& [kb, db] : b) {
      if (da * db != 0) out[ka + kb] += da * db;
    }
  }
  return out;
}

inline std::map<Rational, std::size_t> nonzero(const std::map<Rational, std::size_t>& a) {
  std::map<Rational, std::size_t> out;
  for (const auto& [k, v] : a) {
    if (v != 0) out[k] = v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SL(2, Z)

/// Random product of T_A^+-1, T_B^+-1 with every entry bounded by `bound`.
inline SL2Matrix random_sl2(Rng& rng, std::int64_t bound = 50) {
  static const SL2Matrix gens[4] = {kTwistA, kTwistA.inverse(), kTwistB, kTwistB.inverse()};
  SL2Matrix m;
  const int length = rng.uniform(0, 40);
  for (int i = 0; i < length; ++i) {
    const SL2Matrix next = m * gens[rng.uniform(0, 3)];
    const auto big = [&](std::int64_t x) { return x > bound || x < -bound; };
    if (big(next.a) || big(next.b) || big(next.c) || big(next.d)) continue;
    m = next;
  }
  return m;
}

/// Hand-written 2x2 product, independent of the library's operator*.
inline std::array<std::int64_t, 4> multiply(const std::array<std::int64_t, 4>& m,
                                            const std::array<std::int64_t, 4>& n) {
  return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2],
          m[2] * n[1] + m[3] * n[3]};
}

inline std::array<std::int64_t, 4> replay(const std::string& word) {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};
  for (char ch : word) m = multiply(m, ch == 'A' ? std::array<std::int64_t, 4>{1, 1, 0, 1}
                                                 : std::array<std::int64_t, 4>{1, 0, -1, 1});
  return m;
}

}  // namespace oracle
