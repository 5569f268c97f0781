#include "twisted/smith.hpp"

#include <optional>
#include <string>

namespace twisted {

namespace {

Integer magnitude(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct Reducer {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  }
  // row_dst += factor * row_src
  void add_row(Index src, Index dst, const Integer& factor) {
    a.row(dst) += factor * a.row(src);
    u.row(dst) += factor * u.row(src);
  }
  void add_col(Index src, Index dst, const Integer& factor) {
    a.col(dst) += factor * a.col(src);
    v.col(dst) += factor * v.col(src);
  }

  std::optional<std::pair<Index, Index>> smallest_entry(Index t) const {
    std::optional<std::pair<Index, Index>> best;
    for (Index j = t; j < a.cols(); ++j) {
      for (Index i = t; i < a.rows(); ++i) {
        if (a(i, j) == 0) continue;
        if (!best || magnitude(a(i, j)) < magnitude(a(best->first, best->second))) best = {i, j};
      }
    }
    return best;
  }

  // Clears row t and column t beyond the pivot; false if remainders appeared.
  bool clear_cross(Index t) {
    bool clean = true;
    for (Index i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      add_row(t, i, Integer(-(a(i, t) / a(t, t))));
      if (a(i, t) != 0) clean = false;
    }
    for (Index j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      add_col(t, j, Integer(-(a(t, j) / a(t, t))));
      if (a(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<Index> row_not_divisible(Index t) const {
    for (Index i = t + 1; i < a.rows(); ++i) {
      for (Index j = t + 1; j < a.cols(); ++j) {
        if (a(i, j) % a(t, t) != 0) return i;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    if (D(i, i) != 0) out.push_back(D(i, i));
  }
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer r{m, IntegerMatrix::Identity(m.rows(), m.rows()),
            IntegerMatrix::Identity(m.cols(), m.cols())};
  const Index steps = std::min(m.rows(), m.cols());
  for (Index t = 0; t < steps; ++t) {
    while (true) {
      const auto pivot = r.smallest_entry(t);
      if (!pivot) return {std::move(r.u), std::move(r.a), std::move(r.v)};
      r.swap_rows(t, pivot->first);
      r.swap_cols(t, pivot->second);
      if (!r.clear_cross(t)) continue;
      if (const auto bad = r.row_not_divisible(t)) {
        r.add_row(*bad, t, Integer(1));
        continue;
      }
      break;
    }
    if (r.a(t, t) < 0) {
      r.a.row(t) *= Integer(-1);
      r.u.row(t) *= Integer(-1);
    }
  }
  return {std::move(r.u), std::move(r.a), std::move(r.v)};
}

Integer determinant(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const Index n = a.rows();
  Integer previous = 1;
  Integer sign = 1;
  for (Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

AbelianGroup cokernel(const IntegerMatrix& m) {
  const auto factors = smith_normal_form(m).invariant_factors();
  AbelianGroup group;
  group.free_rank = static_cast<std::size_t>(m.rows()) - factors.size();
  for (const auto& f : factors) {
    if (f != 1) group.torsion.push_back(f);
  }
  return group;
}

std::string to_string(const AbelianGroup& group) {
  if (group.is_zero()) return "0";
  std::string out;
  if (group.free_rank > 0) {
    out = group.free_rank == 1 ? "Z" : "Z^" + std::to_string(group.free_rank);
  }
  for (const auto& t : group.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

}  // namespace twisted
