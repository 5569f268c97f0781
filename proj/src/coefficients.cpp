#include "twisted/coefficients.hpp"

#include <set>

namespace twisted {

ChainComplex<LaurentPoly> base_change_universal(const ChainComplex<LaurentPoly>& c) { return c; }

ChainComplex<Integer> base_change_trivial(const ChainComplex<LaurentPoly>& c) {
  return ChainComplex<Integer>(
      c.generators(),
      map_entries<Integer>(c.differential(), [](const LaurentPoly& x) { return augment(x); }));
}

ChainComplex<NovikovSeries> base_change_omega(const ChainComplex<LaurentPoly>& c,
                                              const OmegaHom& omega) {
  if (omega.rank() != c.group_rank()) {
    throw RankMismatch("omega has " + std::to_string(omega.rank()) +
                       " values but the complex is over a rank " +
                       std::to_string(c.group_rank()) + " group ring");
  }
  return ChainComplex<NovikovSeries>(
      c.generators(), map_entries<NovikovSeries>(c.differential(), [&](const LaurentPoly& x) {
        return to_novikov(x, omega);
      }));
}

AnyComplex base_change(const ChainComplex<LaurentPoly>& c, const CoefficientSystem& system) {
  return std::visit(
      [&](const auto& s) -> AnyComplex {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CoefficientSystem::Universal>) {
          return base_change_universal(c);
        } else if constexpr (std::is_same_v<S, CoefficientSystem::TrivialZ>) {
          return base_change_trivial(c);
        } else {
          return base_change_omega(c, s);
        }
      },
      system.variant);
}

TorResult tor_trivial(const OmegaHom& omega, const Rational& precision) {
  if (omega.rank() != 1) throw RankMismatch("tor_trivial needs a rank 1 omega");
  const LaurentPoly one_minus_t = LaurentPoly::univariate({{0, 1}, {1, -1}});
  const ChainComplex<LaurentPoly> resolution(
      {{"e1", Rational(1)}, {"e0", Rational(0)}},
      LaurentMatrix{{LaurentPoly::zero(1), LaurentPoly::zero(1)}, {one_minus_t, LaurentPoly::zero(1)}},
      1);
  const auto twisted_resolution = base_change_omega(resolution, omega);
  const FieldHomology h = homology_field(twisted_resolution);

  TorResult out;
  out.tor0 = *h.at(Rational(0));
  out.tor1 = *h.at(Rational(1));
  out.map = twisted_resolution.differential()(1, 0);
  if (!out.map.is_exact_zero()) out.inverse = inverse(out.map, precision);
  return out;
}

ChangeOfRings module_change(const FinitelyPresentedModule& module, const OmegaHom& omega,
                            const Rational& precision) {
  if (!module.classification) throw Unclassified("module has no classification");
  if (module.group_rank != 1 || omega.rank() != 1) {
    throw RankMismatch("change of rings is implemented over Z[t, t^-1] only");
  }
  ChangeOfRings out;
  for (const auto& s : *module.classification) {
    switch (s.kind) {
      case Summand::Kind::Free:
        out.tensor += s.rank;
        break;
      case Summand::Kind::TrivialZ: {
        const TorResult tor = tor_trivial(omega, precision);
        out.tensor += tor.tor0;
        out.tor1 += tor.tor1;
        break;
      }
      case Summand::Kind::Cyclic:
        if (to_novikov(s.relation, omega).is_exact_zero()) {
          out.tensor += 1;
          out.tor1 += 1;
        }
        break;
    }
  }
  return out;
}

UcssResult ucss(const LaurentHomology& h, const OmegaHom& omega, const Rational& precision) {
  if (omega.rank() != 1) throw RankMismatch("ucss is implemented over Z[t, t^-1] only");
  std::map<Rational, ChangeOfRings> local;
  for (const auto& [k, module] : h.by_degree) {
    if (module.group_rank != 1) throw RankMismatch("ucss is implemented over Z[t, t^-1] only");
    local[k] = module_change(module, omega, precision);
  }
  std::set<Rational> degrees;
  for (const auto& [k, change] : local) {
    degrees.insert(k);
    degrees.insert(k + 1);
  }
  UcssResult out;
  for (const auto& k : degrees) {
    UcssEntry entry;
    if (auto it = local.find(k); it != local.end()) entry.here = it->second;
    if (auto it = local.find(k - 1); it != local.end()) entry.tor_from_below = it->second.tor1;
    entry.dimension = entry.here.tensor + entry.tor_from_below;
    out.homology.by_degree[k] = entry.dimension;
    out.entries[k] = entry;
  }
  return out;
}

IntegerHomology ucss_trivial(const LaurentHomology& h) {
  // (tensor, tor1) of each summand against the trivial module Z.
  std::map<Rational, std::pair<AbelianGroup, AbelianGroup>> local;
  for (const auto& [k, module] : h.by_degree) {
    if (!module.classification) throw Unclassified("module has no classification");
    auto& [tensor, tor] = local[k];
    for (const auto& s : *module.classification) {
      if (s.kind == Summand::Kind::Free) {
        tensor.free_rank += s.rank;
        continue;
      }
      // Z[t^+-1]/(p) (x) Z = Z/aug(p); Tor_1 = Z if aug(p) = 0.
      Integer a = augment(s.relation);
      if (a < 0) a = -a;
      if (a == 0) {
        tensor.free_rank += 1;
        tor.free_rank += 1;
      } else if (a != 1) {
        tensor.torsion.push_back(a);
      }
    }
  }
  std::set<Rational> degrees;
  for (const auto& [k, groups] : local) {
    degrees.insert(k);
    degrees.insert(k + 1);
  }
  auto combine = [](AbelianGroup a, const AbelianGroup& b) {
    a.free_rank += b.free_rank;
    a.torsion.insert(a.torsion.end(), b.torsion.begin(), b.torsion.end());
    // Re-normalize torsion to invariant factors.
    IntegerMatrix diagonal = IntegerMatrix::Zero(Index(a.torsion.size()), Index(a.torsion.size()));
    for (std::size_t i = 0; i < a.torsion.size(); ++i) diagonal(Index(i), Index(i)) = a.torsion[i];
    AbelianGroup normalized = cokernel(diagonal);
    normalized.free_rank += a.free_rank;
    return normalized;
  };
  IntegerHomology out;
  for (const auto& k : degrees) {
    AbelianGroup group;
    if (auto it = local.find(k); it != local.end()) group = combine(group, it->second.first);
    if (auto it = local.find(k - 1); it != local.end()) group = combine(group, it->second.second);
    out.by_degree[k] = group;
  }
  return out;
}

}  // namespace twisted
