#include "doctest.h"
#include "oracles.hpp"

using namespace twisted;

namespace {

LaurentPoly uni(std::vector<std::pair<std::int64_t, Integer>> terms) { return LaurentPoly::univariate(terms); }
const Rational kPrecision(100);

LaurentHomology single(const Rational& degree, FinitelyPresentedModule m) {
  LaurentHomology h;
  h.by_degree.emplace(degree, std::move(m));
  return h;
}

}  // namespace

TEST_SUITE("coefficient_change") {

TEST_CASE("base change of the S1xS2 complex") {
  const auto c = s1xs2_universal().complex;
  const auto twisted = base_change_omega(c, OmegaHom::univariate(Rational(3)));
  CHECK(twisted.differential()(1, 0) == NovikovSeries(1) - NovikovSeries::monomial(Rational(1), Rational(3)));

  const auto trivial = base_change_trivial(c);
  CHECK(trivial.differential()(1, 0) == 0);
  CHECK(is_zero_matrix(trivial.differential()));

  const auto same = base_change_universal(c);
  CHECK(same.differential()(1, 0) == c.differential()(1, 0));

  CHECK_THROWS_AS(base_change_omega(c, OmegaHom{{Rational(1), Rational(2)}}), RankMismatch);
  CHECK(std::holds_alternative<ChainComplex<Integer>>(base_change(c, CoefficientSystem::trivial())));
}

TEST_CASE("trivial base change is augmentation, i.e. omega = 0 evaluation") {
  oracle::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::pair<std::int64_t, Integer>> terms;
    for (int k = rng.uniform(0, 4); k > 0; --k) terms.push_back({rng.uniform(-3, 3), Integer(rng.nonzero(5))});
    const auto p = uni(terms);
    CHECK(NovikovSeries(Rational(augment(p))) == to_novikov(p, OmegaHom::univariate(Rational(0))));
  }
}

TEST_CASE("Tor of the trivial module") {
  for (int d : {5, -2, 1, -1}) {
    const auto r = tor_trivial(OmegaHom::univariate(Rational(d)), kPrecision);
    CHECK(r.tor0 == 0);
    CHECK(r.tor1 == 0);
    REQUIRE(r.inverse);
    CHECK(agree_below(r.map * *r.inverse, NovikovSeries(1)));
  }
  const auto zero = tor_trivial(OmegaHom::univariate(Rational(0)), kPrecision);
  CHECK(zero.tor0 == 1);
  CHECK(zero.tor1 == 1);
  CHECK_FALSE(zero.inverse);
}

TEST_CASE("module change") {
  const OmegaHom one = OmegaHom::univariate(Rational(1));
  CHECK(module_change(FinitelyPresentedModule::free(1), one, kPrecision) == ChangeOfRings{1, 0});
  CHECK(module_change(FinitelyPresentedModule::trivial_z(), one, kPrecision) == ChangeOfRings{0, 0});
  CHECK(module_change(FinitelyPresentedModule::cyclic(uni({{0, 1}, {3, -1}})), one, kPrecision) ==
        ChangeOfRings{0, 0});
  CHECK(module_change(FinitelyPresentedModule::cyclic(uni({{0, 1}, {3, -1}})),
                      OmegaHom::univariate(Rational(0)), kPrecision) == ChangeOfRings{1, 1});
  FinitelyPresentedModule raw;
  raw.presentation = LaurentMatrix(0, 1);
  CHECK_THROWS_AS(module_change(raw, one, kPrecision), Unclassified);
}

TEST_CASE("universal coefficients") {
  const auto trefoil = ucss(trefoil_zero_surgery_module(3), OmegaHom::univariate(Rational(1)), kPrecision);
  CHECK(oracle::nonzero(trefoil.homology.by_degree) == std::map<Rational, std::size_t>{{Rational(-3, 2), 1}});

  const auto free = ucss(single(0, FinitelyPresentedModule::free(1)), OmegaHom::univariate(Rational(4)), kPrecision);
  CHECK(oracle::nonzero(free.homology.by_degree) == std::map<Rational, std::size_t>{{0, 1}});

  LaurentHomology both = single(0, FinitelyPresentedModule::trivial_z());
  both.by_degree.emplace(1, FinitelyPresentedModule::trivial_z());
  CHECK(total_dimension(ucss(both, OmegaHom::univariate(Rational(2)), kPrecision).homology) == 0);

  // With d = 0 each trivial Z contributes tensor and Tor one degree up.
  const auto flat = ucss(both, OmegaHom::univariate(Rational(0)), kPrecision);
  CHECK(oracle::nonzero(flat.homology.by_degree) ==
        std::map<Rational, std::size_t>{{0, 1}, {1, 2}, {2, 1}});
  for (const auto& [k, e] : flat.entries) CHECK(e.dimension == e.here.tensor + e.tor_from_below);

  CHECK_THROWS_AS(ucss(both, OmegaHom{{Rational(1), Rational(1)}}, kPrecision), RankMismatch);
}

TEST_CASE("ucss with trivial coefficients") {
  const auto h = ucss_trivial(trefoil_zero_surgery_module(1));
  CHECK(to_string(h.by_degree.at(Rational(-3, 2))) == "Z");
  CHECK(to_string(h.by_degree.at(Rational(-1, 2))) == "Z");
  // Tor_1(Z, Z) over Z[t, t^-1] is Z and lands one degree up.
  CHECK(to_string(h.by_degree.at(Rational(1, 2))) == "Z");
}

TEST_CASE("trefoil answer is independent of the tower length") {
  for (int d : {1, 2, -3}) {
    std::optional<std::map<Rational, std::size_t>> first;
    for (std::size_t n : {1, 2, 5}) {
      const auto r = ucss(trefoil_zero_surgery_module(n), OmegaHom::univariate(Rational(d)), kPrecision);
      const auto support = oracle::nonzero(r.homology.by_degree);
      CHECK(support == std::map<Rational, std::size_t>{{Rational(-3, 2), 1}});
      if (first) CHECK(*first == support);
      first = support;
    }
  }
}

}  // TEST_SUITE
