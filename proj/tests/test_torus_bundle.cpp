#include "doctest.h"
#include "oracles.hpp"

using namespace twisted;

namespace {

std::array<std::int64_t, 4> entries(const SL2Matrix& m) { return {m.a, m.b, m.c, m.d}; }

}  // namespace

TEST_SUITE("torus_bundle_certifier") {

TEST_CASE("SL(2,Z) products") {
  CHECK(kTwistA * kTwistA.inverse() == SL2Matrix::identity());
  CHECK(kTwistA * kTwistB == SL2Matrix{0, 1, -1, 1});
  const SL2Matrix r = reference_monodromy();
  for (int k = 1; k <= 5; ++k) CHECK_FALSE(power(r, k) == SL2Matrix::identity());
  CHECK(power(r, 6) == SL2Matrix::identity());
  CHECK(r.trace() == 1);
  CHECK_THROWS_AS(SL2Matrix::make(1, 1, 1, 1), NotUnimodular);
  CHECK_THROWS_AS(power(SL2Matrix{2, 1, 1, 1}, 200), std::overflow_error);
}

TEST_CASE("Wang homology") {
  auto w = wang_homology(SL2Matrix::identity());
  CHECK(w.rank == 3);
  CHECK(w.torsion.empty());
  w = wang_homology(kTwistA);
  CHECK(w.rank == 2);
  CHECK(w.torsion.empty());
  w = wang_homology(SL2Matrix{2, 1, 1, 1});
  CHECK(w.rank == 1);
  CHECK(w.torsion.empty());
  // -I: coker(-2I) = (Z/2)^2.
  w = wang_homology(SL2Matrix{-1, 0, 0, -1});
  CHECK(w.rank == 1);
  CHECK(w.torsion == std::vector<Integer>{2, 2});
  oracle::Rng rng(47);
  for (int i = 0; i < 100; ++i) CHECK(wang_homology(oracle::random_sl2(rng)).rank >= 1);
}

TEST_CASE("factorization examples") {
  CHECK(factor_positive_twists(SL2Matrix::identity()).letters.empty());
  CHECK(factor_positive_twists(kTwistA).letters == "A");
  const auto w = factor_positive_twists(kTwistB.inverse());
  CHECK(w.size() == 11);
  CHECK(oracle::replay(w.letters) == entries(kTwistB.inverse()));
  CHECK(factor_positive_twists(SL2Matrix::identity().inverse() * reference_monodromy()).letters == "AB");
}

TEST_CASE("factorization round trip on random words") {
  oracle::Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    const SL2Matrix m = oracle::random_sl2(rng);
    const TwistWord w = factor_positive_twists(m);
    CHECK(w.letters.find_first_not_of("AB") == std::string::npos);
    CHECK(oracle::replay(w.letters) == entries(m));
    CHECK(w.product() == m);
  }
}

TEST_CASE("order six of the reference monodromy and its inverse") {
  const SL2Matrix r = reference_monodromy();
  const SL2Matrix inv = power(r, 5);
  CHECK(inv * r == SL2Matrix::identity());
  CHECK(power(inv, 6) == SL2Matrix::identity());
  CHECK(inv.trace() == 1);
  CHECK(factor_positive_twists(inv).product() == inv);
}

TEST_CASE("certificate for the reference bundle is terminal only") {
  const auto c = build_certificate(reference_monodromy(), {1, {}});
  CHECK(c.word.letters.empty());
  CHECK(c.steps.empty());
  CHECK(c.conclusion.degree == Rational(-3, 2));
  CHECK(verify_certificate(c));
}

TEST_CASE("certificate for the 3-torus") {
  const auto c = build_certificate(SL2Matrix::identity(), {1, {}});
  CHECK(c.word.letters == "AB");
  REQUIRE(c.steps.size() == 2);
  for (const auto& s : c.steps) {
    CHECK(s.vanishing.verdict == VanishingCertificate::Verdict::Vanishes);
    CHECK(s.handle_framing == -1);
  }
  CHECK(c.steps[0].after == kTwistA);
  CHECK(c.steps[1].after == reference_monodromy());
  CHECK(c.conclusion.module == "Lambda");
  CHECK(c.conclusion.dimension == 1);
  CHECK(c.conclusion.torsion_spinc_support);
  CHECK(verify_certificate(c));
}

TEST_CASE("certificates verify for many bundles") {
  oracle::Rng rng(59);
  for (int i = 0; i < 40; ++i) {
    const SL2Matrix m = oracle::random_sl2(rng, 8);
    const std::int64_t d = rng.nonzero(4);
    const auto c = build_certificate(m, {d, {Rational(rng.uniform(-3, 3))}}, std::size_t(rng.uniform(1, 4)));
    const auto report = verify_certificate(c);
    CHECK(report);
    CHECK(c.conclusion.dimension == 1);
  }
  const auto c = build_certificate(SL2Matrix{2, 1, 1, 1}, {3, {}});
  CHECK(verify_certificate(c));
}

TEST_CASE("hypothesis omega(F) != 0") {
  CHECK_THROWS_AS(build_certificate(SL2Matrix::identity(), {0, {}}), FiberPairingZero);
}

TEST_CASE("tampering is detected") {
  const auto good = build_certificate(SL2Matrix{2, 1, 1, 1}, {3, {}});

  auto zeroed = good;
  zeroed.steps[1].sphere_pairing = 0;
  zeroed.steps[1].vanishing = sphere_vanishing(0);
  const auto r1 = verify_certificate(zeroed);
  CHECK_FALSE(r1);
  bool at_step = false;
  for (const auto& p : r1.problems) at_step = at_step || p.rfind("step 1:", 0) == 0;
  CHECK(at_step);

  auto shortened = good;
  shortened.word.letters.pop_back();
  const auto r2 = verify_certificate(shortened);
  CHECK_FALSE(r2);
  CHECK(r2.problems.front().rfind("word:", 0) == 0);

  auto wrong_conclusion = good;
  wrong_conclusion.conclusion.degree = Rational(-1, 2);
  CHECK_FALSE(verify_certificate(wrong_conclusion));

  auto wrong_table = good;
  wrong_table.terminal.ucss.begin()->second.dimension += 1;
  CHECK_FALSE(verify_certificate(wrong_table));

  auto bad_letter = good;
  bad_letter.word.letters[0] = 'C';
  CHECK_FALSE(verify_certificate(bad_letter));
}

}  // TEST_SUITE
