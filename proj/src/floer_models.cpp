#include "twisted/floer_models.hpp"

namespace twisted {

ModelComplex<LaurentPoly> s1xs2_universal() {
  LaurentMatrix d = LaurentMatrix::Constant(2, 2, LaurentPoly::zero(1));
  d(1, 0) = LaurentPoly::univariate({{0, 1}, {1, -1}});
  return {ChainComplex<LaurentPoly>({{"x+", Rational(1, 2)}, {"x-", Rational(-1, 2)}}, d, 1),
          "hat complex of S1xS2 with universal twisted coefficients Z[t,t^-1]; gradings +-1/2",
          Flavor::Hat};
}

ModelComplex<NovikovSeries> s1xs2_omega(std::int64_t d, const Rational& c) {
  NovikovMatrix m = zero_matrix<NovikovSeries>(2, 2);
  m(1, 0) = NovikovSeries::monomial(1, c) *
            (NovikovSeries(1) - NovikovSeries::monomial(1, Rational(d)));
  std::string provenance = "hat complex of S1xS2 with omega = " + std::to_string(d) +
                           " PD[mu], twisted by t^" + format_rational(c) + "(1-t^" +
                           std::to_string(d) + ")";
  if (d == 0) provenance += "; gradings +-1/2 assigned by analogy with the universal case";
  return {ChainComplex<NovikovSeries>({{"x+", Rational(1, 2)}, {"x-", Rational(-1, 2)}}, m),
          std::move(provenance), Flavor::Hat};
}

ModelComplex<NovikovSeries> novikov_point() {
  return {ChainComplex<NovikovSeries>::free_module({{"p", Rational(0)}}), "Lambda in degree 0",
          Flavor::Hat};
}

ModelComplex<NovikovSeries> connected_sum_hat(const ModelComplex<NovikovSeries>& a,
                                              const ModelComplex<NovikovSeries>& b) {
  return {tensor(a.complex, b.complex),
          "connected sum (" + a.provenance + ") # (" + b.provenance + ")", Flavor::Hat};
}

VanishingCertificate sphere_vanishing(std::int64_t d, const Rational& precision) {
  VanishingCertificate cert;
  cert.pairing = d;
  cert.precision = precision;
  const auto summand = s1xs2_omega(d);
  cert.summand_homology = homology_field(summand.complex);
  cert.kunneth_witness =
      total_dimension(homology_field(connected_sum_hat(summand, s1xs2_omega(0)).complex));
  if (d != 0) {
    cert.unit_inverse = inverse(summand.complex.differential()(1, 0), precision);
  }
  const bool acyclic = total_dimension(cert.summand_homology) == 0 && cert.kunneth_witness == 0;
  cert.verdict = d != 0 && acyclic ? VanishingCertificate::Verdict::Vanishes
                                   : VanishingCertificate::Verdict::Inconclusive;
  return cert;
}

VerifyReport verify_vanishing(const VanishingCertificate& certificate) {
  VerifyReport report;
  const auto fresh = sphere_vanishing(certificate.pairing, certificate.precision);
  if (fresh.verdict != certificate.verdict) report.fail("verdict does not match recomputation");
  if (fresh.summand_homology.by_degree != certificate.summand_homology.by_degree) {
    report.fail("summand homology does not match recomputation");
  }
  if (fresh.kunneth_witness != certificate.kunneth_witness) {
    report.fail("Kunneth witness does not match recomputation");
  }
  if (certificate.pairing != 0) {
    if (!certificate.unit_inverse) {
      report.fail("missing inverse of 1 - t^d");
    } else {
      const auto map = s1xs2_omega(certificate.pairing).complex.differential()(1, 0);
      const auto product = map * *certificate.unit_inverse;
      if (!agree_below(product, NovikovSeries(1), certificate.precision)) {
        report.fail("recorded inverse of 1 - t^d is wrong below the precision");
      }
    }
  }
  return report;
}

std::string to_string(VanishingCertificate::Verdict verdict) {
  return verdict == VanishingCertificate::Verdict::Vanishes ? "vanishes" : "inconclusive";
}

LaurentHomology trefoil_zero_surgery_module(std::size_t tower_length) {
  if (tower_length < 1) throw std::invalid_argument("tower_length must be at least 1");
  LaurentHomology h;
  h.by_degree[Rational(-3, 2)] = FinitelyPresentedModule::free(1);
  for (std::size_t i = 0; i < tower_length; ++i) {
    h.by_degree[Rational(-1, 2) + 2 * Rational(i)] = FinitelyPresentedModule::trivial_z();
  }
  h.tower = TowerFlag{Rational(-1, 2), Rational(2), tower_length};
  return h;
}

}  // namespace twisted
