#include "twisted/torus_bundle.hpp"

#include "twisted/smith.hpp"

#include <stdexcept>

namespace twisted {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("SL(2,Z) entry overflow");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("SL(2,Z) entry overflow");
  return out;
}

std::int64_t dot(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  return checked_add(checked_mul(x1, y1), checked_mul(x2, y2));
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

SL2Matrix SL2Matrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (checked_add(checked_mul(a, d), -checked_mul(b, c)) != 1) {
    throw NotUnimodular("determinant of " + to_string(SL2Matrix{a, b, c, d}) + " is not 1");
  }
  return {a, b, c, d};
}

std::int64_t SL2Matrix::trace() const { return checked_add(a, d); }

SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n) {
  return {dot(m.a, n.a, m.b, n.c), dot(m.a, n.b, m.b, n.d), dot(m.c, n.a, m.d, n.c),
          dot(m.c, n.b, m.d, n.d)};
}

SL2Matrix power(const SL2Matrix& m, std::int64_t exponent) {
  SL2Matrix base = exponent < 0 ? m.inverse() : m;
  std::int64_t e = magnitude(exponent);
  SL2Matrix out;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

std::string to_string(const SL2Matrix& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
         "," + std::to_string(m.d) + "]]";
}

SL2Matrix twist_matrix(char letter) {
  switch (letter) {
    case 'A':
      return kTwistA;
    case 'B':
      return kTwistB;
    default:
      throw std::invalid_argument(std::string("not a twist letter: '") + letter + "'");
  }
}

TwistWord TwistWord::parse(std::string letters) {
  for (char ch : letters) twist_matrix(ch);
  return TwistWord{std::move(letters)};
}

SL2Matrix TwistWord::product() const {
  SL2Matrix out;
  for (char ch : letters) out = out * twist_matrix(ch);
  return out;
}

TwistWord factor_positive_twists(const SL2Matrix& m) {
  struct Power {
    char letter;
    std::int64_t exponent;
  };
  // Left multiplications applied to m, in order.
  std::vector<Power> applied;
  SL2Matrix r = m;
  auto apply = [&](char letter, std::int64_t k) {
    if (k == 0) return;
    r = power(twist_matrix(letter), k) * r;
    applied.push_back({letter, k});
  };
  while (r.c != 0) {
    if (r.a == 0) {
      apply('A', r.c);  // c = +-1 here, so a becomes c^2 = 1
    } else if (magnitude(r.c) >= magnitude(r.a)) {
      apply('B', r.c / r.a);
    } else {
      apply('A', -(r.a / r.c));
    }
  }
  // r = [[s, b], [0, s]] with s = +-1, i.e. s * T_A^{s b}; -I = (T_A T_B)^3.
  std::vector<Power> tail;
  if (r.a == -1) tail.push_back({'I', 1});
  tail.push_back({'A', r.a * r.b});

  static const std::string kInverseA = "B" + std::string("ABABABABAB");
  static const std::string kInverseB = std::string("ABABABABAB") + "A";
  std::string letters;
  auto emit = [&](char letter, std::int64_t k) {
    if (letter == 'I') {
      letters += "ABABAB";
      return;
    }
    const std::string& inverse = letter == 'A' ? kInverseA : kInverseB;
    for (std::int64_t i = 0; i < magnitude(k); ++i) {
      if (k > 0) {
        letters += letter;
      } else {
        letters += inverse;
      }
    }
  };
  // m = G_1^-1 ... G_n^-1 r.
  for (const auto& p : applied) emit(p.letter, -p.exponent);
  for (const auto& p : tail) emit(p.letter, p.exponent);
  return TwistWord{std::move(letters)};
}

SL2Matrix reference_monodromy() { return kTwistA * kTwistB; }

WangHomology wang_homology(const SL2Matrix& m) {
  IntegerMatrix shifted(2, 2);
  shifted << Integer(m.a - 1), Integer(m.b), Integer(m.c), Integer(m.d - 1);
  const AbelianGroup coker = cokernel(shifted);
  return {1 + coker.free_rank, coker.torsion};
}

namespace {

TerminalRecord terminal_record(std::int64_t d, std::size_t tower_length) {
  const LaurentHomology module = trefoil_zero_surgery_module(tower_length);
  const UcssResult result =
      ucss(module, OmegaHom::univariate(Rational(d)), Rational(kVanishingPrecision));
  TerminalRecord out;
  out.tower_length = tower_length;
  out.fiber_pairing = d;
  for (const auto& [k, m] : module.by_degree) out.input[k] = to_string(m);
  out.ucss = result.entries;
  return out;
}

}  // namespace

SurgeryCertificate build_certificate(const SL2Matrix& monodromy, const OmegaClassSpec& omega,
                                     std::size_t tower_length) {
  if (omega.fiber_pairing == 0) {
    throw FiberPairingZero("hypothesis omega(F) != 0 violated: fiber pairing is 0");
  }
  const std::int64_t d = omega.fiber_pairing;
  SurgeryCertificate cert;
  cert.monodromy = SL2Matrix::make(monodromy.a, monodromy.b, monodromy.c, monodromy.d);
  cert.omega = omega;
  cert.word = factor_positive_twists(monodromy.inverse() * reference_monodromy());

  const VanishingCertificate vanishing = sphere_vanishing(d);
  SL2Matrix current = monodromy;
  for (std::size_t i = 0; i < cert.word.size(); ++i) {
    SurgeryStep step;
    step.index = i;
    step.letter = cert.word.letters[i];
    step.before = current;
    current = current * twist_matrix(step.letter);
    step.after = current;
    step.sphere_pairing = d;
    step.vanishing = vanishing;
    cert.steps.push_back(std::move(step));
  }

  cert.terminal = terminal_record(d, tower_length);
  std::map<Rational, std::size_t> nonzero;
  for (const auto& [k, entry] : cert.terminal.ucss) {
    if (entry.dimension != 0) nonzero.emplace(k, entry.dimension);
  }
  if (nonzero.size() != 1 || nonzero.begin()->second != 1) {
    throw std::logic_error("terminal computation is not Lambda in a single degree");
  }
  cert.conclusion.degree = nonzero.begin()->first;
  cert.conclusion.dimension = 1;
  cert.conclusion.torsion_spinc_support = true;
  return cert;
}

VerifyReport verify_certificate(const SurgeryCertificate& cert) {
  VerifyReport report;
  const SL2Matrix& m = cert.monodromy;
  if (m.a * m.d - m.b * m.c != 1) report.fail("monodromy: determinant is not 1");

  const std::int64_t d = cert.omega.fiber_pairing;
  if (d == 0) report.fail("omega: fiber pairing is 0, hypothesis omega(F) != 0 violated");

  try {
    TwistWord::parse(cert.word.letters);
    if (!(m * cert.word.product() == reference_monodromy())) {
      report.fail("word: monodromy times word product is " +
                  to_string(m * cert.word.product()) + ", expected " +
                  to_string(reference_monodromy()));
    }
  } catch (const std::exception& e) {
    report.fail(std::string("word: ") + e.what());
  }

  if (cert.steps.size() != cert.word.size()) {
    report.fail("steps: " + std::to_string(cert.steps.size()) + " steps for a word of length " +
                std::to_string(cert.word.size()));
  }
  SL2Matrix current = m;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (step.index != i) report.fail(where + "index out of order");
    if (i >= cert.word.size()) {
      report.fail(where + "beyond the end of the word");
    } else if (step.letter != cert.word.letters[i]) {
      report.fail(where + "letter differs from the word");
    }
    if (!(step.before == current)) report.fail(where + "monodromy before does not match replay");
    try {
      current = current * twist_matrix(step.letter);
    } catch (const std::exception& e) {
      report.fail(where + e.what());
    }
    if (!(step.after == current)) report.fail(where + "monodromy after does not match replay");
    if (step.handle_framing != -1) report.fail(where + "2-handle framing must be -1");
    if (step.sphere_pairing != d || step.vanishing.pairing != d) {
      report.fail(where + "sphere pairing " + std::to_string(step.sphere_pairing) +
                  " differs from omega(F) = " + std::to_string(d));
    }
    if (step.sphere_pairing == 0) report.fail(where + "sphere pairing is 0");
    if (!step.eta_disjoint_from_knot) report.fail(where + "eta not disjoint from the knot");
    if (step.vanishing.verdict != VanishingCertificate::Verdict::Vanishes) {
      report.fail(where + "vanishing verdict is " + to_string(step.vanishing.verdict));
    }
    for (const auto& problem : verify_vanishing(step.vanishing).problems) {
      report.fail(where + problem);
    }
    if (step.inference != kTriangleInference) report.fail(where + "unexpected inference rule");
  }

  if (cert.terminal.fiber_pairing != d) report.fail("terminal: fiber pairing differs from omega");
  if (cert.terminal.tower_length < 1) {
    report.fail("terminal: tower length must be at least 1");
  } else if (d != 0) {
    const TerminalRecord fresh = terminal_record(d, cert.terminal.tower_length);
    if (fresh.input != cert.terminal.input) report.fail("terminal: input module differs");
    bool same = fresh.ucss.size() == cert.terminal.ucss.size();
    for (const auto& [k, entry] : fresh.ucss) {
      auto it = cert.terminal.ucss.find(k);
      same = same && it != cert.terminal.ucss.end() && it->second.here == entry.here &&
             it->second.tor_from_below == entry.tor_from_below &&
             it->second.dimension == entry.dimension;
    }
    if (!same) report.fail("terminal: universal coefficients table differs from recomputation");

    std::map<Rational, std::size_t> nonzero;
    for (const auto& [k, entry] : fresh.ucss) {
      if (entry.dimension != 0) nonzero.emplace(k, entry.dimension);
    }
    const auto& c = cert.conclusion;
    const bool matches = nonzero.size() == 1 && nonzero.begin()->first == c.degree &&
                         nonzero.begin()->second == c.dimension && c.dimension == 1 &&
                         c.module == "Lambda";
    if (!matches) report.fail("conclusion: does not match the terminal computation");
    if (!c.torsion_spinc_support) report.fail("conclusion: torsion Spin^c support flag missing");
  }
  return report;
}

}  // namespace twisted
