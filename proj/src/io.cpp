#include "twisted/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace twisted::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void expect_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> allowed;
  for (const char* key : required) {
    allowed.insert(key);
    if (!j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  }
  for (const char* key : optional) allowed.insert(key);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
  }
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::int64_t expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t expect_size(const Json& j, const std::string& where) {
  const std::int64_t v = expect_int(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return std::size_t(v);
}

bool expect_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

std::string integer_string(const Integer& v) { return v.str(); }

}  // namespace

// ---------------------------------------------------------------------------
// Scalars

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const NovikovSeries& a) {
  Json terms = Json::array();
  for (const auto& term : a.terms()) {
    terms.push_back(Json::array({format_rational(term.exponent), format_rational(term.coefficient)}));
  }
  Json out;
  out["terms"] = std::move(terms);
  out["trunc"] = a.trunc() ? Json(format_rational(*a.trunc())) : Json(nullptr);
  return out;
}

Json to_json(const LaurentPoly& a, std::size_t rank) {
  if (a.rank() != 0 && a.rank() != rank) {
    throw RankMismatch("element of rank " + std::to_string(a.rank()) + " in a ring of rank " +
                       std::to_string(rank));
  }
  Json terms = Json::array();
  for (const auto& [exponent, coefficient] : a.terms()) {
    Json e = a.rank() == 0 ? Json(std::vector<std::int64_t>(rank, 0)) : Json(exponent);
    terms.push_back(Json::array({std::move(e), integer_string(coefficient)}));
  }
  Json out;
  out["rank"] = rank;
  out["terms"] = std::move(terms);
  return out;
}

Rational rational_from_json(const Json& j) { return parse_rational(expect_string(j, "rational")); }

Integer integer_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (!is_integral(r)) fail("integer", "expected an integer, got " + format_rational(r));
  return Integer(numerator(r));
}

NovikovSeries novikov_from_json(const Json& j) {
  expect_object(j, "novikov series", {"terms", "trunc"});
  std::vector<NovikovSeries::Term> terms;
  std::optional<Rational> previous;
  for (const auto& t : expect_array(j["terms"], "novikov terms")) {
    if (!t.is_array() || t.size() != 2) fail("novikov term", "expected [exponent, coefficient]");
    NovikovSeries::Term term{rational_from_json(t[0]), rational_from_json(t[1])};
    if (previous && !(*previous < term.exponent)) fail("novikov terms", "exponents must ascend");
    if (term.coefficient == 0) fail("novikov terms", "zero coefficient");
    previous = term.exponent;
    terms.push_back(std::move(term));
  }
  ExtendedRational trunc = kInfinity;
  if (!j["trunc"].is_null()) trunc = rational_from_json(j["trunc"]);
  if (previous && trunc && !(*previous < *trunc)) fail("novikov series", "term at or above trunc");
  return NovikovSeries::make(std::move(terms), trunc);
}

LaurentPoly laurent_from_json(const Json& j, std::size_t rank) {
  expect_object(j, "laurent polynomial", {"rank", "terms"});
  if (expect_size(j["rank"], "laurent rank") != rank) {
    throw RankMismatch("laurent element of rank " + j["rank"].dump() + " in a ring of rank " +
                       std::to_string(rank));
  }
  std::vector<std::pair<LaurentPoly::Exponent, Integer>> terms;
  std::set<LaurentPoly::Exponent> seen;
  for (const auto& t : expect_array(j["terms"], "laurent terms")) {
    if (!t.is_array() || t.size() != 2) fail("laurent term", "expected [exponents, coefficient]");
    LaurentPoly::Exponent e;
    for (const auto& x : expect_array(t[0], "laurent exponent")) e.push_back(expect_int(x, "exponent"));
    if (e.size() != rank) fail("laurent term", "exponent vector of the wrong length");
    if (!seen.insert(e).second) fail("laurent terms", "repeated exponent");
    terms.emplace_back(std::move(e), integer_from_json(t[1]));
  }
  return LaurentPoly::make(rank, terms);
}

Json to_json(const CoefficientSystem& s) {
  Json out;
  if (std::holds_alternative<CoefficientSystem::Universal>(s.variant)) {
    out["variant"] = "universal";
  } else if (std::holds_alternative<CoefficientSystem::TrivialZ>(s.variant)) {
    out["variant"] = "trivial";
  } else {
    out["variant"] = "omega";
    Json values = Json::array();
    for (const auto& v : std::get<OmegaHom>(s.variant).values) values.push_back(format_rational(v));
    out["omega"] = std::move(values);
  }
  return out;
}

CoefficientSystem coefficient_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant")) fail("coefficient system", "missing field \"variant\"");
  const std::string variant = expect_string(j["variant"], "variant");
  if (variant == "universal") {
    expect_object(j, "coefficient system", {"variant"});
    return CoefficientSystem::universal();
  }
  if (variant == "trivial") {
    expect_object(j, "coefficient system", {"variant"});
    return CoefficientSystem::trivial();
  }
  if (variant != "omega") fail("coefficient system", "unknown variant \"" + variant + "\"");
  expect_object(j, "coefficient system", {"variant", "omega"});
  OmegaHom omega;
  for (const auto& v : expect_array(j["omega"], "omega")) omega.values.push_back(rational_from_json(v));
  return CoefficientSystem::omega(std::move(omega));
}

// ---------------------------------------------------------------------------
// Complex files

namespace {

struct RingTag {
  enum class Kind { Integer, Laurent, Novikov } kind;
  std::size_t rank = 0;
};

Json ring_json(const RingTag& tag) {
  Json out;
  switch (tag.kind) {
    case RingTag::Kind::Integer:
      out["tag"] = "integer";
      break;
    case RingTag::Kind::Laurent:
      out["tag"] = "laurent";
      out["rank"] = tag.rank;
      break;
    case RingTag::Kind::Novikov:
      out["tag"] = "novikov";
      break;
  }
  return out;
}

RingTag ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("tag")) fail("ring", "expected {\"tag\": ...}");
  const std::string tag = expect_string(j["tag"], "ring tag");
  if (tag == "integer") {
    expect_object(j, "ring", {"tag"});
    return {RingTag::Kind::Integer};
  }
  if (tag == "novikov") {
    expect_object(j, "ring", {"tag"});
    return {RingTag::Kind::Novikov};
  }
  if (tag == "laurent") {
    expect_object(j, "ring", {"tag", "rank"});
    return {RingTag::Kind::Laurent, expect_size(j["rank"], "ring rank")};
  }
  fail("ring", "unknown tag \"" + tag + "\"");
}

template <class Scalar>
Json value_json(const Scalar& v, std::size_t rank) {
  if constexpr (std::is_same_v<Scalar, Integer>) {
    (void)rank;
    return integer_string(v);
  } else if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
    return to_json(v, rank);
  } else {
    (void)rank;
    return to_json(v);
  }
}

template <class Scalar>
bool omit(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, NovikovSeries>) {
    return v.is_exact_zero();
  } else if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
    return v.is_zero();
  } else {
    return v == 0;
  }
}

template <class Scalar>
Json complex_json(const ChainComplex<Scalar>& c, const RingTag& tag) {
  Json out;
  out["ring"] = ring_json(tag);
  Json gens = Json::array();
  for (const auto& g : c.generators()) {
    Json e;
    e["name"] = g.name;
    e["degree"] = format_rational(g.degree);
    gens.push_back(std::move(e));
  }
  out["generators"] = std::move(gens);
  Json entries = Json::array();
  const auto& d = c.differential();
  for (Index j = 0; j < d.cols(); ++j) {
    for (Index i = 0; i < d.rows(); ++i) {
      if (omit(d(i, j))) continue;
      Json e;
      e["from"] = c.generators()[std::size_t(j)].name;
      e["to"] = c.generators()[std::size_t(i)].name;
      e["value"] = value_json(d(i, j), tag.rank);
      entries.push_back(std::move(e));
    }
  }
  out["differential"] = std::move(entries);
  return out;
}

template <class Scalar>
ChainComplex<Scalar> parse_complex(const Json& j, const RingTag& tag) {
  std::vector<Generator> gens;
  std::map<std::string, Index> index;
  for (const auto& g : expect_array(j["generators"], "generators")) {
    expect_object(g, "generator", {"name", "degree"});
    Generator gen{expect_string(g["name"], "generator name"), rational_from_json(g["degree"])};
    if (!index.emplace(gen.name, Index(gens.size())).second) {
      fail("generators", "duplicate name \"" + gen.name + "\"");
    }
    gens.push_back(std::move(gen));
  }
  const Index n = Index(gens.size());
  Matrix<Scalar> d = zero_matrix<Scalar>(n, n);
  std::set<std::pair<Index, Index>> filled;
  for (const auto& e : expect_array(j["differential"], "differential")) {
    expect_object(e, "differential entry", {"from", "to", "value"});
    const std::string from = expect_string(e["from"], "from");
    const std::string to = expect_string(e["to"], "to");
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end()) fail("differential", "unknown generator \"" + from + "\"");
    if (t == index.end()) fail("differential", "unknown generator \"" + to + "\"");
    if (!filled.emplace(t->second, f->second).second) {
      fail("differential", "repeated entry " + from + " -> " + to);
    }
    if constexpr (std::is_same_v<Scalar, Integer>) {
      d(t->second, f->second) = integer_from_json(e["value"]);
    } else if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
      d(t->second, f->second) = laurent_from_json(e["value"], tag.rank);
    } else {
      d(t->second, f->second) = novikov_from_json(e["value"]);
    }
  }
  if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
    for (Index i = 0; i < n; ++i) {
      for (Index k = 0; k < n; ++k) {
        if (d(i, k).rank() == 0) d(i, k) = LaurentPoly::constant(tag.rank, augment(d(i, k)));
      }
    }
  }
  return ChainComplex<Scalar>(std::move(gens), std::move(d), tag.rank);
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidComplex& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json complex_to_json(const AnyComplex& c, const std::optional<Json>& provenance) {
  Json out = std::visit(
      [](const auto& complex) {
        using Scalar = typename std::decay_t<decltype(complex)>::value_type;
        if constexpr (std::is_same_v<Scalar, Integer>) {
          return complex_json(complex, {RingTag::Kind::Integer});
        } else if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
          return complex_json(complex, {RingTag::Kind::Laurent, complex.group_rank()});
        } else {
          return complex_json(complex, {RingTag::Kind::Novikov});
        }
      },
      c);
  if (provenance) out["provenance"] = *provenance;
  return out;
}

ComplexFile complex_from_json(const Json& j) {
  return guarded([&] {
    expect_object(j, "complex file", {"ring", "generators", "differential"}, {"provenance"});
    const RingTag tag = ring_from_json(j["ring"]);
    ComplexFile out;
    switch (tag.kind) {
      case RingTag::Kind::Integer:
        out.complex = parse_complex<Integer>(j, tag);
        break;
      case RingTag::Kind::Laurent:
        out.complex = parse_complex<LaurentPoly>(j, tag);
        break;
      case RingTag::Kind::Novikov:
        out.complex = parse_complex<NovikovSeries>(j, tag);
        break;
    }
    if (j.contains("provenance")) out.provenance = j["provenance"];
    return out;
  });
}

// ---------------------------------------------------------------------------
// Graded module files

bool is_module_file(const Json& j) { return j.is_object() && j.contains("degrees"); }

Json module_to_json(const LaurentHomology& h, const std::optional<Json>& provenance) {
  std::size_t rank = 1;
  for (const auto& [k, m] : h.by_degree) rank = m.group_rank;
  Json out;
  out["ring"] = ring_json({RingTag::Kind::Laurent, rank});
  Json degrees = Json::array();
  for (const auto& [k, m] : h.by_degree) {
    if (m.cycle_condition) {
      throw std::invalid_argument("module file: degree " + format_rational(k) + " is a subquotient");
    }
    Json rows = Json::array();
    for (Index i = 0; i < m.presentation.rows(); ++i) {
      Json row = Json::array();
      for (Index c = 0; c < m.presentation.cols(); ++c) row.push_back(to_json(m.presentation(i, c), rank));
      rows.push_back(std::move(row));
    }
    Json e;
    e["degree"] = format_rational(k);
    e["generators"] = m.presentation.cols();
    e["relations"] = std::move(rows);
    e["module"] = to_string(m);
    degrees.push_back(std::move(e));
  }
  out["degrees"] = std::move(degrees);
  if (h.tower) {
    Json t;
    t["start"] = format_rational(h.tower->start);
    t["period"] = format_rational(h.tower->period);
    t["length"] = h.tower->length;
    out["tower"] = std::move(t);
  }
  if (provenance) out["provenance"] = *provenance;
  return out;
}

ModuleFile module_from_json(const Json& j) {
  return guarded([&] {
    expect_object(j, "module file", {"ring", "degrees"}, {"tower", "provenance"});
    const RingTag tag = ring_from_json(j["ring"]);
    if (tag.kind != RingTag::Kind::Laurent) fail("module file", "ring must be laurent");
    ModuleFile out;
    for (const auto& e : expect_array(j["degrees"], "degrees")) {
      expect_object(e, "degree entry", {"degree", "generators", "relations", "module"});
      const Rational k = rational_from_json(e["degree"]);
      const Index cols = Index(expect_size(e["generators"], "generators"));
      const auto& rows = expect_array(e["relations"], "relations");
      LaurentMatrix p = zero_matrix<LaurentPoly>(Index(rows.size()), cols);
      for (Index r = 0; r < p.rows(); ++r) {
        const auto& row = expect_array(rows[std::size_t(r)], "relation");
        if (Index(row.size()) != cols) fail("relations", "row of the wrong length");
        for (Index c = 0; c < cols; ++c) p(r, c) = laurent_from_json(row[std::size_t(c)], tag.rank);
      }
      FinitelyPresentedModule m = classify_presentation(p, tag.rank);
      if (to_string(m) != expect_string(e["module"], "module")) {
        fail("degree " + format_rational(k),
             "module \"" + e["module"].get<std::string>() + "\" does not match its relations (" +
                 to_string(m) + ")");
      }
      if (!out.module.by_degree.emplace(k, std::move(m)).second) {
        fail("degrees", "repeated degree " + format_rational(k));
      }
    }
    if (j.contains("tower")) {
      const auto& t = j["tower"];
      expect_object(t, "tower", {"start", "period", "length"});
      out.module.tower = TowerFlag{rational_from_json(t["start"]), rational_from_json(t["period"]),
                                   expect_size(t["length"], "tower length")};
    }
    if (j.contains("provenance")) out.provenance = j["provenance"];
    return out;
  });
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

Json sl2_json(const SL2Matrix& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

SL2Matrix sl2_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2) {
    fail(where, "expected [[a,b],[c,d]]");
  }
  // Not validated here: verify_certificate reports a bad determinant.
  return {expect_int(j[0][0], where), expect_int(j[0][1], where), expect_int(j[1][0], where),
          expect_int(j[1][1], where)};
}

Json field_json(const FieldHomology& h) {
  Json out = Json::array();
  for (const auto& [k, dim] : h.by_degree) {
    Json e;
    e["degree"] = format_rational(k);
    e["dimension"] = dim;
    out.push_back(std::move(e));
  }
  return out;
}

FieldHomology field_from_json(const Json& j) {
  FieldHomology out;
  for (const auto& e : expect_array(j, "field homology")) {
    expect_object(e, "field homology entry", {"degree", "dimension"});
    out.by_degree[rational_from_json(e["degree"])] = expect_size(e["dimension"], "dimension");
  }
  return out;
}

Json vanishing_json(const VanishingCertificate& v) {
  Json out;
  out["pairing"] = v.pairing;
  out["verdict"] = to_string(v.verdict);
  out["summand_homology"] = field_json(v.summand_homology);
  out["unit_inverse"] = v.unit_inverse ? to_json(*v.unit_inverse) : Json(nullptr);
  out["precision"] = format_rational(v.precision);
  out["kunneth_witness"] = v.kunneth_witness;
  return out;
}

VanishingCertificate vanishing_from_json(const Json& j) {
  expect_object(j, "vanishing", {"pairing", "verdict", "summand_homology", "unit_inverse", "precision",
                                 "kunneth_witness"});
  VanishingCertificate v;
  v.pairing = expect_int(j["pairing"], "pairing");
  const std::string verdict = expect_string(j["verdict"], "verdict");
  if (verdict == to_string(VanishingCertificate::Verdict::Vanishes)) {
    v.verdict = VanishingCertificate::Verdict::Vanishes;
  } else if (verdict == to_string(VanishingCertificate::Verdict::Inconclusive)) {
    v.verdict = VanishingCertificate::Verdict::Inconclusive;
  } else {
    fail("verdict", "unknown verdict \"" + verdict + "\"");
  }
  v.summand_homology = field_from_json(j["summand_homology"]);
  if (!j["unit_inverse"].is_null()) v.unit_inverse = novikov_from_json(j["unit_inverse"]);
  v.precision = rational_from_json(j["precision"]);
  v.kunneth_witness = expect_size(j["kunneth_witness"], "kunneth_witness");
  return v;
}

Json ucss_entry_json(const Rational& k, const UcssEntry& e) {
  Json out;
  out["degree"] = format_rational(k);
  out["tensor"] = e.here.tensor;
  out["tor1"] = e.here.tor1;
  out["tor_from_below"] = e.tor_from_below;
  out["dimension"] = e.dimension;
  return out;
}

}  // namespace

Json certificate_to_json(const SurgeryCertificate& c) {
  Json out;
  out["monodromy"] = sl2_json(c.monodromy);
  Json omega;
  omega["fiber_pairing"] = c.omega.fiber_pairing;
  Json aux = Json::array();
  for (const auto& v : c.omega.auxiliary) aux.push_back(format_rational(v));
  omega["auxiliary"] = std::move(aux);
  out["omega"] = std::move(omega);
  out["word"] = c.word.letters;
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json e;
    e["index"] = s.index;
    e["letter"] = std::string(1, s.letter);
    e["monodromy_before"] = sl2_json(s.before);
    e["monodromy_after"] = sl2_json(s.after);
    e["handle_framing"] = s.handle_framing;
    e["sphere_pairing"] = s.sphere_pairing;
    e["eta_disjoint_from_knot"] = s.eta_disjoint_from_knot;
    e["vanishing"] = vanishing_json(s.vanishing);
    e["inference"] = s.inference;
    steps.push_back(std::move(e));
  }
  out["steps"] = std::move(steps);
  Json terminal;
  terminal["tower_length"] = c.terminal.tower_length;
  terminal["fiber_pairing"] = c.terminal.fiber_pairing;
  Json input = Json::array();
  for (const auto& [k, m] : c.terminal.input) {
    Json e;
    e["degree"] = format_rational(k);
    e["module"] = m;
    input.push_back(std::move(e));
  }
  terminal["input"] = std::move(input);
  Json table = Json::array();
  for (const auto& [k, e] : c.terminal.ucss) table.push_back(ucss_entry_json(k, e));
  terminal["ucss"] = std::move(table);
  out["terminal"] = std::move(terminal);
  Json conclusion;
  conclusion["module"] = c.conclusion.module;
  conclusion["degree"] = format_rational(c.conclusion.degree);
  conclusion["dimension"] = c.conclusion.dimension;
  conclusion["torsion_spinc_support"] = c.conclusion.torsion_spinc_support;
  out["conclusion"] = std::move(conclusion);
  return out;
}

SurgeryCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    expect_object(j, "certificate", {"monodromy", "omega", "word", "steps", "terminal", "conclusion"});
    SurgeryCertificate c;
    c.monodromy = sl2_from_json(j["monodromy"], "monodromy");
    expect_object(j["omega"], "omega", {"fiber_pairing"}, {"auxiliary"});
    c.omega.fiber_pairing = expect_int(j["omega"]["fiber_pairing"], "fiber_pairing");
    if (j["omega"].contains("auxiliary")) {
      for (const auto& v : expect_array(j["omega"]["auxiliary"], "auxiliary")) {
        c.omega.auxiliary.push_back(rational_from_json(v));
      }
    }
    // Letters are checked by verify_certificate, not here.
    c.word.letters = expect_string(j["word"], "word");
    for (const auto& s : expect_array(j["steps"], "steps")) {
      expect_object(s, "step", {"index", "letter", "monodromy_before", "monodromy_after", "handle_framing",
                                "sphere_pairing", "eta_disjoint_from_knot", "vanishing", "inference"});
      SurgeryStep step;
      step.index = expect_size(s["index"], "index");
      const std::string letter = expect_string(s["letter"], "letter");
      if (letter.size() != 1) fail("step letter", "expected one character");
      step.letter = letter[0];
      step.before = sl2_from_json(s["monodromy_before"], "monodromy_before");
      step.after = sl2_from_json(s["monodromy_after"], "monodromy_after");
      step.handle_framing = int(expect_int(s["handle_framing"], "handle_framing"));
      step.sphere_pairing = expect_int(s["sphere_pairing"], "sphere_pairing");
      step.eta_disjoint_from_knot = expect_bool(s["eta_disjoint_from_knot"], "eta_disjoint_from_knot");
      step.vanishing = vanishing_from_json(s["vanishing"]);
      step.inference = expect_string(s["inference"], "inference");
      c.steps.push_back(std::move(step));
    }
    const auto& t = j["terminal"];
    expect_object(t, "terminal", {"tower_length", "fiber_pairing", "input", "ucss"});
    c.terminal.tower_length = expect_size(t["tower_length"], "tower_length");
    c.terminal.fiber_pairing = expect_int(t["fiber_pairing"], "fiber_pairing");
    for (const auto& e : expect_array(t["input"], "input")) {
      expect_object(e, "input entry", {"degree", "module"});
      c.terminal.input[rational_from_json(e["degree"])] = expect_string(e["module"], "module");
    }
    for (const auto& e : expect_array(t["ucss"], "ucss")) {
      expect_object(e, "ucss entry", {"degree", "tensor", "tor1", "tor_from_below", "dimension"});
      UcssEntry entry;
      entry.here.tensor = expect_size(e["tensor"], "tensor");
      entry.here.tor1 = expect_size(e["tor1"], "tor1");
      entry.tor_from_below = expect_size(e["tor_from_below"], "tor_from_below");
      entry.dimension = expect_size(e["dimension"], "dimension");
      c.terminal.ucss[rational_from_json(e["degree"])] = entry;
    }
    const auto& k = j["conclusion"];
    expect_object(k, "conclusion", {"module", "degree", "dimension", "torsion_spinc_support"});
    c.conclusion.module = expect_string(k["module"], "module");
    c.conclusion.degree = rational_from_json(k["degree"]);
    c.conclusion.dimension = expect_size(k["dimension"], "dimension");
    c.conclusion.torsion_spinc_support = expect_bool(k["torsion_spinc_support"], "torsion_spinc_support");
    return c;
  });
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const FieldHomology& h) {
  Json out;
  out["ring"] = "novikov";
  out["degrees"] = field_json(h);
  out["total_dimension"] = total_dimension(h);
  return out;
}

Json to_json(const IntegerHomology& h) {
  Json out;
  out["ring"] = "integer";
  Json degrees = Json::array();
  for (const auto& [k, g] : h.by_degree) {
    Json e;
    e["degree"] = format_rational(k);
    e["free_rank"] = g.free_rank;
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_string(t));
    e["torsion"] = std::move(torsion);
    e["group"] = to_string(g);
    degrees.push_back(std::move(e));
  }
  out["degrees"] = std::move(degrees);
  return out;
}

Json to_json(const LaurentHomology& h) {
  Json out;
  out["ring"] = "laurent";
  Json degrees = Json::array();
  for (const auto& [k, m] : h.by_degree) {
    Json e;
    e["degree"] = format_rational(k);
    e["module"] = to_string(m);
    e["classified"] = m.is_classified();
    degrees.push_back(std::move(e));
  }
  out["degrees"] = std::move(degrees);
  if (h.tower) {
    Json t;
    t["start"] = format_rational(h.tower->start);
    t["period"] = format_rational(h.tower->period);
    t["length"] = h.tower->length;
    out["tower"] = std::move(t);
  }
  return out;
}

Json to_json(const UcssResult& r) {
  Json out;
  Json table = Json::array();
  for (const auto& [k, e] : r.entries) table.push_back(ucss_entry_json(k, e));
  out["ucss"] = std::move(table);
  out["homology"] = to_json(r.homology);
  return out;
}

// ---------------------------------------------------------------------------
// Files

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace twisted::io
