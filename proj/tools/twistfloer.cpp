// twistfloer: batch front end for twisted Floer model computations.

#include "twisted/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace twisted;
using io::Json;

namespace {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParse = 2,
  kBadComplex = 3,
  kPrecision = 4,
  kRank = 5,
  kDeterminant = 6,
  kFiberPairing = 7,
};

struct Failure {
  int code;
  std::string message;
};

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& list, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& item : split(list)) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError(what + ": empty list");
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  const Rational r = parse_rational(s);
  if (!is_integral(r)) throw ParseError(what + ": expected an integer, got " + s);
  return static_cast<std::int64_t>(numerator(r));
}

std::string field_module(std::size_t dim) {
  if (dim == 0) return "0";
  if (dim == 1) return "Lambda";
  return "Lambda^" + std::to_string(dim);
}

template <class Group, class Describe>
std::string graded_text(const Graded<Group>& h, Describe describe) {
  if (h.by_degree.empty()) return "0\n";
  std::string out;
  for (const auto& [k, g] : h.by_degree) out += "degree " + format_rational(k) + ": " + describe(g) + "\n";
  if (h.tower) {
    out += "tower: from degree " + format_rational(h.tower->start) + " every " +
           format_rational(h.tower->period) + ", first " + std::to_string(h.tower->length) + " shown\n";
  }
  return out;
}

std::string field_text(const FieldHomology& h) {
  std::string out = graded_text(h, field_module);
  if (!h.by_degree.empty()) out += "total: " + field_module(total_dimension(h)) + "\n";
  return out;
}

std::string laurent_text(const LaurentHomology& h) {
  return graded_text(h, [](const FinitelyPresentedModule& m) { return to_string(m); });
}

std::string integer_text(const IntegerHomology& h) {
  return graded_text(h, [](const AbelianGroup& g) { return to_string(g); });
}

std::string ucss_text(const UcssResult& r) {
  std::string out;
  for (const auto& [k, e] : r.entries) {
    out += "degree " + format_rational(k) + ": tensor " + std::to_string(e.here.tensor) + ", tor from below " +
           std::to_string(e.tor_from_below) + ", dimension " + std::to_string(e.dimension) + "\n";
  }
  return out + field_text(r.homology);
}

ChainComplex<NovikovSeries> truncate_entries(const ChainComplex<NovikovSeries>& c, const Rational& precision) {
  NovikovMatrix d = c.differential();
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = 0; j < d.cols(); ++j) {
      if (!d(i, j).is_exact_zero()) d(i, j) = d(i, j).truncated(precision);
    }
  }
  return ChainComplex<NovikovSeries>(c.generators(), std::move(d), c.group_rank());
}

template <class Scalar>
void require_valid(const ChainComplex<Scalar>& c) {
  if (auto report = verify(c); !report) {
    std::string message = "invalid complex";
    for (const auto& p : report.problems) message += "\n  " + p;
    throw Failure{kBadComplex, message};
  }
}

void emit(const std::string& text, const std::optional<std::string>& out) {
  if (out) {
    io::write_text(*out, text);
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------

struct HomologyArgs {
  std::string file;
  std::string format = "text";
  std::optional<std::string> precision;
};

int cmd_homology(const HomologyArgs& args) {
  const Json doc = io::read_json(args.file);
  const bool json = args.format == "json";
  if (io::is_module_file(doc)) {
    const auto module = io::module_from_json(doc).module;
    std::cout << (json ? io::dump(io::to_json(module)) : laurent_text(module));
    return kOk;
  }
  const auto file = io::complex_from_json(doc);
  const std::optional<Rational> precision =
      args.precision ? std::optional(parse_rational(*args.precision)) : std::nullopt;
  std::visit(
      [&](const auto& c) {
        require_valid(c);
        using Scalar = typename std::decay_t<decltype(c)>::value_type;
        if constexpr (std::is_same_v<Scalar, Integer>) {
          const auto h = homology_integer(c);
          std::cout << (json ? io::dump(io::to_json(h)) : integer_text(h));
        } else if constexpr (std::is_same_v<Scalar, LaurentPoly>) {
          const auto h = homology_laurent(c);
          std::cout << (json ? io::dump(io::to_json(h)) : laurent_text(h));
        } else {
          const auto h = homology_field(precision ? truncate_entries(c, *precision) : c);
          std::cout << (json ? io::dump(io::to_json(h)) : field_text(h));
        }
      },
      file.complex);
  return kOk;
}

struct TwistArgs {
  std::string file;
  std::string omega;
  std::string precision = "100";
  std::string format = "text";
  std::optional<std::string> out;
};

int cmd_twist(const TwistArgs& args) {
  const Json doc = io::read_json(args.file);
  const OmegaHom omega{parse_rational_list(args.omega, "--omega")};
  const Rational precision = parse_rational(args.precision);
  const bool json = args.format == "json";
  if (io::is_module_file(doc)) {
    const auto result = ucss(io::module_from_json(doc).module, omega, precision);
    std::cout << (json ? io::dump(io::to_json(result)) : ucss_text(result));
    return kOk;
  }
  const auto file = io::complex_from_json(doc);
  const auto* c = std::get_if<ChainComplex<LaurentPoly>>(&file.complex);
  if (!c) throw ParseError("twist needs a complex over the laurent ring");
  require_valid(*c);
  const auto twisted = base_change_omega(*c, omega);
  const auto h = homology_field(truncate_entries(twisted, precision));
  if (args.out) {
    Json provenance;
    provenance["base_change"] = "omega";
    Json values = Json::array();
    for (const auto& v : omega.values) values.push_back(format_rational(v));
    provenance["omega"] = std::move(values);
    if (file.provenance) provenance["source"] = *file.provenance;
    io::write_text(*args.out, io::dump(io::complex_to_json(twisted, provenance)));
  }
  std::cout << (json ? io::dump(io::to_json(h)) : field_text(h));
  return kOk;
}

struct CertifyArgs {
  std::string monodromy;
  std::string fiber_pairing;
  std::size_t tower = kDefaultTowerLength;
  std::optional<std::string> auxiliary;
  std::optional<std::string> out;
};

SL2Matrix parse_monodromy(const std::string& list) {
  const auto items = split(list);
  if (items.size() != 4) throw ParseError("--monodromy: expected a,b,c,d");
  std::array<std::int64_t, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_int(items[i], "--monodromy");
  return SL2Matrix::make(v[0], v[1], v[2], v[3]);
}

int cmd_certify(const CertifyArgs& args) {
  const SL2Matrix m = parse_monodromy(args.monodromy);
  OmegaClassSpec omega{parse_int(args.fiber_pairing, "--fiber-pairing"), {}};
  if (args.auxiliary) omega.auxiliary = parse_rational_list(*args.auxiliary, "--auxiliary");
  if (args.tower < 1) throw ParseError("--tower must be at least 1");
  const auto cert = build_certificate(m, omega, args.tower);
  if (args.out) io::write_text(*args.out, io::dump(io::certificate_to_json(cert)));
  std::cout << "monodromy: " << to_string(m) << "\n"
            << "word: " << (cert.word.letters.empty() ? "(empty)" : cert.word.letters) << "\n"
            << "steps: " << cert.steps.size() << ", each vanishing verdict "
            << (cert.steps.empty() ? "-" : to_string(cert.steps.front().vanishing.verdict)) << "\n"
            << "HF+ = Lambda at degree " << format_rational(cert.conclusion.degree)
            << "; single torsion Spin^c\n";
  return kOk;
}

int cmd_verify(const std::string& path) {
  const auto cert = io::certificate_from_json(io::read_json(path));
  const auto report = verify_certificate(cert);
  if (!report) {
    for (const auto& p : report.problems) std::cerr << p << "\n";
    return kVerifyFailed;
  }
  std::cout << "certificate verified: " << cert.steps.size() << " steps, HF+ = Lambda at degree "
            << format_rational(cert.conclusion.degree) << "\n";
  return kOk;
}

struct ExamplesArgs {
  std::string name;
  std::optional<std::string> out;
  std::string d = "1";
  std::string c = "0";
  std::size_t tower = kDefaultTowerLength;
};

Json provenance_json(const std::string& text) {
  Json out;
  out["source"] = text;
  out["flavor"] = "hat";
  return out;
}

int cmd_examples(const ExamplesArgs& args) {
  const std::int64_t d = parse_int(args.d, "--d");
  if (args.name == "s1xs2-universal") {
    const auto model = s1xs2_universal();
    emit(io::dump(io::complex_to_json(model.complex, provenance_json(model.provenance))), args.out);
  } else if (args.name == "s1xs2-omega") {
    const auto model = s1xs2_omega(d, parse_rational(args.c));
    emit(io::dump(io::complex_to_json(model.complex, provenance_json(model.provenance))), args.out);
  } else if (args.name == "trefoil-module") {
    if (args.tower < 1) throw ParseError("--tower must be at least 1");
    Json provenance;
    provenance["source"] = kTrefoilProvenance;
    provenance["flavor"] = "plus, graded module";
    emit(io::dump(io::module_to_json(trefoil_zero_surgery_module(args.tower), provenance)), args.out);
  } else if (args.name == "t3-certificate") {
    const auto cert = build_certificate(SL2Matrix::identity(), {d, {}}, args.tower);
    emit(io::dump(io::certificate_to_json(cert)), args.out);
  } else {
    throw ParseError("unknown example \"" + args.name +
                     "\" (expected s1xs2-universal, s1xs2-omega, trefoil-module, t3-certificate)");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with twisted Floer model complexes"};
  app.require_subcommand(1);

  HomologyArgs homology;
  auto* h = app.add_subcommand("homology", "Homology of a complex file (or describe a module file)");
  h->add_option("file", homology.file)->required();
  h->add_option("--format", homology.format)->check(CLI::IsMember({"text", "json"}));
  h->add_option("--precision", homology.precision, "Truncate Novikov entries at this exponent");

  TwistArgs twist;
  auto* t = app.add_subcommand("twist", "Base change a laurent complex to Novikov coefficients");
  t->add_option("file", twist.file)->required();
  t->add_option("--omega", twist.omega, "Values of omega on the basis, comma separated")->required();
  t->add_option("--precision", twist.precision, "Novikov precision (default 100)");
  t->add_option("--format", twist.format)->check(CLI::IsMember({"text", "json"}));
  t->add_option("--out", twist.out, "Write the base-changed complex here");

  CertifyArgs certify;
  auto* c = app.add_subcommand("certify", "Certificate that HF+ of a torus bundle is Lambda");
  c->add_option("--monodromy", certify.monodromy, "a,b,c,d")->required();
  c->add_option("--fiber-pairing", certify.fiber_pairing, "omega(F)")->required();
  c->add_option("--tower", certify.tower, "Tower length of the terminal module");
  c->add_option("--auxiliary", certify.auxiliary, "Further omega values, recorded only");
  c->add_option("--out", certify.out, "Write the certificate here");

  std::string verify_path;
  auto* v = app.add_subcommand("verify", "Recheck a certificate file");
  v->add_option("path", verify_path)->required();

  ExamplesArgs examples;
  auto* e = app.add_subcommand("examples", "Write a model example");
  e->add_option("name", examples.name)->required();
  e->add_option("--out", examples.out);
  e->add_option("--d", examples.d, "Pairing d (s1xs2-omega, t3-certificate)");
  e->add_option("--c", examples.c, "Shift c (s1xs2-omega)");
  e->add_option("--tower", examples.tower, "Tower length (trefoil-module, t3-certificate)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kParse;
  }

  try {
    if (*h) return cmd_homology(homology);
    if (*t) return cmd_twist(twist);
    if (*c) return cmd_certify(certify);
    if (*v) return cmd_verify(verify_path);
    if (*e) return cmd_examples(examples);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kParse;
  } catch (const InvalidComplex& err) {
    std::cerr << "invalid complex: " << err.what() << "\n";
    return kBadComplex;
  } catch (const InsufficientPrecision& err) {
    std::cerr << "insufficient precision: " << err.what() << "\n";
    return kPrecision;
  } catch (const RankMismatch& err) {
    std::cerr << "rank mismatch: " << err.what() << "\n";
    return kRank;
  } catch (const NotUnimodular& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kDeterminant;
  } catch (const FiberPairingZero& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFiberPairing;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kVerifyFailed;
  }
  return kParse;
}
