#pragma once

#include "twisted/torus_bundle.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace twisted::io {

/// Key order is insertion order, so emitted files are stable and readable.
using Json = nlohmann::ordered_json;

// Scalars. Rationals and integers are strings ("p" or "p/q"), so no value is
// ever rounded through a double.
Json to_json(const Rational& r);
Json to_json(const NovikovSeries& a);
Json to_json(const LaurentPoly& a, std::size_t rank);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
/// {"terms":[["r","c"],...],"trunc":"r"|null}, terms ascending.
NovikovSeries novikov_from_json(const Json& j);
/// {"rank":b,"terms":[[[e1,...,eb],"c"],...]}; b must equal `rank`.
LaurentPoly laurent_from_json(const Json& j, std::size_t rank);

/// {"variant":"universal"|"trivial"|"omega","omega":[...]}; "omega" only
/// for the omega variant.
Json to_json(const CoefficientSystem& s);
CoefficientSystem coefficient_system_from_json(const Json& j);

/// A complex file: ring tag, generators, differential entries and an optional
/// free-form provenance record.
struct ComplexFile {
  AnyComplex complex;
  std::optional<Json> provenance;
};

Json complex_to_json(const AnyComplex& c, const std::optional<Json>& provenance = {});
/// Throws ParseError on malformed input, unknown fields or duplicate names.
/// The differential is not checked (see verify).
ComplexFile complex_from_json(const Json& j);

/// A graded module over Z[t, t^-1] (classified summands per degree).
struct ModuleFile {
  LaurentHomology module;
  std::optional<Json> provenance;
};

Json module_to_json(const LaurentHomology& h, const std::optional<Json>& provenance = {});
ModuleFile module_from_json(const Json& j);

/// True for documents shaped like a graded-module file.
bool is_module_file(const Json& j);

Json certificate_to_json(const SurgeryCertificate& c);
SurgeryCertificate certificate_from_json(const Json& j);

Json to_json(const FieldHomology& h);
Json to_json(const IntegerHomology& h);
Json to_json(const LaurentHomology& h);
Json to_json(const UcssResult& r);

/// Reads and parses a JSON document; ParseError on I/O or syntax errors.
Json read_json(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace twisted::io
