#pragma once

// Matroid files and JSON reports.
//
// A matroid file is one JSON object holding exactly one constructor:
//
//   {"n": 4, "bases": [[0, 1], [0, 2], ...]}
//   {"n": 4, "circuits": [[0, 1, 2]]}
//   {"graph": {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}}
//
// Indices are 0-based and every index list is strictly increasing.
// Reports are nlohmann::json objects, whose keys serialize in sorted order.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gelement/complex.hpp"
#include "gelement/counterexample.hpp"
#include "gelement/facering.hpp"
#include "gelement/macaulay.hpp"
#include "gelement/matroid.hpp"

namespace gelement::io {

using Json = nlohmann::json;

struct MatroidDocument {
  enum class Kind { bases, circuits, graph };
  Kind kind = Kind::bases;
  int n = 0;
  std::vector<Subset> family;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Throws Error{parse_error} on malformed JSON or a malformed document.
MatroidDocument parse_document(std::string_view text);
/// Throws Error{not_a_matroid}, Error{empty_family} or Error{too_large}.
Matroid build(const MatroidDocument& doc);
Matroid parse_matroid(std::string_view text);
/// Throws Error{parse_error} if the file cannot be read.
std::string read_file(const std::string& path);

/// {"bases": [...], "n": n}, bases in bit-mask order.
std::string serialize_matroid(const Matroid& m);

struct Validation {
  bool valid = true;
  std::string reason;
  std::optional<ExchangeViolation> violation;
};

Validation validate(const MatroidDocument& doc);

/// Comma-separated permutation, or "natural".
ElementOrder parse_order(std::string_view text, int n);

std::string dump(const Json& report);

Json to_json(const std::vector<Subset>& family);
Json to_json(const std::vector<Rational>& v);
Json to_json(const SequenceVerdict& v);
Json to_json(const GInequalities& v);
Json to_json(const InjectivityCertificate& c);
Json to_json(const GElementReport& r);
Json to_json(const GWitness& w);
Json to_json(const HilbertTable& t);
Json to_json(const CounterexampleReport& r);

Json matroid_summary(const Matroid& m);

/// The complex section of an analysis: f, h (direct and recursive), g,
/// inequality verdicts with r the top nonzero degree of h, and the
/// O-sequence verdict on g. `recursion_matches` is false on any disagreement.
struct ComplexAnalysis {
  Json json;
  HVector h;
  bool recursion_matches = true;
};

ComplexAnalysis analyze_complex(const Matroid& m, ComplexKind kind, const ElementOrder& order);

}  // namespace gelement::io
