#include "gelement/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gelement/error.hpp"

namespace gelement::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

int read_count(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(what + " must be a nonnegative integer");
  const long long v = j.get<long long>();
  if (v > kMaxElements * 4) throw Error(ErrorKind::too_large, what + " = " + std::to_string(v) + " is too large");
  return static_cast<int>(v);
}

std::vector<Subset> read_family(const Json& j, int n, const std::string& what) {
  if (!j.is_array()) fail(what + " must be a list of index lists");
  std::vector<Subset> out;
  for (const Json& set : j) {
    if (!set.is_array()) fail(what + " must be a list of index lists");
    Subset s;
    int last = -1;
    for (const Json& e : set) {
      if (!e.is_number_integer()) fail(what + " entries must be integers");
      const long long v = e.get<long long>();
      if (v < 0 || v >= n) fail(what + " index " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      if (v <= last) fail(what + " index lists must be strictly increasing");
      last = static_cast<int>(v);
      s = s.with(last);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

MatroidDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document must be a JSON object");
  int constructors = 0;
  for (const auto& [key, value] : j.items()) {
    if (key == "bases" || key == "circuits" || key == "graph")
      ++constructors;
    else if (key != "n")
      fail("unknown key \"" + key + "\"");
  }
  if (constructors != 1) fail("exactly one of bases, circuits, graph is required");

  MatroidDocument doc;
  if (j.contains("graph")) {
    if (j.contains("n")) fail("n is not used with graph input");
    const Json& g = j["graph"];
    if (!g.is_object() || !g.contains("vertices") || !g.contains("edges")) fail("graph needs vertices and edges");
    doc.kind = MatroidDocument::Kind::graph;
    doc.vertices = read_count(g["vertices"], "vertices");
    if (!g["edges"].is_array()) fail("edges must be a list of vertex pairs");
    for (const Json& e : g["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail("each edge must be a pair of vertex indices");
      const long long a = e[0].get<long long>();
      const long long b = e[1].get<long long>();
      if (a < 0 || b < 0 || a >= doc.vertices || b >= doc.vertices) fail("edge endpoint out of range");
      doc.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    doc.n = static_cast<int>(doc.edges.size());
    if (doc.n > kMaxElements) throw Error(ErrorKind::too_large, "more than " + std::to_string(kMaxElements) + " edges");
    return doc;
  }
  if (!j.contains("n")) fail("n is required with bases or circuits");
  doc.n = read_count(j["n"], "n");
  if (doc.n > kMaxElements)
    throw Error(ErrorKind::too_large, "ground set larger than " + std::to_string(kMaxElements));
  if (j.contains("bases")) {
    doc.kind = MatroidDocument::Kind::bases;
    doc.family = read_family(j["bases"], doc.n, "bases");
  } else {
    doc.kind = MatroidDocument::Kind::circuits;
    doc.family = read_family(j["circuits"], doc.n, "circuits");
  }
  return doc;
}

Matroid build(const MatroidDocument& doc) {
  switch (doc.kind) {
    case MatroidDocument::Kind::bases: return Matroid::from_bases(doc.n, doc.family);
    case MatroidDocument::Kind::circuits: return Matroid::from_circuits(doc.n, doc.family);
    case MatroidDocument::Kind::graph: return Matroid::from_graph(doc.vertices, doc.edges);
  }
  fail("unknown document kind");
}

Matroid parse_matroid(std::string_view text) { return build(parse_document(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string serialize_matroid(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  j["bases"] = to_json(m.bases());
  return j.dump();
}

Validation validate(const MatroidDocument& doc) {
  Validation v;
  try {
    build(doc);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse_error) throw;
    v.valid = false;
    v.reason = e.what();
    if (doc.kind == MatroidDocument::Kind::bases) v.violation = find_exchange_violation(doc.n, doc.family);
  }
  return v;
}

ElementOrder parse_order(std::string_view text, int n) {
  if (text.empty() || text == "natural") return ElementOrder::natural(n);
  std::vector<int> seq;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || token.empty())
      fail("order must be comma-separated integers, got \"" + std::string(text) + "\"");
    seq.push_back(value);
    pos = comma + 1;
  }
  if (static_cast<int>(seq.size()) != n)
    fail("order lists " + std::to_string(seq.size()) + " elements, expected " + std::to_string(n));
  return ElementOrder::from_sequence(std::move(seq));
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

Json to_json(const std::vector<Subset>& family) {
  Json out = Json::array();
  for (Subset s : family) out.push_back(s.elements());
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const SequenceVerdict& v) {
  return Json{{"holds", v.holds}, {"violation", v.violation ? Json(*v.violation) : Json(nullptr)}};
}

Json to_json(const GInequalities& v) {
  return Json{{"h_increasing_first_half", to_json(v.increasing)},
              {"h_symmetric_bound", to_json(v.symmetric)},
              {"g_macaulay_growth", to_json(v.g_growth)},
              {"all", v.all()}};
}

Json to_json(const InjectivityCertificate& c) {
  return Json{{"from_degree", c.from_degree},     {"to_degree", c.to_degree},
              {"source_dim", c.source_dim},       {"relation_rank", c.relation_rank},
              {"augmented_rank", c.augmented_rank}, {"injective", c.injective},
              {"field", c.field.describe()}};
}

Json to_json(const GElementReport& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return Json{{"is_g_element", r.is_g_element},
              {"top_degree", r.top_degree},
              {"dimensions", r.dimensions},
              {"certificates", certs},
              {"arithmetic", r.arithmetic}};
}

Json to_json(const GWitness& w) {
  Json attempts = Json::array();
  for (const auto& a : w.attempts) attempts.push_back(Json{{"trial", a.trial}, {"lsop", a.lsop}, {"g_element", a.g_element}});
  return Json{{"seed", w.seed},          {"bound", w.bound},   {"trial", w.trial},
              {"theta", w.theta.rows()}, {"omega", w.omega},   {"report", to_json(w.report)},
              {"attempts", attempts},    {"labels", w.labels}};
}

Json to_json(const HilbertTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"degree", r.degree}, {"quotient_dim", r.quotient_dim}, {"h", r.h}, {"match", r.match}});
  return Json{{"rows", rows}, {"all_match", t.all_match()}};
}

Json to_json(const CounterexampleReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json j{{"trial", t.trial},
           {"lsop_attempts", t.lsop_attempts},
           {"theta", t.theta.rows()},
           {"omega", t.omega},
           {"class_nonzero", t.class_nonzero},
           {"annihilated", t.annihilated},
           {"single_step", to_json(t.single_step)}};
    if (t.lefschetz_power) j["lefschetz_power"] = to_json(*t.lefschetz_power);
    if (t.power_annihilated) j["power_annihilated"] = *t.power_annihilated;
    trials.push_back(std::move(j));
  }
  Json o = to_json(static_cast<const SequenceVerdict&>(r.g_o_sequence));
  return Json{{"s", r.s},
              {"order", r.order},
              {"pair", {r.pair.first, r.pair.second}},
              {"h", r.h.entries},
              {"top_degree", r.top_degree},
              {"inequalities", to_json(r.inequalities)},
              {"g", r.g},
              {"g_o_sequence", o},
              {"trials", trials},
              {"kernel_class", to_json(r.kernel_class)},
              {"membership", to_json(r.membership)},
              {"obstruction_confirmed", r.obstruction_confirmed ? Json(*r.obstruction_confirmed) : Json(nullptr)},
              {"note", r.note}};
}

Json matroid_summary(const Matroid& m) {
  return Json{{"n", m.size()},
              {"rank", m.rank()},
              {"bases", m.bases().size()},
              {"loops", m.loops().elements()},
              {"coloops", m.coloops().elements()},
              {"components", m.components()},
              {"series_classes", to_json(m.series_classes())}};
}

ComplexAnalysis analyze_complex(const Matroid& m, ComplexKind kind, const ElementOrder& order) {
  ComplexAnalysis out;
  Json j;
  std::optional<SimplicialComplex> c;
  if (kind == ComplexKind::independence) {
    LabeledComplex lc = independence_complex(m);
    j["kind"] = "independence";
    j["labels"] = lc.labels;
    c.emplace(std::move(lc.complex));
  } else {
    c.emplace(broken_circuit_complex(m, order));
    j["kind"] = "broken_circuit";
    j["order"] = order.sequence();
  }
  out.h = h_vector(*c);
  const HVector rec = h_recursive(m, kind, order);
  out.recursion_matches = rec == out.h;
  const int top = out.h.top_degree();
  const auto g = g_vector(out.h, top);
  const OSequenceVerdict o = is_o_sequence(g);
  j["facets"] = c->facets().size();
  j["f"] = f_vector(*c);
  j["h"] = out.h.entries;
  j["h_recursive"] = rec.entries;
  j["recursion_matches"] = out.recursion_matches;
  j["top_degree"] = top;
  j["g"] = g;
  j["inequalities"] = to_json(check_g_inequalities(out.h, top));
  j["g_o_sequence"] = to_json(static_cast<const SequenceVerdict&>(o));
  out.json = std::move(j);
  return out;
}

}  // namespace gelement::io
