// gelement: h-vectors, face-ring quotients and g-element checks for matroids.
//
// Exit status: 0 when every check agrees with the theory, 1 on input errors,
// 2 when an outcome contradicts it.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gelement/complex.hpp"
#include "gelement/counterexample.hpp"
#include "gelement/error.hpp"
#include "gelement/facering.hpp"
#include "gelement/io.hpp"
#include "gelement/macaulay.hpp"
#include "gelement/matroid.hpp"

namespace {

using namespace gelement;
using io::Json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kContradiction = 2;

struct Options {
  std::string file;
  std::string target = "ind";
  std::string order = "natural";
  std::uint64_t seed = 1;
  long bound = 97;
  int trials = 16;
  int counterexample_trials = 20;
  bool exact = false;
  bool strip_coloops = false;
  int s = 5;
};

ComplexKind parse_target(const std::string& t) {
  return t == "bc" ? ComplexKind::broken_circuit : ComplexKind::independence;
}

Matroid load(const std::string& path) { return io::parse_matroid(io::read_file(path)); }

int emit(const Json& report, int code) {
  std::cout << io::dump(report);
  return code;
}

int cmd_analyze(const Options& o) {
  const Matroid m = load(o.file);
  const ComplexKind kind = parse_target(o.target);
  const ElementOrder order = io::parse_order(o.order, m.size());
  io::ComplexAnalysis a = io::analyze_complex(m, kind, order);
  Json report{{"command", "analyze"}, {"matroid", io::matroid_summary(m)}, {"complex", a.json}};
  bool ok = a.recursion_matches;
  if (!a.recursion_matches) std::cerr << "h-vector recursion disagrees with the direct computation\n";
  if (kind == ComplexKind::independence && !a.json["inequalities"]["all"].get<bool>()) {
    std::cerr << "independence h-vector violates an inequality family\n";
    ok = false;
  }
  return emit(report, ok ? kOk : kContradiction);
}

int cmd_gcheck(const Options& o) {
  const Matroid original = load(o.file);
  Matroid m = original;
  std::vector<int> labels(static_cast<std::size_t>(m.size()));
  for (int e = 0; e < m.size(); ++e) labels[static_cast<std::size_t>(e)] = e;
  const Subset coloops = m.coloops();
  if (o.strip_coloops && !coloops.empty()) {
    Minor minor = delete_elements(m, coloops);
    m = minor.matroid;
    labels = minor.labels;
  }

  SearchOptions search;
  search.trials = o.trials;
  search.bound = o.bound;
  search.seed = o.seed;
  search.exact = o.exact;
  const SearchLog log = g_element_trials(m, search);

  io::ComplexAnalysis a = io::analyze_complex(m, ComplexKind::independence, ElementOrder::natural(m.size()));
  Json report{{"command", "gcheck"},
              {"matroid", io::matroid_summary(original)},
              {"stripped_coloops", o.strip_coloops ? coloops.elements() : std::vector<int>{}},
              {"complex", a.json},
              {"seed", o.seed},
              {"bound", o.bound},
              {"trials", o.trials}};
  bool ok = a.recursion_matches;

  if (!log.witness) {
    Json attempts = Json::array();
    for (const auto& t : log.attempts)
      attempts.push_back(Json{{"trial", t.trial}, {"lsop", t.lsop}, {"g_element", t.g_element}});
    report["status"] = "witness_not_found";
    report["attempts"] = attempts;
    std::cerr << "WitnessNotFound: no g-element in " << o.trials << " trials\n";
    return emit(report, kContradiction);
  }

  GWitness w = *log.witness;
  for (int& l : w.labels) l = labels[static_cast<std::size_t>(l)];
  report["status"] = "witness_found";
  report["witness"] = io::to_json(w);
  report["arithmetic"] = w.report.arithmetic;

  // Dimensions of R_i / ω R_{i-1} for the first half must reproduce g.
  const LabeledComplex lc = independence_complex(m);
  const Field field = o.exact ? Field::rationals() : Field::modulo(modular_primes(o.seed, 1).front());
  ArtinianQuotient q(lc.complex, w.theta, field);
  const HVector h = h_vector(lc.complex);
  const int top = h.top_degree();
  std::vector<std::int64_t> cokernel;
  for (int i = 0; 2 * i <= top; ++i) cokernel.push_back(static_cast<std::int64_t>(q.cokernel_dimension(w.omega, i)));
  const auto g = g_vector(h, top);
  const OSequenceVerdict verdict = is_o_sequence(cokernel);
  report["cokernel_dimensions"] = cokernel;
  report["cokernel_matches_g"] = cokernel == g;
  report["cokernel_o_sequence"] = io::to_json(static_cast<const SequenceVerdict&>(verdict));
  if (cokernel != g || !verdict.holds) {
    std::cerr << "quotient by the g-element does not reproduce the g-vector\n";
    ok = false;
  }
  return emit(report, ok ? kOk : kContradiction);
}

int cmd_counterexample(const Options& o) {
  CounterexampleOptions c;
  c.s = o.s;
  c.trials = o.counterexample_trials;
  c.bound = o.bound;
  c.seed = o.seed;
  if (o.s < 2) throw Error(ErrorKind::invalid_degree, "need s >= 2");
  if (2 * o.s > kMaxElements) throw Error(ErrorKind::too_large, "s too large");
  const CounterexampleReport r = bc_counterexample(c, io::parse_order(o.order, 2 * o.s));
  Json report{{"command", "counterexample"},
              {"counterexample", io::to_json(r)},
              {"seed", o.seed},
              {"bound", o.bound},
              {"trials", o.counterexample_trials},
              {"arithmetic", "exact"}};
  if (r.obstruction_confirmed && !*r.obstruction_confirmed) {
    std::cerr << "some trial did not exhibit the degree-2 kernel\n";
    return emit(report, kContradiction);
  }
  if (!r.note.empty()) std::cerr << r.note << "\n";
  return emit(report, kOk);
}

int cmd_validate(const Options& o) {
  const io::MatroidDocument doc = io::parse_document(io::read_file(o.file));
  const io::Validation v = io::validate(doc);
  Json report{{"command", "validate"}, {"valid", v.valid}, {"reason", v.reason}};
  if (v.violation) {
    report["violation"] = Json{{"first", v.violation->first.elements()},
                               {"second", v.violation->second.elements()},
                               {"removed", v.violation->removed}};
  }
  return emit(report, v.valid ? kOk : kInputError);
}

int cmd_hilbert(const Options& o) {
  const Matroid m = load(o.file);
  const ComplexKind kind = parse_target(o.target);
  const ElementOrder order = io::parse_order(o.order, m.size());
  Json report{{"command", "hilbert"}, {"matroid", io::matroid_summary(m)}, {"seed", o.seed}, {"bound", o.bound}};
  SimplicialComplex c = kind == ComplexKind::independence ? independence_complex(m).complex
                                                          : broken_circuit_complex(m, order);
  report["target"] = kind == ComplexKind::independence ? "independence" : "broken_circuit";
  Rng rng(o.seed);
  const LsopSample sample = lsop_random(c, o.bound, rng);
  const Field field = Field::rationals();
  const HilbertTable table = hilbert_check(c, sample.forms, field);
  report["theta"] = sample.forms.rows();
  report["lsop_attempts"] = sample.attempts;
  report["table"] = io::to_json(table);
  report["arithmetic"] = field.describe();
  if (!table.all_match()) std::cerr << "quotient dimensions differ from the h-vector\n";
  return emit(report, table.all_match() ? kOk : kContradiction);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h-vectors, face-ring quotients and g-elements of matroids"};
  app.require_subcommand(1);
  Options o;

  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "matroid JSON file")->required();
  };
  const auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "complex: ind or bc")->check(CLI::IsMember({"ind", "bc"}));
    sub->add_option("--order", o.order, "element order: natural or a comma-separated permutation");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "f/h/g-vectors and inequality verdicts");
  add_file(analyze);
  add_target(analyze);

  CLI::App* gcheck = app.add_subcommand("gcheck", "search for an l.s.o.p. with a g-element");
  add_file(gcheck);
  gcheck->add_option("--seed", o.seed);
  gcheck->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
  gcheck->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  gcheck->add_flag("--exact", o.exact, "verify over the rationals instead of mod p");
  gcheck->add_flag("--strip-coloops", o.strip_coloops, "delete coloops before searching");

  CLI::App* counter = app.add_subcommand("counterexample", "degree-2 kernel in the broken-circuit quotient");
  counter->add_option("-s,--s", o.s, "number of subdivided parallel edges");
  counter->add_option("--seed", o.seed);
  counter->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
  counter->add_option("--trials", o.counterexample_trials)->check(CLI::PositiveNumber);
  counter->add_option("--order", o.order, "element order: natural or a comma-separated permutation");

  CLI::App* validate = app.add_subcommand("validate", "check the matroid axioms");
  add_file(validate);

  CLI::App* hilbert = app.add_subcommand("hilbert", "quotient dimensions against the h-vector");
  add_file(hilbert);
  add_target(hilbert);
  hilbert->add_option("--seed", o.seed);
  hilbert->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*gcheck) return cmd_gcheck(o);
    if (*counter) return cmd_counterexample(o);
    if (*validate) return cmd_validate(o);
    if (*hilbert) return cmd_hilbert(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
