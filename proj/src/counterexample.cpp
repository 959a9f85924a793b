#include "gelement/counterexample.hpp"

#include <algorithm>

#include "gelement/error.hpp"

namespace gelement {

std::pair<int, int> subdivided_pair(int s, const ElementOrder& order) {
  const auto& seq = order.sequence();
  Subset top;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    top = top.with(*it);
    const int mate = *it ^ 1;
    if (top.contains(mate)) return {std::min(*it, mate), std::max(*it, mate)};
  }
  throw Error(ErrorKind::invalid_degree, "no subdivided pair for s = " + std::to_string(s));
}

CounterexampleReport bc_counterexample(const CounterexampleOptions& options) {
  return bc_counterexample(options, ElementOrder::natural(2 * options.s));
}

CounterexampleReport bc_counterexample(const CounterexampleOptions& options, const ElementOrder& order) {
  const int s = options.s;
  if (s < 2) throw Error(ErrorKind::invalid_degree, "need s >= 2, got " + std::to_string(s));
  if (2 * s > kMaxElements) throw Error(ErrorKind::too_large, "s = " + std::to_string(s) + " exceeds the element limit");
  if (order.size() != 2 * s) throw Error(ErrorKind::parse_error, "order must be a permutation of 2s elements");

  const Matroid m = subdivided_parallel_matroid(s);
  const SimplicialComplex c = broken_circuit_complex(m, order);

  CounterexampleReport report;
  report.s = s;
  report.order = order.sequence();
  report.pair = subdivided_pair(s, order);
  report.h = h_vector(c);
  report.top_degree = report.h.top_degree();
  report.inequalities = check_g_inequalities(report.h, report.top_degree);
  report.g = g_vector(report.h, report.top_degree);
  report.g_o_sequence = is_o_sequence(report.g);

  const Subset pair_face = Subset::of({report.pair.first, report.pair.second});
  const int top = report.top_degree;
  Rng rng(options.seed);
  bool all_kernel = true;
  for (int t = 1; t <= options.trials; ++t) {
    CounterexampleTrial trial;
    trial.trial = t;
    LsopSample sample = lsop_random(c, options.bound, rng);
    trial.theta = std::move(sample.forms);
    trial.lsop_attempts = sample.attempts;
    trial.omega = random_forms(1, c.vertex_count(), options.bound, rng).row(0);

    ArtinianQuotient q(c, trial.theta);
    const GradedPiece& p2 = q.piece(2);
    std::vector<Rational> x(p2.monomials.size());
    bool found = false;
    for (std::size_t k = 0; k < p2.monomials.size(); ++k) {
      if (p2.monomials[k].support() == pair_face) {
        x[k] = 1;
        found = true;
      }
    }
    trial.class_nonzero = found && !q.relation_combination(2, x);
    const std::vector<Rational> image = q.multiply(trial.omega, 2, x);
    const auto membership = q.relation_combination(3, image);
    trial.annihilated = membership.has_value();
    trial.single_step = q.multiplication_injective(trial.omega, 2, 3);
    if (s > 5 && top - 2 > 3) {
      trial.lefschetz_power = q.multiplication_injective(trial.omega, 2, top - 2);
      std::vector<Rational> v = image;
      for (int d = 3; d < top - 2; ++d) v = q.multiply(trial.omega, d, v);
      trial.power_annihilated = q.relation_combination(top - 2, v).has_value();
    }
    if (t == 1 && trial.class_nonzero) {
      report.kernel_class = q.normal_form(2, x);
      if (membership) report.membership = *membership;
    }
    all_kernel = all_kernel && trial.class_nonzero && trial.annihilated && !trial.single_step.injective;
    report.trials.push_back(std::move(trial));
  }

  if (s >= 5) {
    report.obstruction_confirmed = all_kernel && report.inequalities.all();
  } else {
    report.note = "rank " + std::to_string(m.rank()) +
                  " is too small for a degree-2 obstruction; the smallest rank without g-elements is six";
  }
  return report;
}

}  // namespace gelement
