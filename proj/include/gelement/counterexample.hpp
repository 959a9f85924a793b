#pragma once

// The broken-circuit complex of the subdivided parallel-edge matroid: its
// h-vector passes every inequality a g-element would force, yet for every
// l.s.o.p. the monomial x_i x_j spans a nonzero class in degree 2 that ω
// sends to zero.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelement/complex.hpp"
#include "gelement/facering.hpp"
#include "gelement/macaulay.hpp"

namespace gelement {

/// The first pair {2t, 2t+1} (the two halves of one subdivided edge) that is
/// contained in the set of the greatest l elements, as l grows from 1.
std::pair<int, int> subdivided_pair(int s, const ElementOrder& order);

struct CounterexampleOptions {
  int s = 5;
  int trials = 20;
  long bound = 97;
  std::uint64_t seed = 1;
};

struct CounterexampleTrial {
  int trial = 0;
  int lsop_attempts = 0;
  LinearForms theta;
  LinearForm omega;
  /// x_i x_j is not in the span of the degree-2 relations.
  bool class_nonzero = false;
  /// ω · x_i x_j lies in the span of the degree-3 relations.
  bool annihilated = false;
  /// ω : R_2 -> R_3 over the rationals.
  InjectivityCertificate single_step;
  /// For s > 5 only: ω^(top-4) : R_2 -> R_(top-2), and whether it kills x_i x_j.
  std::optional<InjectivityCertificate> lefschetz_power;
  std::optional<bool> power_annihilated;
};

struct CounterexampleReport {
  int s = 0;
  std::vector<int> order;
  std::pair<int, int> pair{0, 0};
  HVector h;
  int top_degree = 0;
  GInequalities inequalities;
  std::vector<std::int64_t> g;
  OSequenceVerdict g_o_sequence;
  std::vector<CounterexampleTrial> trials;
  /// From the first trial: normal-form coordinates of x_i x_j in R_2, and the
  /// coefficients expressing ω · x_i x_j through the degree-3 relation basis.
  std::vector<Rational> kernel_class;
  std::vector<Rational> membership;
  /// True when s >= 5 and every trial exhibits the kernel; false for s >= 5
  /// otherwise. Unset for s < 5, where no obstruction is claimed.
  std::optional<bool> obstruction_confirmed;
  std::string note;
};

/// Every trial is verified in exact arithmetic. Throws Error{invalid_degree}
/// for s < 2 and propagates Error{lsop_not_found}.
CounterexampleReport bc_counterexample(const CounterexampleOptions& options, const ElementOrder& order);
CounterexampleReport bc_counterexample(const CounterexampleOptions& options);

}  // namespace gelement
