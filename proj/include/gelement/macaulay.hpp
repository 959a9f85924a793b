#pragma once

// Macaulay's binomial expansions, the pseudopower j^<i>, O-sequence checks,
// and the three inequality families that g-elements force on an h-vector.

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gelement/complex.hpp"

namespace gelement {

using BigInt = mpz_class;

/// j = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_l, l) with a_i > ... > a_l >= l >= 1.
struct MacaulayExpansion {
  int degree = 0;
  /// (a_k, k) pairs, k running from `degree` downwards.
  std::vector<std::pair<long, int>> terms;

  BigInt value() const;
};

/// Greedy expansion. Throws Error{invalid_degree} for j < 1 or i < 1.
MacaulayExpansion expand(const BigInt& j, int i);

/// j^<i>; 0^<i> = 0. Throws Error{invalid_degree} for i < 1 or j < 0.
BigInt pseudopower(const BigInt& j, int i);

struct SequenceVerdict {
  bool holds = true;
  /// Index of the first failing inequality, if any.
  std::optional<int> violation;
};

/// h_{i+1} <= h_i^<i> for all i >= 1, with every entry nonnegative.
/// `leading_one` records whether h_0 == 1.
struct OSequenceVerdict : SequenceVerdict {
  bool leading_one = true;
};

OSequenceVerdict is_o_sequence(const std::vector<BigInt>& h);
OSequenceVerdict is_o_sequence(const std::vector<std::int64_t>& h);

/// Verdicts for, with h padded by zeros to length r + 1:
///   increasing:  h_0 <= h_1 <= ... <= h_{floor(r/2)}   (violation = first i with h_{i-1} > h_i)
///   symmetric:   h_i <= h_{r-i} for all i <= r/2        (violation = first such i)
///   g_growth:    g_{i+1} <= g_i^<i> for 1 <= i < r/2    (violation = first such i)
/// where g_i = h_i - h_{i-1}. A negative g_i fails the growth condition.
struct GInequalities {
  SequenceVerdict increasing;
  SequenceVerdict symmetric;
  SequenceVerdict g_growth;

  bool all() const { return increasing.holds && symmetric.holds && g_growth.holds; }
};

GInequalities check_g_inequalities(const HVector& h, int r);

}  // namespace gelement
