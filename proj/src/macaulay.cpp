#include "gelement/macaulay.hpp"

#include <string>

#include "gelement/error.hpp"

namespace gelement {

namespace {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

BigInt MacaulayExpansion::value() const {
  BigInt total = 0;
  for (auto [a, k] : terms) total += binomial(a, k);
  return total;
}

MacaulayExpansion expand(const BigInt& j, int i) {
  if (i < 1) throw Error(ErrorKind::invalid_degree, "expansion degree must be >= 1, got " + std::to_string(i));
  if (j < 1) throw Error(ErrorKind::invalid_degree, "expanded value must be >= 1, got " + j.get_str());
  MacaulayExpansion out;
  out.degree = i;
  BigInt rest = j;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // Largest a with C(a, k) <= rest; a >= k since C(k, k) = 1 <= rest.
    long a = k;
    while (binomial(a + 1, k) <= rest) ++a;
    out.terms.emplace_back(a, k);
    rest -= binomial(a, k);
  }
  return out;
}

BigInt pseudopower(const BigInt& j, int i) {
  if (i < 1) throw Error(ErrorKind::invalid_degree, "pseudopower degree must be >= 1, got " + std::to_string(i));
  if (j < 0) throw Error(ErrorKind::invalid_degree, "pseudopower of a negative value");
  if (j == 0) return 0;
  BigInt total = 0;
  for (auto [a, k] : expand(j, i).terms) total += binomial(a + 1, k + 1);
  return total;
}

OSequenceVerdict is_o_sequence(const std::vector<BigInt>& h) {
  OSequenceVerdict v;
  v.leading_one = !h.empty() && h.front() == 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0) {
      v.holds = false;
      v.violation = static_cast<int>(i);
      return v;
    }
  }
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i + 1] > pseudopower(h[i], static_cast<int>(i))) {
      v.holds = false;
      v.violation = static_cast<int>(i);
      return v;
    }
  }
  return v;
}

OSequenceVerdict is_o_sequence(const std::vector<std::int64_t>& h) {
  std::vector<BigInt> big;
  big.reserve(h.size());
  for (auto x : h) big.emplace_back(static_cast<long>(x));
  return is_o_sequence(big);
}

GInequalities check_g_inequalities(const HVector& h, int r) {
  GInequalities out;
  const auto at = [&](int i) -> BigInt { return BigInt(static_cast<long>(h.at(static_cast<std::size_t>(i)))); };

  for (int i = 1; i <= r / 2; ++i) {
    if (at(i - 1) > at(i)) {
      out.increasing = {false, i};
      break;
    }
  }
  for (int i = 0; 2 * i <= r; ++i) {
    if (at(i) > at(r - i)) {
      out.symmetric = {false, i};
      break;
    }
  }
  for (int i = 1; 2 * i < r; ++i) {
    const BigInt g_i = at(i) - at(i - 1);
    const BigInt g_next = at(i + 1) - at(i);
    if (g_i < 0 || g_next > pseudopower(g_i, i)) {
      out.g_growth = {false, i};
      break;
    }
  }
  return out;
}

}  // namespace gelement
