#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gelement/complex.hpp"
#include "gelement/error.hpp"
#include "oracles.hpp"

using namespace gelement;

namespace {

using Poly = std::vector<std::int64_t>;

Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(out);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

/// Coefficients of Σ h_i t^(r-i), lowest power first.
Poly descending(const HVector& h, int r) {
  Poly p(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 0; i <= r; ++i) p[static_cast<std::size_t>(r - i)] = h.at(static_cast<std::size_t>(i));
  return trim(p);
}

std::vector<Matroid> random_matroids(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Matroid> out;
  for (int k = 0; k < count; ++k) {
    if (k % 2 == 0) {
      const int n = static_cast<int>(rng.uniform(2, 8));
      out.push_back(oracle::random_linear_matroid(rng, static_cast<int>(rng.uniform(1, std::min(n, 4))), n, 1));
    } else {
      out.push_back(oracle::random_graphic_matroid(rng, static_cast<int>(rng.uniform(2, 6)), static_cast<int>(rng.uniform(1, 8))));
    }
  }
  return out;
}

ElementOrder random_order(Rng& rng, int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(rng.uniform(0, i))]);
  return ElementOrder::from_sequence(seq);
}

}  // namespace

TEST_CASE("independence complexes") {
  const LabeledComplex u = independence_complex(Matroid::uniform(2, 4));
  auto pairs = oracle::k_subsets(4, 2);
  std::sort(pairs.begin(), pairs.end(), lex_less);
  CHECK(u.complex.facets() == pairs);
  for (int s = 3; s <= 5; ++s) {
    const SimplicialComplex c = independence_complex(oracle::circuit(s)).complex;
    auto expected = oracle::k_subsets(s, s - 1);
    std::sort(expected.begin(), expected.end(), lex_less);
    CHECK(c.facets() == expected);
  }
  const LabeledComplex loops = independence_complex(Matroid::from_circuits(2, {Subset::of({0}), Subset::of({1})}));
  CHECK(loops.complex.facets() == std::vector<Subset>{Subset()});
  CHECK(loops.complex.vertex_count() == 0);
  // Loops are dropped and the survivors relabeled.
  const LabeledComplex mixed = independence_complex(Matroid::from_circuits(3, {Subset::of({1})}));
  CHECK(mixed.labels == std::vector<int>{0, 2});
}

TEST_CASE("broken-circuit complexes") {
  const ElementOrder natural = ElementOrder::natural(6);
  CHECK(broken_circuit_complex(oracle::m1(), natural) == broken_circuit_complex(oracle::m2(), natural));
  CHECK_THROWS_AS(broken_circuit_complex(Matroid::from_circuits(2, {Subset::of({0})}), ElementOrder::natural(2)), Error);
}

TEST_CASE("property: a broken-circuit complex is a cone over the order-least element") {
  Rng rng(4);
  for (const Matroid& m : random_matroids(8, 30)) {
    if (!m.loops().empty() || m.size() == 0) continue;
    const ElementOrder order = random_order(rng, m.size());
    const SimplicialComplex c = broken_circuit_complex(m, order);
    const int apex = order.sequence().front();
    for (Subset f : c.facets()) CHECK(f.contains(apex));
    // Deleting the apex leaves the h-vector unchanged.
    std::vector<Subset> link;
    for (Subset f : c.facets()) link.push_back(f.without(apex));
    const SimplicialComplex base(m.size(), link);
    CHECK(trim(h_vector(base).entries) == trim(h_vector(c).entries));
  }
}

TEST_CASE("contracting the first subdivision pair leaves a simplex") {
  for (int s = 3; s <= 6; ++s) {
    const Matroid m = subdivided_parallel_matroid(s);
    const ElementOrder order = ElementOrder::natural(2 * s);
    const Minor k = contract(m, Subset::of({2 * s - 2, 2 * s - 1}));
    const SimplicialComplex c = broken_circuit_complex(k.matroid, order.induced(k.labels));
    REQUIRE(c.facets().size() == 1);
    CHECK(c.facets().front().size() == s - 1);
  }
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(SimplicialComplex(0, {})) == std::vector<std::int64_t>{1});
  CHECK(f_vector(independence_complex(Matroid::uniform(2, 4)).complex) == std::vector<std::int64_t>{1, 4, 6});
  CHECK(f_vector(independence_complex(oracle::circuit(3)).complex) == std::vector<std::int64_t>{1, 3, 3});
  const auto g5 = independence_complex(subdivided_parallel_matroid(5)).complex;
  CHECK(f_vector(g5) == std::vector<std::int64_t>{1, 10, 45, 120, 200, 192, 80});
}

TEST_CASE("h-vectors") {
  for (int s = 3; s <= 5; ++s)
    CHECK(h_vector(independence_complex(oracle::circuit(s)).complex).entries == std::vector<std::int64_t>(static_cast<std::size_t>(s), 1));
  CHECK(h_vector(independence_complex(Matroid::uniform(2, 4)).complex).entries == std::vector<std::int64_t>{1, 2, 3});
  const HVector bc = h_vector(broken_circuit_complex(subdivided_parallel_matroid(5), ElementOrder::natural(10)));
  CHECK(bc.entries == std::vector<std::int64_t>{1, 4, 10, 10, 5, 1, 0});
  CHECK(bc.top_degree() == 5);
}

TEST_CASE("broken-circuit h-vector of M(s) is C(s,i) with h_1 = s - 1") {
  Rng rng(6);
  for (int s = 2; s <= 7; ++s) {
    const Matroid m = subdivided_parallel_matroid(s);
    for (int trial = 0; trial < 2; ++trial) {
      const ElementOrder order = trial == 0 ? ElementOrder::natural(2 * s) : random_order(rng, 2 * s);
      const HVector h = h_vector(broken_circuit_complex(m, order));
      for (int i = 0; i <= s + 1; ++i) {
        const std::int64_t expected = i == 1 ? s - 1 : oracle::binomial(s, i);
        CHECK(h.at(static_cast<std::size_t>(i)) == expected);
      }
    }
  }
}

TEST_CASE("recursion base cases") {
  const Matroid coloop = Matroid::uniform(1, 1);
  CHECK(trim(h_recursive(coloop, ComplexKind::independence).entries) == Poly{1});
  CHECK(trim(h_recursive(coloop, ComplexKind::broken_circuit).entries) == Poly{1});
  const Matroid loop = Matroid::uniform(0, 1);
  CHECK(h_recursive(loop, ComplexKind::independence).entries == Poly{1});
  // A loop makes the broken-circuit complex void, so the h-vector vanishes.
  CHECK(h_recursive(loop, ComplexKind::broken_circuit).entries == Poly{0});
  const Matroid empty = Matroid::uniform(0, 0);
  CHECK(h_recursive(empty, ComplexKind::independence).entries == Poly{1});
}

TEST_CASE("direct sums multiply h-polynomials") {
  const std::vector<std::pair<Matroid, Matroid>> pairs{
      {oracle::m1(), oracle::m2()},
      {oracle::circuit(2), oracle::circuit(3)},
      {Matroid::uniform(2, 4), Matroid::uniform(1, 1)},
  };
  for (const auto& [a, b] : pairs) {
    const Matroid sum = direct_sum(a, b);
    for (ComplexKind kind : {ComplexKind::independence, ComplexKind::broken_circuit}) {
      CHECK(trim(h_recursive(sum, kind).entries) ==
            mul(trim(h_recursive(a, kind).entries), trim(h_recursive(b, kind).entries)));
    }
  }
}

TEST_CASE("series-class identity on M(3)") {
  const Matroid m = subdivided_parallel_matroid(3);
  const Subset s = Subset::of({0, 1});
  const int r = m.rank();
  const Matroid con = contract(m, s).matroid;
  const Matroid del = delete_elements(m, s).matroid;
  const Poly lhs = descending(h_recursive(m, ComplexKind::independence), r);
  const Poly rhs = add(descending(h_recursive(con, ComplexKind::independence), con.rank()),
                       mul(descending(h_recursive(del, ComplexKind::independence), del.rank()), Poly{1, 1}));
  CHECK(lhs == rhs);
}

TEST_CASE("deletion-contraction and coloop clauses") {
  const Matroid m = Matroid::uniform(2, 4);
  const Matroid del = delete_elements(m, Subset::single(3)).matroid;
  const Matroid con = contract(m, Subset::single(3)).matroid;
  // Written with h(t) = Σ h_i t^(r-i).
  CHECK(descending(h_recursive(m, ComplexKind::independence), 2) ==
        add(descending(h_recursive(del, ComplexKind::independence), 2),
            descending(h_recursive(con, ComplexKind::independence), 1)));
  // The coloop clause holds with h(t) = Σ h_i t^i.
  const Matroid with_coloop = direct_sum(m, Matroid::uniform(1, 1));
  CHECK(trim(h_recursive(with_coloop, ComplexKind::independence).entries) ==
        trim(h_recursive(m, ComplexKind::independence).entries));
}

TEST_CASE("g-vectors") {
  CHECK(g_vector(HVector{{1, 2, 3}}, 2) == std::vector<std::int64_t>{1, 1});
  CHECK(g_vector(HVector{{1, 1, 1, 1, 1}}, 4) == std::vector<std::int64_t>{1, 0, 0});
  CHECK(g_vector(HVector{{1, 4, 10, 10, 5, 1, 0}}, 5) == std::vector<std::int64_t>{1, 3, 6});
}

TEST_CASE("property: recursion equals the direct h-vector for both complexes") {
  Rng rng(12);
  for (const Matroid& m : random_matroids(14, 40)) {
    CHECK(h_recursive(m, ComplexKind::independence) == h_vector(independence_complex(m).complex));
    if (!m.loops().empty()) continue;
    const ElementOrder order = random_order(rng, m.size());
    CHECK(h_recursive(m, ComplexKind::broken_circuit, order) == h_vector(broken_circuit_complex(m, order)));
  }
}

TEST_CASE("property: face numbers match independent-set counts and Whitney numbers") {
  Rng rng(15);
  for (const Matroid& m : random_matroids(16, 30)) {
    const auto f = f_vector(independence_complex(m).complex);
    CHECK(f == oracle::independent_counts(m.bases(), m.size()));
    CHECK(sum(h_vector(independence_complex(m).complex)) == static_cast<std::int64_t>(m.bases().size()));
    if (!m.loops().empty()) continue;
    CHECK(f_vector(broken_circuit_complex(m, random_order(rng, m.size()))) == oracle::whitney_numbers(m.bases(), m.size()));
  }
}

TEST_CASE("property: the last nonzero broken-circuit h entry sits at rank minus components") {
  Rng rng(18);
  std::vector<Matroid> ms = random_matroids(19, 30);
  for (int s = 2; s <= 5; ++s) ms.push_back(subdivided_parallel_matroid(s));
  ms.push_back(direct_sum(oracle::circuit(3), subdivided_parallel_matroid(3)));
  for (const Matroid& m : ms) {
    if (!m.loops().empty()) continue;
    const HVector h = h_vector(broken_circuit_complex(m, random_order(rng, m.size())));
    CHECK(h.top_degree() == m.rank() - m.components());
  }
}

TEST_CASE("complexes reject oversized vertex sets") {
  CHECK_THROWS_AS(SimplicialComplex(17, {}), Error);
}
