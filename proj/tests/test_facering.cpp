#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gelement/counterexample.hpp"
#include "gelement/error.hpp"
#include "gelement/facering.hpp"
#include "gelement/macaulay.hpp"
#include "oracles.hpp"

using namespace gelement;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::parse_error;
}

SimplicialComplex ind(const Matroid& m) { return independence_complex(m).complex; }

SimplicialComplex simplex(int n) { return SimplicialComplex(n, {Subset::range(n)}); }

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

/// Small complexes where the all-monomials presentation stays cheap.
std::vector<SimplicialComplex> small_complexes() {
  return {ind(Matroid::uniform(2, 4)),
          ind(oracle::circuit(3)),
          ind(oracle::circuit(4)),
          ind(Matroid::uniform(1, 2)),
          broken_circuit_complex(oracle::m1(), ElementOrder::natural(6)),
          ind(direct_sum(oracle::circuit(2), oracle::circuit(3))),
          broken_circuit_complex(subdivided_parallel_matroid(3), ElementOrder::natural(6))};
}

std::vector<std::int64_t> as_int(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("face monomials") {
  const SimplicialComplex u = ind(Matroid::uniform(2, 4));
  const auto d0 = face_monomials(u, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0].degree() == 0);
  CHECK(face_monomials(u, 1).size() == 4);
  CHECK(face_monomials(u, 2).size() == 10);
  // Degree 3 on U(2,4): 4 cubes and 12 products x_a^2 x_b.
  CHECK(face_monomials(u, 3).size() == 16);
  // The empty-face-only complex has just the constant monomial.
  CHECK(face_monomials(SimplicialComplex(0, {}), 2).empty());
}

TEST_CASE("grevlex order") {
  const auto m = face_monomials(simplex(3), 2);
  const std::vector<Monomial> expected{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                       mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  CHECK(m == expected);
  CHECK(grevlex_greater(mono({1, 0, 0, 0}), mono({0, 0, 0, 1})));
  CHECK(grevlex_greater(mono({0, 0, 2}), mono({1, 0, 0})));
  CHECK_FALSE(grevlex_greater(mono({1, 1}), mono({1, 1})));
}

TEST_CASE("reduction modulo the face ideal") {
  // Path a - b - c: {0,1} and {1,2} are faces, {0,2} is not.
  const SimplicialComplex c(3, {Subset::of({0, 1}), Subset::of({1, 2})});
  const auto basis = face_monomials(c, 2);
  Polynomial face{{mono({1, 1, 0}), 3}};
  Polynomial nonface{{mono({1, 0, 1}), 5}};
  Polynomial both{{mono({1, 1, 0}), 1}, {mono({1, 0, 1}), 1}};
  std::vector<Rational> expected(basis.size());
  const auto at = std::find(basis.begin(), basis.end(), mono({1, 1, 0})) - basis.begin();
  expected[static_cast<std::size_t>(at)] = 3;
  CHECK(reduce_mod_ideal(face, c, basis) == expected);
  CHECK(reduce_mod_ideal(nonface, c, basis) == std::vector<Rational>(basis.size()));
  expected[static_cast<std::size_t>(at)] = 1;
  CHECK(reduce_mod_ideal(both, c, basis) == expected);
}

TEST_CASE("l.s.o.p. verification") {
  const LinearForms identity = LinearForms::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(lsop_verify(simplex(3), identity));
  const SimplicialComplex u = ind(Matroid::uniform(2, 4));
  CHECK_FALSE(lsop_verify(u, LinearForms::from_rows({{1, 2, 0, 4}, {5, 6, 0, 8}})));
  CHECK(kind_of([&] { lsop_verify(u, identity); }) == ErrorKind::dimension_mismatch);
  Rng rng(5);
  int passed = 0;
  for (int t = 0; t < 50; ++t) passed += lsop_verify(u, random_forms(2, 4, 97, rng)) ? 1 : 0;
  CHECK(passed >= 48);
}

TEST_CASE("property: l.s.o.p. verification equals checking every face") {
  Rng rng(8);
  const SimplicialComplex u = ind(Matroid::uniform(2, 4));
  for (int t = 0; t < 200; ++t) {
    const LinearForms k = random_forms(2, 4, 1, rng);
    bool every_face = true;
    for (const auto& layer : u.faces_by_size())
      for (Subset f : layer) {
        std::vector<std::vector<mpq_class>> cols;
        for (int v : f.elements()) cols.push_back({k(0, v), k(1, v)});
        if (oracle::minor_rank(cols) != static_cast<std::size_t>(f.size())) every_face = false;
      }
    CHECK(lsop_verify(u, k) == every_face);
  }
}

TEST_CASE("random l.s.o.p. sampling") {
  Rng rng(1);
  const LsopSample s = lsop_random(simplex(3), 1, rng);
  CHECK(s.attempts >= 1);
  CHECK(s.attempts <= 64);
  const SimplicialComplex u = ind(Matroid::uniform(2, 4));
  Rng a(42);
  Rng b(42);
  CHECK(lsop_random(u, 97, a).forms == lsop_random(u, 97, b).forms);
  Rng z(1);
  CHECK(kind_of([&] { lsop_random(u, 0, z); }) == ErrorKind::lsop_not_found);
}

TEST_CASE("graded pieces") {
  const SimplicialComplex u = ind(Matroid::uniform(2, 4));
  Rng rng(3);
  const LinearForms k = lsop_random(u, 97, rng).forms;
  CHECK(graded_piece(u, k, 0).quotient_dim == 1);
  ArtinianQuotient q(u, k);
  CHECK(as_int(q.dimensions(3)) == std::vector<std::int64_t>{1, 2, 3, 0});
  const SimplicialComplex bc = broken_circuit_complex(subdivided_parallel_matroid(5), ElementOrder::natural(10));
  ArtinianQuotient r(bc, lsop_random(bc, 97, rng).forms);
  CHECK(as_int(r.dimensions(6)) == std::vector<std::int64_t>{1, 4, 10, 10, 5, 1, 0});
  CHECK(kind_of([&] { ArtinianQuotient(u, LinearForms::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})); }) ==
        ErrorKind::not_an_lsop);
}

TEST_CASE("a one-dimensional quotient by hand") {
  // U(1,2): faces {x_0}, {x_1}; Θ = x_0 + x_1 leaves R_1 spanned by x_0, with x_1 = -x_0.
  const SimplicialComplex c = ind(Matroid::uniform(1, 2));
  const LinearForms theta = LinearForms::from_rows({{1, 1}});
  ArtinianQuotient q(c, theta);
  CHECK(as_int(q.dimensions(2)) == std::vector<std::int64_t>{1, 1, 0});
  const auto nf = q.normal_form(1, std::vector<Rational>{0, 1});
  REQUIRE(nf.size() == 1);
  CHECK(abs(nf[0]) == 1);
  const GElementReport r = g_element_verify(c, theta, {1, 0});
  CHECK(r.is_g_element);
  CHECK(r.top_degree == 1);
  // ω = x_0 - x_1 still works; ω = 0 does not.
  CHECK(g_element_verify(c, theta, {1, -1}).is_g_element);
  CHECK_FALSE(g_element_verify(c, theta, {0, 0}).is_g_element);
}

TEST_CASE("property: the two presentations agree") {
  Rng rng(10);
  for (const SimplicialComplex& c : small_complexes()) {
    for (int trial = 0; trial < 2; ++trial) {
      const LinearForms k = lsop_random(c, 97, rng).forms;
      const LinearForm omega = random_forms(1, c.vertex_count(), 97, rng).row(0);
      ArtinianQuotient sq(c, k, Field::rationals(), Presentation::squarefree);
      ArtinianQuotient all(c, k, Field::rationals(), Presentation::all_monomials);
      const int top = c.face_size() + 1;
      CHECK(sq.dimensions(top) == all.dimensions(top));
      for (int i = 0; i <= c.face_size(); ++i) {
        for (int j = i; j <= c.face_size(); ++j) {
          CHECK(sq.multiplication_injective(omega, i, j).injective == all.multiplication_injective(omega, i, j).injective);
          CHECK(sq.multiplication_injective(omega, i, j).augmented_rank - sq.multiplication_injective(omega, i, j).relation_rank ==
                all.multiplication_injective(omega, i, j).augmented_rank - all.multiplication_injective(omega, i, j).relation_rank);
        }
        if (i >= 1) CHECK(sq.cokernel_dimension(omega, i) == all.cokernel_dimension(omega, i));
      }
    }
  }
}

TEST_CASE("property: iterated multiplication equals the expanded power") {
  Rng rng(9);
  const SimplicialComplex c = ind(oracle::circuit(4));
  const LinearForms k = lsop_random(c, 97, rng).forms;
  const LinearForm omega = random_forms(1, 4, 5, rng).row(0);
  ArtinianQuotient q(c, k, Field::rationals(), Presentation::all_monomials);
  const auto& p1 = q.piece(1);
  for (std::size_t b = 0; b < p1.quotient_basis.size(); ++b) {
    const Monomial start = p1.monomials[p1.quotient_basis[b]];
    // ω^2 · m written out as a polynomial before any reduction.
    Polynomial power;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) {
        Monomial m = start;
        ++m.exponents[static_cast<std::size_t>(u)];
        ++m.exponents[static_cast<std::size_t>(v)];
        power[m] += Rational(omega[static_cast<std::size_t>(u)] * omega[static_cast<std::size_t>(v)]);
      }
    const auto reduced = reduce_mod_ideal(power, c, q.piece(3).monomials);
    const auto image = q.power_image(omega, 1, b, 3);
    REQUIRE(image.size() == reduced.size());
    for (std::size_t t = 0; t < image.size(); ++t) CHECK(image[t] == reduced[t].get_str());
  }
}

TEST_CASE("injectivity certificates") {
  const SimplicialComplex c = ind(oracle::circuit(4));
  Rng rng(2);
  const LinearForms k = lsop_random(c, 97, rng).forms;
  const LinearForm omega = random_forms(1, 4, 97, rng).row(0);
  const InjectivityCertificate same = mult_injective(c, k, omega, 2, 2);
  CHECK(same.injective);
  const InjectivityCertificate vacuous = mult_injective(c, k, omega, 4, 5);
  CHECK(vacuous.source_dim == 0);
  CHECK(vacuous.injective);
  CHECK(kind_of([&] { mult_injective(c, k, omega, 3, 1); }) == ErrorKind::dimension_mismatch);
  const InjectivityCertificate up = mult_injective(c, k, omega, 0, 3);
  CHECK(up.injective);
  CHECK(up.augmented_rank == up.relation_rank + 1);
}

TEST_CASE("the broken-circuit quotient of M(5) has a degree-2 kernel") {
  const SimplicialComplex bc = broken_circuit_complex(subdivided_parallel_matroid(5), ElementOrder::natural(10));
  Rng rng(4);
  for (int t = 0; t < 3; ++t) {
    const LinearForms k = lsop_random(bc, 97, rng).forms;
    const LinearForm omega = random_forms(1, 10, 97, rng).row(0);
    CHECK_FALSE(mult_injective(bc, k, omega, 2, 3).injective);
    CHECK_FALSE(g_element_verify(bc, k, omega).is_g_element);
    const GElementReport modp = g_element_verify(bc, k, omega, Field::modulo(2147483647));
    CHECK_FALSE(modp.is_g_element);
    CHECK(modp.arithmetic.find("exact") != std::string::npos);
  }
}

TEST_CASE("g-element verification") {
  const SimplicialComplex c3 = ind(oracle::circuit(3));
  Rng rng(6);
  const LinearForms k = lsop_random(c3, 97, rng).forms;
  const GElementReport r = g_element_verify(c3, k, random_forms(1, 3, 97, rng).row(0));
  CHECK(r.is_g_element);
  CHECK(r.top_degree == 2);
  CHECK(r.certificates.size() == 2);
  // {∅}: r = 0 and only the identity map is checked.
  const GElementReport empty = g_element_verify(SimplicialComplex(0, {}), LinearForms(0, 0), {});
  CHECK(empty.is_g_element);
  CHECK(empty.top_degree == 0);
}

TEST_CASE("g-element search") {
  const GWitness u = g_element_search(Matroid::uniform(2, 4), SearchOptions{});
  CHECK(u.trial <= 3);
  CHECK(u.report.is_g_element);
  const auto replay = search_trial_forms(u.seed, u.trial, 2, 4, u.bound);
  CHECK(replay.first == u.theta);
  CHECK(replay.second == u.omega);
  const GWitness m5 = g_element_search(subdivided_parallel_matroid(5), SearchOptions{});
  CHECK(m5.report.is_g_element);
  CHECK(kind_of([] { g_element_search(Matroid::uniform(1, 1), SearchOptions{}); }) == ErrorKind::has_coloops);
  SearchOptions hopeless;
  hopeless.bound = 0;
  hopeless.trials = 3;
  CHECK(kind_of([&] { g_element_search(Matroid::uniform(2, 4), hopeless); }) == ErrorKind::witness_not_found);
  const SearchLog log = g_element_trials(Matroid::uniform(2, 4), hopeless);
  CHECK_FALSE(log.witness.has_value());
  CHECK(log.attempts.size() == 3);
}

TEST_CASE("Hilbert check") {
  const SimplicialComplex c4 = ind(oracle::circuit(4));
  Rng rng(7);
  const HilbertTable t = hilbert_check(c4, lsop_random(c4, 97, rng).forms);
  CHECK(t.all_match());
  REQUIRE(t.rows.size() == 5);
  for (int d = 0; d < 4; ++d) CHECK(t.rows[static_cast<std::size_t>(d)].quotient_dim == 1);
  CHECK(t.rows[4].quotient_dim == 0);
  CHECK(kind_of([&] { hilbert_check(c4, LinearForms(3, 4)); }) == ErrorKind::not_an_lsop);
}

TEST_CASE("property: quotient dimensions equal h for random matroids, over Q and mod p") {
  Rng rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = static_cast<int>(rng.uniform(3, 7));
    const Matroid m = oracle::random_linear_matroid(rng, static_cast<int>(rng.uniform(1, 3)), n, 1);
    const SimplicialComplex c = ind(m);
    const LinearForms k = lsop_random(c, 97, rng).forms;
    const HilbertTable exact = hilbert_check(c, k);
    CHECK(exact.all_match());
    const std::uint64_t p = rng.prime(31);
    ArtinianQuotient qp(c, k, Field::modulo(p));
    ArtinianQuotient qe(c, k);
    CHECK(qp.dimensions(c.face_size() + 1) == qe.dimensions(c.face_size() + 1));
  }
}

TEST_CASE("property: injective mod p implies injective over Q") {
  Rng rng(22);
  int compared = 0;
  for (const SimplicialComplex& c : small_complexes()) {
    const LinearForms k = lsop_random(c, 97, rng).forms;
    ArtinianQuotient qe(c, k);
    for (int t = 0; t < 3; ++t) {
      const LinearForm omega = random_forms(1, c.vertex_count(), 2, rng).row(0);
      const std::uint64_t p = rng.prime(5);  // small primes to provoke disagreements
      if (!lsop_verify(c, k)) continue;
      std::optional<ArtinianQuotient> qp;
      try {
        qp.emplace(c, k, Field::modulo(p));
      } catch (const Error&) {
        continue;
      }
      for (int i = 0; i <= c.face_size(); ++i)
        for (int j = i; j <= c.face_size(); ++j)
          if (qp->dimension(i) == qe.dimension(i) && qp->dimension(j) == qe.dimension(j) &&
              qp->multiplication_injective(omega, i, j).injective) {
            CHECK(qe.multiplication_injective(omega, i, j).injective);
            ++compared;
          }
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("property: a g-element forces the inequality families and the g-vector quotient") {
  Rng rng(23);
  std::vector<Matroid> ms{Matroid::uniform(2, 4), Matroid::uniform(3, 5), oracle::circuit(4), oracle::m1(), oracle::m2(),
                          subdivided_parallel_matroid(3)};
  for (int t = 0; t < 6; ++t) {
    const Matroid m = oracle::random_linear_matroid(rng, 3, 6, 1);
    if (m.coloops().empty()) ms.push_back(m);
  }
  for (const Matroid& m : ms) {
    SearchOptions o;
    o.seed = static_cast<std::uint64_t>(rng.uniform(1, 1000));
    o.exact = true;
    const GWitness w = g_element_search(m, o);
    const auto& d = w.report.dimensions;
    const int r = w.report.top_degree;
    for (int i = 1; 2 * i <= r; ++i) CHECK(d[static_cast<std::size_t>(i - 1)] <= d[static_cast<std::size_t>(i)]);
    for (int i = 0; 2 * i <= r; ++i) CHECK(d[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(r - i)]);
    const SimplicialComplex c = ind(m);
    ArtinianQuotient q(c, w.theta);
    std::vector<std::int64_t> cokernel;
    for (int i = 0; 2 * i <= r; ++i) cokernel.push_back(static_cast<std::int64_t>(q.cokernel_dimension(w.omega, i)));
    const HVector h = h_vector(c);
    CHECK(cokernel == g_vector(h, r));
    CHECK(is_o_sequence(cokernel).holds);
    CHECK(check_g_inequalities(h, r).all());
  }
}

TEST_CASE("property: normal forms and relation combinations are consistent") {
  Rng rng(24);
  const SimplicialComplex c = ind(Matroid::uniform(3, 5));
  const LinearForms k = lsop_random(c, 97, rng).forms;
  ArtinianQuotient q(c, k);
  for (int d = 1; d <= 3; ++d) {
    const GradedPiece& p = q.piece(d);
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> v(p.monomials.size());
      for (auto& x : v) x = static_cast<long>(rng.uniform(-5, 5));
      const auto nf = q.normal_form(d, v);
      std::vector<Rational> diff = v;
      for (std::size_t b = 0; b < nf.size(); ++b) diff[p.quotient_basis[b]] -= nf[b];
      CHECK(q.relation_combination(d, diff).has_value());
      const bool zero_class = std::all_of(nf.begin(), nf.end(), [](const Rational& x) { return x == 0; });
      CHECK(zero_class == q.relation_combination(d, v).has_value());
    }
  }
}

TEST_CASE("the subdivided pair") {
  CHECK(subdivided_pair(5, ElementOrder::natural(10)) == std::pair<int, int>{8, 9});
  CHECK(subdivided_pair(3, ElementOrder::from_sequence({1, 3, 5, 0, 2, 4})) == std::pair<int, int>{4, 5});
  Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> seq(10);
    std::iota(seq.begin(), seq.end(), 0);
    for (int i = 9; i > 0; --i) std::swap(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(rng.uniform(0, i))]);
    const auto [a, b] = subdivided_pair(5, ElementOrder::from_sequence(seq));
    CHECK(b == a + 1);
    CHECK(a % 2 == 0);
    // No other pair is complete among the elements above min(pos a, pos b).
    const auto pos = [&](int e) { return std::find(seq.begin(), seq.end(), e) - seq.begin(); };
    const auto cut = std::min(pos(a), pos(b));
    for (int u = 0; u < 5; ++u)
      if (2 * u != a) CHECK(std::min(pos(2 * u), pos(2 * u + 1)) < cut);
  }
}

TEST_CASE("counterexample reports") {
  CounterexampleOptions o;
  o.trials = 3;
  const CounterexampleReport r5 = bc_counterexample(o);
  CHECK(r5.pair == std::pair<int, int>{8, 9});
  CHECK(r5.h.entries == std::vector<std::int64_t>{1, 4, 10, 10, 5, 1, 0});
  CHECK(r5.inequalities.all());
  REQUIRE(r5.obstruction_confirmed.has_value());
  CHECK(*r5.obstruction_confirmed);
  for (const auto& t : r5.trials) {
    CHECK(t.class_nonzero);
    CHECK(t.annihilated);
    CHECK_FALSE(t.single_step.injective);
    CHECK_FALSE(t.lefschetz_power.has_value());
  }
  CHECK(r5.kernel_class.size() == 10);
  CHECK_FALSE(r5.membership.empty());

  o.s = 6;
  o.trials = 1;
  const CounterexampleReport r6 = bc_counterexample(o);
  REQUIRE(r6.trials.front().lefschetz_power.has_value());
  CHECK(r6.trials.front().lefschetz_power->to_degree == 4);
  CHECK(r6.trials.front().class_nonzero);
  CHECK(r6.trials.front().annihilated);
  CHECK(r6.trials.front().power_annihilated == std::optional<bool>(true));
  CHECK(*r6.obstruction_confirmed);

  o.s = 2;
  const CounterexampleReport r2 = bc_counterexample(o);
  CHECK_FALSE(r2.obstruction_confirmed.has_value());
  CHECK_FALSE(r2.note.empty());
  o.s = 1;
  CHECK(kind_of([&] { bc_counterexample(o); }) == ErrorKind::invalid_degree);
}
