#pragma once

// Graded pieces of the Artinian reduction R(Δ, Θ) = k[Δ] / <Θ> over the
// rationals (or over F_p as a fast path), computed degree by degree with
// plain linear algebra. The Stanley-Reisner ideal is monomial, so reducing a
// polynomial modulo I_Δ is a projection onto face-supported monomials.
//
// Two presentations of R_d are available:
//
//  * all_monomials: every degree-d monomial supported on a face, modulo the
//    projections of θ_j · m for all degree-(d-1) face monomials m.
//
//  * squarefree: the squarefree face monomials x^F with |F| = d, modulo the
//    relations μ · x^G where |G| = d - 1 and μ runs over the linear forms in
//    span(Θ) vanishing on G. Every such product is squarefree, and a
//    non-squarefree monomial x_i · x^G (i ∈ G) is rewritten through the form
//    in span(Θ) that restricts to x_i on G. This is the presentation used at
//    scale; the all-monomials one is kept as an independent cross-check.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gelement/complex.hpp"
#include "gelement/linalg.hpp"
#include "gelement/random.hpp"

namespace gelement {

using linalg::Rational;

/// Integer linear forms in x_0..x_{n-1}; row j holds the coefficients of θ_j.
class LinearForms {
 public:
  LinearForms() = default;
  LinearForms(int count, int variables) : count_(count), variables_(variables), data_(static_cast<std::size_t>(count * variables), 0) {}
  static LinearForms from_rows(const std::vector<std::vector<long>>& rows);

  int count() const noexcept { return count_; }
  int variables() const noexcept { return variables_; }
  long operator()(int j, int v) const { return data_[static_cast<std::size_t>(j * variables_ + v)]; }
  long& operator()(int j, int v) { return data_[static_cast<std::size_t>(j * variables_ + v)]; }
  std::vector<long> row(int j) const;
  std::vector<std::vector<long>> rows() const;

  friend bool operator==(const LinearForms&, const LinearForms&) = default;

 private:
  int count_ = 0;
  int variables_ = 0;
  std::vector<long> data_;
};

/// A single integer linear form ω.
using LinearForm = std::vector<long>;

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  Subset support() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Graded reverse-lexicographic order: higher degree first, then a > b when
/// the last nonzero entry of a - b is negative.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Degree-d monomials whose support is a face, in decreasing grevlex order.
std::vector<Monomial> face_monomials(const SimplicialComplex& c, int d);

using Polynomial = std::map<Monomial, Rational>;

/// Coordinates of p modulo I_Δ over `basis` (the face monomials of one degree).
/// Monomials whose support is not a face are dropped.
std::vector<Rational> reduce_mod_ideal(const Polynomial& p, const SimplicialComplex& c, std::span<const Monomial> basis);

/// Θ is a linear system of parameters iff its columns are independent on every facet.
/// Throws Error{dimension_mismatch} unless K has face_size() rows and vertex_count() columns.
bool lsop_verify(const SimplicialComplex& c, const LinearForms& theta);

struct LsopSample {
  LinearForms forms;
  int attempts = 0;
};

/// Samples entries uniformly from [-bound, bound] until lsop_verify passes.
/// Throws Error{lsop_not_found} after `max_attempts` failures.
LsopSample lsop_random(const SimplicialComplex& c, long bound, Rng& rng, int max_attempts = 64);

/// Draws a form with entries uniform in [-bound, bound].
LinearForms random_forms(int count, int variables, long bound, Rng& rng);

enum class Presentation { squarefree, all_monomials };

/// Coefficient field: the rationals, or F_p for a prime p < 2^62.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field modulo(std::uint64_t prime);

  bool exact() const noexcept { return prime_ == 0; }
  std::uint64_t prime() const noexcept { return prime_; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

using RelationMatrix = std::variant<linalg::ExactMatrix, linalg::ModMatrix>;

/// One graded piece R_d. Relations are stored as rows over `monomials`.
struct GradedPiece {
  int degree = 0;
  Presentation presentation = Presentation::squarefree;
  std::vector<Monomial> monomials;
  RelationMatrix relations;
  std::size_t relation_rank = 0;
  std::size_t quotient_dim = 0;
  /// Indices into `monomials` outside the pivot columns of the relations.
  std::vector<std::size_t> quotient_basis;
  /// Indices of relation rows forming a basis of the relation space.
  std::vector<std::size_t> basis_rows;
};

/// Rank data certifying (or refuting) injectivity of ω^p : R_i -> R_j.
struct InjectivityCertificate {
  int from_degree = 0;
  int to_degree = 0;
  std::size_t source_dim = 0;
  std::size_t relation_rank = 0;
  std::size_t augmented_rank = 0;
  bool injective = true;
  Field field = Field::rationals();
};

/// The quotient ring R(Δ, Θ) over one field. Pieces are computed on demand
/// and cached, so an instance should not be shared between threads.
class ArtinianQuotient {
 public:
  /// Throws Error{dimension_mismatch} if Θ has the wrong shape and
  /// Error{not_an_lsop} if Θ is not an l.s.o.p. over `field`.
  ArtinianQuotient(const SimplicialComplex& c, const LinearForms& theta, Field field = Field::rationals(),
                   Presentation presentation = Presentation::squarefree);
  ~ArtinianQuotient();
  ArtinianQuotient(ArtinianQuotient&&) noexcept;
  ArtinianQuotient& operator=(ArtinianQuotient&&) noexcept;

  const SimplicialComplex& complex() const;
  const LinearForms& forms() const;
  Field field() const;
  Presentation presentation() const;

  const GradedPiece& piece(int d);
  std::size_t dimension(int d) { return piece(d).quotient_dim; }
  /// Dimensions of R_0 .. R_{max_degree}.
  std::vector<std::size_t> dimensions(int max_degree);

  /// Whether ω^(to - from) maps R_from injectively into R_to.
  InjectivityCertificate multiplication_injective(const LinearForm& omega, int from, int to);

  /// dim R_d / ω·R_{d-1} (dim R_0 for d = 0).
  std::size_t cokernel_dimension(const LinearForm& omega, int d);

  /// Image of the quotient-basis monomial `basis_index` of R_from under ω^(to - from),
  /// as a vector over piece(to).monomials (entries printed as rationals or residues).
  std::vector<std::string> power_image(const LinearForm& omega, int from, std::size_t basis_index, int to);

  /// Exact only. Coefficients y with v = Σ y_k · relations[basis_rows[k]], or nullopt
  /// when v is not in the relation span.
  std::optional<std::vector<Rational>> relation_combination(int d, std::span<const Rational> v);
  /// Exact only. Coordinates of the class of v over piece(d).quotient_basis.
  std::vector<Rational> normal_form(int d, std::span<const Rational> v);
  /// Exact only. ω · v for v over piece(d).monomials, as a vector over piece(d+1).monomials.
  std::vector<Rational> multiply(const LinearForm& omega, int d, std::span<const Rational> v);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Graded piece in the given presentation (exact arithmetic).
GradedPiece graded_piece(const SimplicialComplex& c, const LinearForms& theta, int d,
                         Presentation presentation = Presentation::squarefree);

InjectivityCertificate mult_injective(const SimplicialComplex& c, const LinearForms& theta, const LinearForm& omega,
                                      int from, int to, Field field = Field::rationals(),
                                      Presentation presentation = Presentation::squarefree);

struct GElementReport {
  bool is_g_element = true;
  int top_degree = 0;
  std::vector<std::size_t> dimensions;
  std::vector<InjectivityCertificate> certificates;
  /// "exact" or "mod p" with the primes used; exact re-checks are noted.
  std::string arithmetic;
};

/// Checks ω^(r-2i) : R_i -> R_{r-i} for 0 <= i <= r/2, where r is the last
/// degree with R_r != 0. With a modular field, dimensions are first compared
/// with the combinatorial h-vector (any mismatch falls back to exact), and
/// every non-injective verdict is re-verified exactly.
GElementReport g_element_verify(const SimplicialComplex& c, const LinearForms& theta, const LinearForm& omega,
                                Field field = Field::rationals());

struct TrialRecord {
  int trial = 0;
  bool lsop = false;
  bool g_element = false;
};

struct GWitness {
  std::uint64_t seed = 0;
  long bound = 0;
  int trial = 0;
  LinearForms theta;
  LinearForm omega;
  GElementReport report;
  std::vector<TrialRecord> attempts;
  /// labels[vertex] = matroid element.
  std::vector<int> labels;
};

struct SearchOptions {
  int trials = 16;
  long bound = 97;
  std::uint64_t seed = 1;
  bool exact = false;
};

struct SearchLog {
  std::optional<GWitness> witness;
  std::vector<TrialRecord> attempts;
};

/// Like g_element_search, but a failed search returns the trial log instead of throwing.
SearchLog g_element_trials(const Matroid& m, const SearchOptions& options);

/// Seeded search for (Θ, ω) with Θ an l.s.o.p. for the independence complex
/// and ω a g-element of the quotient. Throws Error{has_coloops} and
/// Error{witness_not_found}.
GWitness g_element_search(const Matroid& m, const SearchOptions& options);

/// The (Θ, ω) drawn on a given trial of g_element_search.
std::pair<LinearForms, LinearForm> search_trial_forms(std::uint64_t seed, int trial, int rank, int vertices, long bound);

/// Primes for the modular fast path are drawn from a stream derived from the seed.
std::vector<std::uint64_t> modular_primes(std::uint64_t seed, int count);

struct HilbertRow {
  int degree = 0;
  std::size_t quotient_dim = 0;
  std::int64_t h = 0;
  bool match = false;
};

struct HilbertTable {
  std::vector<HilbertRow> rows;
  bool all_match() const;
};

/// Compares dim R_d with h_d for 0 <= d <= s and checks R_{s+1} = 0.
HilbertTable hilbert_check(const SimplicialComplex& c, const LinearForms& theta, Field field = Field::rationals(),
                           Presentation presentation = Presentation::squarefree);

}  // namespace gelement
