#include "gelement/facering.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "gelement/error.hpp"

namespace gelement {

using linalg::EchelonSummary;
using linalg::ExactMatrix;
using linalg::ModMatrix;

LinearForms LinearForms::from_rows(const std::vector<std::vector<long>>& rows) {
  const int count = static_cast<int>(rows.size());
  const int variables = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  LinearForms out(count, variables);
  for (int j = 0; j < count; ++j) {
    if (static_cast<int>(rows[static_cast<std::size_t>(j)].size()) != variables)
      throw Error(ErrorKind::dimension_mismatch, "linear forms must all have the same length");
    for (int v = 0; v < variables; ++v) out(j, v) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
  }
  return out;
}

std::vector<long> LinearForms::row(int j) const {
  std::vector<long> out(static_cast<std::size_t>(variables_));
  for (int v = 0; v < variables_; ++v) out[static_cast<std::size_t>(v)] = (*this)(j, v);
  return out;
}

std::vector<std::vector<long>> LinearForms::rows() const {
  std::vector<std::vector<long>> out;
  for (int j = 0; j < count_; ++j) out.push_back(row(j));
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

Subset Monomial::support() const {
  Subset s;
  for (std::size_t v = 0; v < exponents.size(); ++v)
    if (exponents[v] != 0) s = s.with(static_cast<int>(v));
  return s;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  const std::size_t n = std::max(a.exponents.size(), b.exponents.size());
  for (std::size_t k = n; k-- > 0;) {
    const int ea = k < a.exponents.size() ? a.exponents[k] : 0;
    const int eb = k < b.exponents.size() ? b.exponents[k] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::vector<Monomial> face_monomials(const SimplicialComplex& c, int d) {
  if (d < 0) throw Error(ErrorKind::invalid_degree, "negative degree");
  const std::size_t n = static_cast<std::size_t>(c.vertex_count());
  std::vector<Monomial> out;
  if (d == 0) {
    out.push_back(Monomial{std::vector<int>(n, 0)});
    return out;
  }
  for (int k = 1; k <= std::min(d, c.face_size()); ++k) {
    for (Subset face : c.faces_of_size(k)) {
      const auto vertices = face.elements();
      Monomial m{std::vector<int>(n, 0)};
      // Distribute the d - k surplus over the support, each vertex keeping exponent >= 1.
      std::function<void(std::size_t, int)> place = [&](std::size_t idx, int left) {
        const auto v = static_cast<std::size_t>(vertices[idx]);
        if (idx + 1 == vertices.size()) {
          m.exponents[v] = 1 + left;
          out.push_back(m);
          return;
        }
        for (int extra = 0; extra <= left; ++extra) {
          m.exponents[v] = 1 + extra;
          place(idx + 1, left - extra);
        }
      };
      place(0, d - k);
    }
  }
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

std::vector<Rational> reduce_mod_ideal(const Polynomial& p, const SimplicialComplex& c, std::span<const Monomial> basis) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  std::vector<Rational> out(basis.size());
  for (const auto& [m, coefficient] : p) {
    if (!c.contains(m.support())) continue;
    const auto it = index.find(m);
    if (it == index.end()) throw Error(ErrorKind::dimension_mismatch, "face monomial outside the given basis");
    out[it->second] += coefficient;
  }
  return out;
}

namespace {

void check_shape(const SimplicialComplex& c, const LinearForms& theta) {
  if (theta.count() != c.face_size() || theta.variables() != c.vertex_count())
    throw Error(ErrorKind::dimension_mismatch, "expected " + std::to_string(c.face_size()) + " forms in " +
                                                   std::to_string(c.vertex_count()) + " variables, got " +
                                                   std::to_string(theta.count()) + "x" +
                                                   std::to_string(theta.variables()));
}

bool lsop_mod(const SimplicialComplex& c, const LinearForms& theta, std::uint64_t p) {
  for (Subset facet : c.facets()) {
    const auto vs = facet.elements();
    ModMatrix m(p, static_cast<std::size_t>(theta.count()), vs.size());
    for (int j = 0; j < theta.count(); ++j)
      for (std::size_t a = 0; a < vs.size(); ++a) m(static_cast<std::size_t>(j), a) = linalg::mod_reduce(theta(j, vs[a]), p);
    if (linalg::rank_mod(m) != vs.size()) return false;
  }
  return true;
}

}  // namespace

bool lsop_verify(const SimplicialComplex& c, const LinearForms& theta) {
  check_shape(c, theta);
  for (Subset facet : c.facets()) {
    const auto vs = facet.elements();
    ExactMatrix m(static_cast<std::size_t>(theta.count()), vs.size());
    for (int j = 0; j < theta.count(); ++j)
      for (std::size_t a = 0; a < vs.size(); ++a) m(static_cast<std::size_t>(j), a) = theta(j, vs[a]);
    if (linalg::rank_exact(m) != vs.size()) return false;
  }
  return true;
}

LinearForms random_forms(int count, int variables, long bound, Rng& rng) {
  LinearForms out(count, variables);
  for (int j = 0; j < count; ++j)
    for (int v = 0; v < variables; ++v) out(j, v) = static_cast<long>(rng.uniform(-bound, bound));
  return out;
}

LsopSample lsop_random(const SimplicialComplex& c, long bound, Rng& rng, int max_attempts) {
  if (bound < 0) throw Error(ErrorKind::dimension_mismatch, "coefficient bound must be nonnegative");
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    LinearForms k = random_forms(c.face_size(), c.vertex_count(), bound, rng);
    if (lsop_verify(c, k)) return {std::move(k), attempt};
  }
  throw Error(ErrorKind::lsop_not_found,
              "no l.s.o.p. with entries in [-" + std::to_string(bound) + ", " + std::to_string(bound) + "] after " +
                  std::to_string(max_attempts) + " attempts");
}

Field Field::modulo(std::uint64_t prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 62) || !linalg::is_prime(prime))
    throw std::invalid_argument("modulus must be a prime below 2^62");
  return Field(prime);
}

std::string Field::describe() const { return exact() ? "exact" : "mod " + std::to_string(prime_); }

namespace {

struct ExactArith {
  using Scalar = Rational;
  using Matrix = ExactMatrix;

  Scalar from(long v) const { return Scalar(v); }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const { acc += a * b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const { return 1 / a; }
  Matrix matrix(std::size_t cols) const { return Matrix(0, cols); }
  EchelonSummary echelon(const Matrix& m) const { return linalg::echelon(m); }
  std::vector<std::vector<Scalar>> kernel(const Matrix& m) const { return linalg::kernel_basis(m); }
  std::string str(const Scalar& a) const { return a.get_str(); }
  Field field() const { return Field::rationals(); }
};

struct ModArith {
  using Scalar = std::uint64_t;
  using Matrix = ModMatrix;

  std::uint64_t p;

  Scalar from(long v) const { return linalg::mod_reduce(v, p); }
  bool is_zero(Scalar a) const { return a == 0; }
  void add_mul(Scalar& acc, Scalar a, Scalar b) const { acc = add(acc, linalg::mod_mul(a, b, p)); }
  Scalar mul(Scalar a, Scalar b) const { return linalg::mod_mul(a, b, p); }
  Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p ? s - p : s;
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar inv(Scalar a) const { return linalg::mod_inverse(a, p); }
  Matrix matrix(std::size_t cols) const { return Matrix(p, 0, cols); }
  EchelonSummary echelon(const Matrix& m) const { return linalg::echelon(m); }
  std::vector<std::vector<Scalar>> kernel(const Matrix& m) const { return linalg::kernel_basis(m); }
  std::string str(Scalar a) const { return std::to_string(a); }
  Field field() const { return Field::modulo(p); }
};

template <class Arith>
class Engine {
 public:
  using Scalar = typename Arith::Scalar;
  using Vector = std::vector<Scalar>;
  using Matrix = typename Arith::Matrix;

  Engine(const SimplicialComplex& c, const LinearForms& theta, Arith arith, Presentation presentation)
      : c_(c), theta_(theta), arith_(arith), presentation_(presentation) {}

  const GradedPiece& piece(int d) {
    if (d < 0) throw Error(ErrorKind::invalid_degree, "negative degree");
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;

    GradedPiece g;
    g.degree = d;
    g.presentation = presentation_;
    g.monomials = monomials(d);
    Matrix rel = arith_.matrix(g.monomials.size());
    if (d > 0)
      for (const Vector& row : relation_rows(d)) rel.append_row(row);
    const EchelonSummary e = arith_.echelon(rel);
    g.relation_rank = e.rank;
    g.quotient_dim = g.monomials.size() - e.rank;
    g.basis_rows = e.pivot_rows;
    std::vector<bool> pivot(g.monomials.size(), false);
    for (std::size_t col : e.pivot_columns) pivot[col] = true;
    for (std::size_t k = 0; k < g.monomials.size(); ++k)
      if (!pivot[k]) g.quotient_basis.push_back(k);
    g.relations = std::move(rel);
    return pieces_.emplace(d, std::move(g)).first->second;
  }

  const Matrix& relations(int d) { return std::get<Matrix>(piece(d).relations); }

  Vector unit(int d, std::size_t k) {
    Vector v(monomials(d).size(), arith_.from(0));
    v[k] = arith_.from(1);
    return v;
  }

  /// ω · v, from degree d to degree d + 1.
  Vector multiply(const LinearForm& omega, int d, const Vector& v) {
    if (static_cast<int>(omega.size()) != c_.vertex_count())
      throw Error(ErrorKind::dimension_mismatch, "ω has the wrong number of variables");
    const auto& source = monomials(d);
    Vector out(monomials(d + 1).size(), arith_.from(0));
    const int n = c_.vertex_count();
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (arith_.is_zero(v[k])) continue;
      const Subset support = source[k].support();
      if (presentation_ == Presentation::squarefree) {
        const Vector& w = omega_tilde(omega, support);
        for (int u = 0; u < n; ++u) {
          if (support.contains(u) || arith_.is_zero(w[static_cast<std::size_t>(u)])) continue;
          const auto target = squarefree_index(d + 1, support.with(u));
          if (target) arith_.add_mul(out[*target], v[k], w[static_cast<std::size_t>(u)]);
        }
      } else {
        for (int u = 0; u < n; ++u) {
          if (omega[static_cast<std::size_t>(u)] == 0 || !c_.contains(support.with(u))) continue;
          Monomial m = source[k];
          ++m.exponents[static_cast<std::size_t>(u)];
          arith_.add_mul(out[monomial_index(d + 1, m)], v[k], arith_.from(omega[static_cast<std::size_t>(u)]));
        }
      }
    }
    return out;
  }

  InjectivityCertificate injective(const LinearForm& omega, int from, int to) {
    if (from < 0 || to < from) throw Error(ErrorKind::dimension_mismatch, "need 0 <= from <= to");
    if (static_cast<int>(omega.size()) != c_.vertex_count())
      throw Error(ErrorKind::dimension_mismatch, "ω has the wrong number of variables");
    const GradedPiece& source = piece(from);
    const GradedPiece& target = piece(to);
    InjectivityCertificate cert;
    cert.from_degree = from;
    cert.to_degree = to;
    cert.source_dim = source.quotient_dim;
    cert.relation_rank = target.relation_rank;
    cert.field = arith_.field();
    if (source.quotient_dim == 0 || from == to) {
      cert.augmented_rank = target.relation_rank + source.quotient_dim;
      cert.injective = true;
      return cert;
    }
    Matrix aug = arith_.matrix(target.monomials.size());
    const Matrix& rel = relations(to);
    for (std::size_t r : target.basis_rows) aug.append_row(rel.row(r));
    for (std::size_t b : source.quotient_basis) {
      Vector v = unit(from, b);
      for (int d = from; d < to; ++d) v = multiply(omega, d, v);
      aug.append_row(v);
    }
    cert.augmented_rank = arith_.echelon(aug).rank;
    cert.injective = cert.augmented_rank == cert.relation_rank + cert.source_dim;
    return cert;
  }

  std::size_t cokernel(const LinearForm& omega, int d) {
    const GradedPiece& target = piece(d);
    if (d == 0) return target.quotient_dim;
    const GradedPiece& source = piece(d - 1);
    Matrix aug = arith_.matrix(target.monomials.size());
    const Matrix& rel = relations(d);
    for (std::size_t r : target.basis_rows) aug.append_row(rel.row(r));
    for (std::size_t b : source.quotient_basis) aug.append_row(multiply(omega, d - 1, unit(d - 1, b)));
    return target.monomials.size() - arith_.echelon(aug).rank;
  }

  std::vector<std::string> power_image(const LinearForm& omega, int from, std::size_t basis_index, int to) {
    if (from < 0 || to < from) throw Error(ErrorKind::dimension_mismatch, "need 0 <= from <= to");
    const GradedPiece& source = piece(from);
    if (basis_index >= source.quotient_basis.size()) throw Error(ErrorKind::dimension_mismatch, "basis index out of range");
    Vector v = unit(from, source.quotient_basis[basis_index]);
    for (int d = from; d < to; ++d) v = multiply(omega, d, v);
    std::vector<std::string> out;
    for (const Scalar& x : v) out.push_back(arith_.str(x));
    return out;
  }

  Arith& arith() { return arith_; }

 private:
  const std::vector<Monomial>& monomials(int d) {
    auto it = monomials_.find(d);
    if (it != monomials_.end()) return it->second;
    std::vector<Monomial> out;
    if (presentation_ == Presentation::all_monomials) {
      out = face_monomials(c_, d);
      auto& index = monomial_index_[d];
      for (std::size_t k = 0; k < out.size(); ++k) index.emplace(out[k], k);
    } else {
      const std::size_t n = static_cast<std::size_t>(c_.vertex_count());
      if (d <= c_.face_size()) {
        for (Subset f : c_.faces_of_size(d)) {
          Monomial m{std::vector<int>(n, 0)};
          for (int v : f.elements()) m.exponents[static_cast<std::size_t>(v)] = 1;
          out.push_back(std::move(m));
        }
      }
      std::sort(out.begin(), out.end(), grevlex_greater);
      auto& index = squarefree_index_[d];
      for (std::size_t k = 0; k < out.size(); ++k) index.emplace(out[k].support().bits(), k);
    }
    return monomials_.emplace(d, std::move(out)).first->second;
  }

  std::optional<std::size_t> squarefree_index(int d, Subset face) {
    monomials(d);
    const auto& index = squarefree_index_[d];
    const auto it = index.find(face.bits());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t monomial_index(int d, const Monomial& m) {
    monomials(d);
    return monomial_index_[d].at(m);
  }

  /// Forms in span(Θ) vanishing on G, as coefficient vectors over the vertices.
  std::vector<Vector> vanishing_forms(Subset g) {
    const auto vs = g.elements();
    const std::size_t s = static_cast<std::size_t>(theta_.count());
    Matrix a = arith_.matrix(s);
    for (int v : vs) {
      Vector row(s);
      for (std::size_t j = 0; j < s; ++j) row[j] = arith_.from(theta_(static_cast<int>(j), v));
      a.append_row(row);
    }
    std::vector<Vector> out;
    for (const Vector& coeffs : arith_.kernel(a)) out.push_back(combine(coeffs));
    return out;
  }

  Vector combine(const Vector& coeffs) {
    const int n = c_.vertex_count();
    Vector form(static_cast<std::size_t>(n), arith_.from(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (arith_.is_zero(coeffs[j])) continue;
      for (int v = 0; v < n; ++v)
        arith_.add_mul(form[static_cast<std::size_t>(v)], coeffs[j], arith_.from(theta_(static_cast<int>(j), v)));
    }
    return form;
  }

  /// ω plus the element of span(Θ) that makes it vanish on G. Within the
  /// quotient, ω · x^G equals ω̃ · x^G, and the latter is squarefree.
  const Vector& omega_tilde(const LinearForm& omega, Subset g) {
    if (omega != tilde_omega_) {
      tilde_cache_.clear();
      tilde_omega_ = omega;
    }
    auto it = tilde_cache_.find(g.bits());
    if (it != tilde_cache_.end()) return it->second;

    const std::size_t s = static_cast<std::size_t>(theta_.count());
    Vector w(omega.size());
    for (std::size_t v = 0; v < omega.size(); ++v) w[v] = arith_.from(omega[v]);
    if (!g.empty()) {
      Matrix a = arith_.matrix(s + 1);
      for (int v : g.elements()) {
        Vector row(s + 1);
        for (std::size_t j = 0; j < s; ++j) row[j] = arith_.from(theta_(static_cast<int>(j), v));
        row[s] = arith_.from(omega[static_cast<std::size_t>(v)]);
        a.append_row(row);
      }
      bool found = false;
      for (Vector& k : arith_.kernel(a)) {
        if (arith_.is_zero(k[s])) continue;
        const Scalar scale = arith_.inv(k[s]);
        k.pop_back();
        for (Scalar& x : k) x = arith_.mul(x, scale);
        const Vector shift = combine(k);
        for (std::size_t v = 0; v < w.size(); ++v) w[v] = arith_.add(w[v], shift[v]);
        found = true;
        break;
      }
      // Θ restricted to a face has full column rank, so ω|_G always lies in the span.
      if (!found) throw Error(ErrorKind::not_an_lsop, "forms are dependent on a face");
    }
    return tilde_cache_.emplace(g.bits(), std::move(w)).first->second;
  }

  std::vector<Vector> relation_rows(int d) {
    const auto& target = monomials(d);
    std::vector<Vector> rows;
    const int n = c_.vertex_count();
    if (presentation_ == Presentation::squarefree) {
      for (Subset g : c_.faces_of_size(d - 1)) {
        for (const Vector& mu : vanishing_forms(g)) {
          Vector row(target.size(), arith_.from(0));
          bool nonzero = false;
          for (int u = 0; u < n; ++u) {
            if (g.contains(u) || arith_.is_zero(mu[static_cast<std::size_t>(u)])) continue;
            const auto idx = squarefree_index(d, g.with(u));
            if (!idx) continue;
            row[*idx] = mu[static_cast<std::size_t>(u)];
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    } else {
      for (const Monomial& m : monomials(d - 1)) {
        const Subset support = m.support();
        for (int j = 0; j < theta_.count(); ++j) {
          Vector row(target.size(), arith_.from(0));
          bool nonzero = false;
          for (int u = 0; u < n; ++u) {
            if (theta_(j, u) == 0 || !c_.contains(support.with(u))) continue;
            Monomial next = m;
            ++next.exponents[static_cast<std::size_t>(u)];
            row[monomial_index(d, next)] = arith_.from(theta_(j, u));
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    return rows;
  }

  SimplicialComplex c_;
  LinearForms theta_;
  Arith arith_;
  Presentation presentation_;
  std::map<int, std::vector<Monomial>> monomials_;
  std::map<int, std::unordered_map<std::uint32_t, std::size_t>> squarefree_index_;
  std::map<int, std::map<Monomial, std::size_t>> monomial_index_;
  std::map<int, GradedPiece> pieces_;
  LinearForm tilde_omega_;
  std::unordered_map<std::uint32_t, Vector> tilde_cache_;
};

/// Solves A x = b for the columns of A given as `columns`; nullopt if b is
/// outside their span. The columns are assumed independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   std::span<const Rational> b) {
  const std::size_t rows = b.size();
  ExactMatrix m(rows, columns.size() + 1);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  for (std::size_t r = 0; r < rows; ++r) m(r, columns.size()) = -b[r];
  for (auto& k : linalg::kernel_basis(m)) {
    if (sgn(k.back()) == 0) continue;
    const Rational scale = 1 / k.back();
    k.pop_back();
    for (auto& x : k) x *= scale;
    return k;
  }
  return std::nullopt;
}

}  // namespace

struct ArtinianQuotient::Impl {
  SimplicialComplex complex;
  LinearForms forms;
  Field field;
  Presentation presentation;
  std::variant<Engine<ExactArith>, Engine<ModArith>> engine;

  Impl(const SimplicialComplex& c, const LinearForms& theta, Field f, Presentation p)
      : complex(c), forms(theta), field(f), presentation(p), engine(make(c, theta, f, p)) {}

  static std::variant<Engine<ExactArith>, Engine<ModArith>> make(const SimplicialComplex& c, const LinearForms& theta,
                                                                 Field f, Presentation p) {
    if (f.exact()) return Engine<ExactArith>(c, theta, ExactArith{}, p);
    return Engine<ModArith>(c, theta, ModArith{f.prime()}, p);
  }

  Engine<ExactArith>& exact() {
    if (!field.exact()) throw std::logic_error("operation requires exact arithmetic");
    return std::get<Engine<ExactArith>>(engine);
  }
};

ArtinianQuotient::ArtinianQuotient(const SimplicialComplex& c, const LinearForms& theta, Field field,
                                   Presentation presentation) {
  check_shape(c, theta);
  const bool ok = field.exact() ? lsop_verify(c, theta) : lsop_mod(c, theta, field.prime());
  if (!ok) throw Error(ErrorKind::not_an_lsop, "forms are not a linear system of parameters over " + field.describe());
  impl_ = std::make_unique<Impl>(c, theta, field, presentation);
}

ArtinianQuotient::~ArtinianQuotient() = default;
ArtinianQuotient::ArtinianQuotient(ArtinianQuotient&&) noexcept = default;
ArtinianQuotient& ArtinianQuotient::operator=(ArtinianQuotient&&) noexcept = default;

const SimplicialComplex& ArtinianQuotient::complex() const { return impl_->complex; }
const LinearForms& ArtinianQuotient::forms() const { return impl_->forms; }
Field ArtinianQuotient::field() const { return impl_->field; }
Presentation ArtinianQuotient::presentation() const { return impl_->presentation; }

const GradedPiece& ArtinianQuotient::piece(int d) {
  return std::visit([d](auto& e) -> const GradedPiece& { return e.piece(d); }, impl_->engine);
}

std::vector<std::size_t> ArtinianQuotient::dimensions(int max_degree) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(dimension(d));
  return out;
}

InjectivityCertificate ArtinianQuotient::multiplication_injective(const LinearForm& omega, int from, int to) {
  return std::visit([&](auto& e) { return e.injective(omega, from, to); }, impl_->engine);
}

std::size_t ArtinianQuotient::cokernel_dimension(const LinearForm& omega, int d) {
  if (d < 0) throw Error(ErrorKind::invalid_degree, "negative degree");
  return std::visit([&](auto& e) { return e.cokernel(omega, d); }, impl_->engine);
}

std::vector<std::string> ArtinianQuotient::power_image(const LinearForm& omega, int from, std::size_t basis_index,
                                                       int to) {
  return std::visit([&](auto& e) { return e.power_image(omega, from, basis_index, to); }, impl_->engine);
}

std::optional<std::vector<Rational>> ArtinianQuotient::relation_combination(int d, std::span<const Rational> v) {
  auto& e = impl_->exact();
  const GradedPiece& g = e.piece(d);
  if (v.size() != g.monomials.size()) throw Error(ErrorKind::dimension_mismatch, "vector length differs from piece size");
  const ExactMatrix& rel = e.relations(d);
  std::vector<std::vector<Rational>> columns;
  for (std::size_t r : g.basis_rows) {
    const auto row = rel.row(r);
    columns.emplace_back(row.begin(), row.end());
  }
  return solve_in_span(columns, v);
}

std::vector<Rational> ArtinianQuotient::normal_form(int d, std::span<const Rational> v) {
  auto& e = impl_->exact();
  const GradedPiece& g = e.piece(d);
  if (v.size() != g.monomials.size()) throw Error(ErrorKind::dimension_mismatch, "vector length differs from piece size");
  const ExactMatrix& rel = e.relations(d);
  std::vector<std::vector<Rational>> columns;
  for (std::size_t b : g.quotient_basis) columns.push_back(e.unit(d, b));
  for (std::size_t r : g.basis_rows) {
    const auto row = rel.row(r);
    columns.emplace_back(row.begin(), row.end());
  }
  auto solution = solve_in_span(columns, v);
  // Quotient basis and relation basis together span the whole piece.
  if (!solution) throw std::logic_error("normal form: vector outside the piece");
  solution->resize(g.quotient_basis.size());
  return *solution;
}

std::vector<Rational> ArtinianQuotient::multiply(const LinearForm& omega, int d, std::span<const Rational> v) {
  auto& e = impl_->exact();
  if (v.size() != e.piece(d).monomials.size())
    throw Error(ErrorKind::dimension_mismatch, "vector length differs from piece size");
  return e.multiply(omega, d, std::vector<Rational>(v.begin(), v.end()));
}

GradedPiece graded_piece(const SimplicialComplex& c, const LinearForms& theta, int d, Presentation presentation) {
  ArtinianQuotient q(c, theta, Field::rationals(), presentation);
  return q.piece(d);
}

InjectivityCertificate mult_injective(const SimplicialComplex& c, const LinearForms& theta, const LinearForm& omega,
                                      int from, int to, Field field, Presentation presentation) {
  ArtinianQuotient q(c, theta, field, presentation);
  return q.multiplication_injective(omega, from, to);
}

namespace {

GElementReport verify_in(ArtinianQuotient& q, const LinearForm& omega, int top) {
  GElementReport report;
  report.top_degree = top;
  report.dimensions = q.dimensions(q.complex().face_size());
  for (int i = 0; 2 * i <= top; ++i) {
    report.certificates.push_back(q.multiplication_injective(omega, i, top - i));
    if (!report.certificates.back().injective) report.is_g_element = false;
  }
  report.arithmetic = q.field().describe();
  return report;
}

int top_nonzero(const std::vector<std::size_t>& dims) {
  int top = 0;
  for (std::size_t d = 0; d < dims.size(); ++d)
    if (dims[d] != 0) top = static_cast<int>(d);
  return top;
}

}  // namespace

GElementReport g_element_verify(const SimplicialComplex& c, const LinearForms& theta, const LinearForm& omega,
                                Field field) {
  if (static_cast<int>(omega.size()) != c.vertex_count())
    throw Error(ErrorKind::dimension_mismatch, "ω has the wrong number of variables");
  const auto exact_report = [&](const std::string& note) {
    ArtinianQuotient q(c, theta, Field::rationals());
    const int top = top_nonzero(q.dimensions(c.face_size()));
    GElementReport r = verify_in(q, omega, top);
    if (!note.empty()) r.arithmetic += " (" + note + ")";
    return r;
  };
  if (field.exact()) return exact_report("");

  check_shape(c, theta);
  if (!lsop_mod(c, theta, field.prime())) return exact_report("forms degenerate " + field.describe());
  ArtinianQuotient q(c, theta, field);
  const HVector h = h_vector(c);
  const auto dims = q.dimensions(c.face_size());
  for (std::size_t d = 0; d < dims.size(); ++d)
    if (static_cast<std::int64_t>(dims[d]) != h.at(d)) return exact_report(field.describe() + " dimensions differ from h");

  GElementReport report = verify_in(q, omega, h.top_degree());
  std::optional<ArtinianQuotient> exact;
  bool rechecked = false;
  for (auto& cert : report.certificates) {
    if (cert.injective) continue;
    if (!exact) exact.emplace(c, theta, Field::rationals());
    cert = exact->multiplication_injective(omega, cert.from_degree, cert.to_degree);
    rechecked = true;
  }
  report.is_g_element = std::all_of(report.certificates.begin(), report.certificates.end(),
                                    [](const InjectivityCertificate& x) { return x.injective; });
  if (rechecked) report.arithmetic += " + exact re-check";
  return report;
}

std::vector<std::uint64_t> modular_primes(std::uint64_t seed, int count) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::uint64_t> out;
  while (static_cast<int>(out.size()) < count) {
    const std::uint64_t p = rng.prime(31);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::pair<LinearForms, LinearForm> search_trial_forms(std::uint64_t seed, int trial, int rank, int vertices,
                                                      long bound) {
  Rng rng(seed);
  std::pair<LinearForms, LinearForm> out;
  for (int t = 1; t <= trial; ++t) {
    out.first = random_forms(rank, vertices, bound, rng);
    out.second = random_forms(1, vertices, bound, rng).row(0);
  }
  return out;
}

SearchLog g_element_trials(const Matroid& m, const SearchOptions& options) {
  if (!m.coloops().empty()) throw Error(ErrorKind::has_coloops, "g-element search needs a coloop-free matroid");
  const LabeledComplex lc = independence_complex(m);
  const SimplicialComplex& c = lc.complex;
  const Field field = options.exact ? Field::rationals() : Field::modulo(modular_primes(options.seed, 1).front());

  SearchLog log;
  Rng rng(options.seed);
  for (int t = 1; t <= options.trials; ++t) {
    LinearForms theta = random_forms(c.face_size(), c.vertex_count(), options.bound, rng);
    LinearForm omega = random_forms(1, c.vertex_count(), options.bound, rng).row(0);
    TrialRecord rec;
    rec.trial = t;
    rec.lsop = lsop_verify(c, theta);
    std::optional<GElementReport> report;
    if (rec.lsop) {
      report = g_element_verify(c, theta, omega, field);
      rec.g_element = report->is_g_element;
    }
    log.attempts.push_back(rec);
    if (rec.g_element) {
      GWitness w;
      w.seed = options.seed;
      w.bound = options.bound;
      w.labels = lc.labels;
      w.trial = t;
      w.theta = std::move(theta);
      w.omega = std::move(omega);
      w.report = std::move(*report);
      w.attempts = log.attempts;
      log.witness = std::move(w);
      break;
    }
  }
  return log;
}

GWitness g_element_search(const Matroid& m, const SearchOptions& options) {
  SearchLog log = g_element_trials(m, options);
  if (log.witness) return std::move(*log.witness);
  throw Error(ErrorKind::witness_not_found, "no g-element in " + std::to_string(options.trials) + " trials (seed " +
                                                std::to_string(options.seed) + ", bound " +
                                                std::to_string(options.bound) + ")");
}

bool HilbertTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const HilbertRow& r) { return r.match; });
}

HilbertTable hilbert_check(const SimplicialComplex& c, const LinearForms& theta, Field field, Presentation presentation) {
  ArtinianQuotient q(c, theta, field, presentation);
  const HVector h = h_vector(c);
  HilbertTable table;
  for (int d = 0; d <= c.face_size() + 1; ++d) {
    HilbertRow row;
    row.degree = d;
    row.quotient_dim = q.dimension(d);
    row.h = h.at(static_cast<std::size_t>(d));
    row.match = static_cast<std::int64_t>(row.quotient_dim) == row.h;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace gelement
