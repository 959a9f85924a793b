#include "gelement/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace gelement::linalg {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m;
  for (const auto& r : rows) {
    std::vector<Rational> values(r.begin(), r.end());
    m.append_row(values);
  }
  return m;
}

void ExactMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("ExactMatrix::append_row: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ModMatrix ModMatrix::identity(std::uint64_t modulus, std::size_t n) {
  ModMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % modulus;
  return m;
}

void ModMatrix::append_row(std::span<const std::uint64_t> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("ModMatrix::append_row: length mismatch");
  for (auto v : values) data_.push_back(v % modulus_);
  ++rows_;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values; p < 2^62.
  i128 t = 0, new_t = 1;
  i128 r = p, new_r = a % p;
  while (new_r != 0) {
    i128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("mod_inverse: element not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_reduce(long value, std::uint64_t p) noexcept {
  i128 v = value % static_cast<i128>(p);
  if (v < 0) v += p;
  return static_cast<std::uint64_t>(v);
}

namespace {

static_assert(sizeof(unsigned long) == 8, "moduli are passed to GMP as unsigned long");

std::uint64_t mod_reduce_integer(const Integer& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

struct IntegerRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;  // row-major, each row scaled to integers

  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

IntegerRows to_integer_rows(const ExactMatrix& m) {
  IntegerRows e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.data.resize(e.rows * e.cols);
  Integer lcm;
  for (std::size_t r = 0; r < e.rows; ++r) {
    lcm = 1;
    for (std::size_t c = 0; c < e.cols; ++c) {
      const auto& den = m(r, c).get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < e.cols; ++c) {
      const Rational& q = m(r, c);
      if (q == 0) continue;
      e.at(r, c) = q.get_num() * (lcm / q.get_den());
    }
  }
  return e;
}

Rational normalize_direction(std::vector<Rational>& v) {
  // Scale to a primitive integer vector; returns the scale factor used.
  Integer den_lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Integer scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return 1;
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (auto& x : v) x *= factor;
  return factor;
}

struct ModEchelon {
  std::vector<std::uint64_t> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> row_origin;

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

// Gauss-Jordan to reduced row echelon form mod p, first-nonzero pivots left to right.
ModEchelon rref_mod(const ModMatrix& m) {
  const std::uint64_t p = m.modulus();
  ModEchelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.data.resize(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r)
    for (std::size_t c = 0; c < e.cols; ++c) e.at(r, c) = m(r, c) % p;
  e.row_origin.resize(e.rows);
  for (std::size_t r = 0; r < e.rows; ++r) e.row_origin[r] = r;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < e.cols && pivot_row < e.rows; ++c) {
    std::size_t found = e.rows;
    for (std::size_t r = pivot_row; r < e.rows; ++r) {
      if (e.at(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found == e.rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(found, j), e.at(pivot_row, j));
      std::swap(e.row_origin[found], e.row_origin[pivot_row]);
    }
    const std::uint64_t inv = mod_inverse(e.at(pivot_row, c), p);
    for (std::size_t j = c; j < e.cols; ++j) e.at(pivot_row, j) = mod_mul(e.at(pivot_row, j), inv, p);
    for (std::size_t r = 0; r < e.rows; ++r) {
      if (r == pivot_row) continue;
      const std::uint64_t f = e.at(r, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < e.cols; ++j) {
        const std::uint64_t sub = mod_mul(f, e.at(pivot_row, j), p);
        std::uint64_t& x = e.at(r, j);
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    e.pivots.push_back(c);
    ++pivot_row;
  }
  return e;
}


constexpr std::uint64_t kGuidePrime = 2147483647;

// Input rows forming a row basis mod kGuidePrime, in increasing order.
std::vector<std::size_t> independent_rows_mod(const IntegerRows& in) {
  const std::uint64_t p = kGuidePrime;
  const std::size_t cols = in.cols;
  std::vector<std::uint64_t> a(in.rows * cols);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = sgn(in.data[i]) == 0 ? 0 : mod_reduce_integer(in.data[i], p);
  std::vector<std::size_t> origin(in.rows);
  for (std::size_t r = 0; r < in.rows; ++r) origin[r] = r;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < in.rows; ++c) {
    std::size_t found = in.rows;
    for (std::size_t r = pivot_row; r < in.rows; ++r)
      if (a[r * cols + c] != 0) {
        found = r;
        break;
      }
    if (found == in.rows) continue;
    if (found != pivot_row) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(found * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((found + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols));
      std::swap(origin[found], origin[pivot_row]);
    }
    const std::uint64_t* pr = &a[pivot_row * cols];
    const std::uint64_t inv = mod_inverse(pr[c], p);
    for (std::size_t r = pivot_row + 1; r < in.rows; ++r) {
      std::uint64_t* row = &a[r * cols];
      if (row[c] == 0) continue;
      const std::uint64_t f = p - row[c] * inv % p;
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j] != 0) row[j] = (row[j] + f * pr[j]) % p;
    }
    ++pivot_row;
  }
  std::vector<std::size_t> rows(origin.begin(), origin.begin() + static_cast<std::ptrdiff_t>(pivot_row));
  std::sort(rows.begin(), rows.end());
  return rows;
}

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

SparseRow sparse_row(const IntegerRows& e, std::size_t r) {
  SparseRow row;
  for (std::size_t c = 0; c < e.cols; ++c)
    if (sgn(e.at(r, c)) != 0) row.emplace_back(c, e.at(r, c));
  return row;
}

void remove_content(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot, where a, b are the leading entries of pivot and row.
void eliminate(SparseRow& row, const SparseRow& pivot) {
  const Integer a = pivot.front().second;
  const Integer b = row.front().second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  Integer t;
  while (i < row.size() || j < pivot.size()) {
    const std::size_t ci = i < row.size() ? row[i].first : SIZE_MAX;
    const std::size_t cj = j < pivot.size() ? pivot[j].first : SIZE_MAX;
    if (ci < cj) {
      out.emplace_back(ci, a * row[i].second);
      ++i;
    } else if (cj < ci) {
      out.emplace_back(cj, -(b * pivot[j].second));
      ++j;
    } else {
      t = a * row[i].second - b * pivot[j].second;
      if (sgn(t) != 0) out.emplace_back(ci, t);
      ++i;
      ++j;
    }
  }
  row = std::move(out);
  remove_content(row);
}

// Echelon basis of the row space, built one input row at a time. Leading
// columns of any echelon form are the left-to-right pivot columns.
struct SparseEchelon {
  std::vector<SparseRow> basis;           // sorted by leading column
  std::vector<std::size_t> origin;        // input row of each basis row
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

SparseEchelon sparse_echelon(const IntegerRows& e, std::span<const std::size_t> rows) {
  std::vector<std::ptrdiff_t> by_lead(e.cols, -1);
  std::vector<SparseRow> found;
  std::vector<std::size_t> found_origin;
  for (std::size_t r : rows) {
    SparseRow row = sparse_row(e, r);
    remove_content(row);
    while (!row.empty() && by_lead[row.front().first] >= 0)
      eliminate(row, found[static_cast<std::size_t>(by_lead[row.front().first])]);
    if (row.empty()) continue;
    by_lead[row.front().first] = static_cast<std::ptrdiff_t>(found.size());
    found.push_back(std::move(row));
    found_origin.push_back(r);
  }
  SparseEchelon out;
  out.cols = e.cols;
  for (std::size_t c = 0; c < e.cols; ++c) {
    if (by_lead[c] < 0) continue;
    out.pivots.push_back(c);
    out.basis.push_back(std::move(found[static_cast<std::size_t>(by_lead[c])]));
    out.origin.push_back(found_origin[static_cast<std::size_t>(by_lead[c])]);
  }
  return out;
}

std::vector<std::vector<Rational>> sparse_kernel(const SparseEchelon& s) {
  std::vector<bool> is_pivot(s.cols, false);
  for (auto c : s.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < s.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(s.cols);
    v[free] = 1;
    for (std::size_t k = s.basis.size(); k-- > 0;) {
      const SparseRow& row = s.basis[k];
      Rational acc = 0;
      for (std::size_t t = 1; t < row.size(); ++t)
        if (v[row[t].first] != 0) acc += Rational(row[t].second) * v[row[t].first];
      v[row.front().first] = -acc / Rational(row.front().second);
    }
    normalize_direction(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Reduction {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::vector<Rational>> kernel;
};

Reduction from_echelon(SparseEchelon&& s) {
  Reduction out;
  out.kernel = sparse_kernel(s);
  out.pivots = std::move(s.pivots);
  out.pivot_rows = std::move(s.origin);
  return out;
}

// Rank, pivot columns and kernel depend only on the row space. Rows independent
// mod p are independent over Q, so only those rows are eliminated exactly; the
// remaining rows are then checked against the exact kernel. A prime that loses
// rank fails the check and every row is eliminated instead.
Reduction reduce(const ExactMatrix& m) {
  const IntegerRows full = to_integer_rows(m);
  const std::vector<std::size_t> chosen = independent_rows_mod(full);
  if (chosen.size() < full.rows) {
    SparseEchelon sub = sparse_echelon(full, chosen);
    std::vector<std::vector<Rational>> kernel = sparse_kernel(sub);
    std::vector<bool> in_basis(full.rows, false);
    for (std::size_t r : chosen) in_basis[r] = true;
    bool spans = sub.pivots.size() == chosen.size();
    Integer dot;
    for (std::size_t r = 0; spans && r < full.rows; ++r) {
      if (in_basis[r]) continue;
      for (const auto& v : kernel) {
        dot = 0;
        for (std::size_t c = 0; c < full.cols; ++c)
          if (sgn(full.at(r, c)) != 0 && v[c] != 0) dot += full.at(r, c) * v[c].get_num();
        if (dot != 0) {
          spans = false;
          break;
        }
      }
    }
    if (spans) {
      Reduction out;
      out.pivots = std::move(sub.pivots);
      out.pivot_rows = std::move(sub.origin);
      out.kernel = std::move(kernel);
      return out;
    }
  }
  std::vector<std::size_t> all(full.rows);
  for (std::size_t r = 0; r < full.rows; ++r) all[r] = r;
  return from_echelon(sparse_echelon(full, all));
}

}  // namespace

std::optional<std::uint64_t> mod_reduce(const Rational& value, std::uint64_t p) {
  const std::uint64_t den = mod_reduce_integer(value.get_den(), p);
  if (den == 0) return std::nullopt;
  return mod_mul(mod_reduce_integer(value.get_num(), p), mod_inverse(den, p), p);
}

EchelonSummary echelon(const ExactMatrix& m) {
  Reduction r = reduce(m);
  EchelonSummary out;
  out.rank = r.pivots.size();
  out.pivot_columns = std::move(r.pivots);
  out.pivot_rows = std::move(r.pivot_rows);
  return out;
}

EchelonSummary echelon(const ModMatrix& m) {
  ModEchelon e = rref_mod(m);
  EchelonSummary out;
  out.rank = e.pivots.size();
  out.pivot_columns = std::move(e.pivots);
  out.pivot_rows.assign(e.row_origin.begin(), e.row_origin.begin() + static_cast<std::ptrdiff_t>(out.rank));
  return out;
}

std::size_t rank_exact(const ExactMatrix& m) { return reduce(m).pivots.size(); }

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) { return reduce(m).pivots; }

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) { return reduce(m).kernel; }

std::size_t rank_mod(const ModMatrix& m) { return rref_mod(m).pivots.size(); }

std::vector<std::size_t> pivot_columns(const ModMatrix& m) { return rref_mod(m).pivots; }

std::vector<std::vector<std::uint64_t>> kernel_basis(const ModMatrix& m) {
  const std::uint64_t p = m.modulus();
  ModEchelon e = rref_mod(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(e.cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      const std::uint64_t x = e.at(k, free);
      v[e.pivots[k]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ModMatrix> reduce_mod(const ExactMatrix& m, std::uint64_t p) {
  ModMatrix out(p, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto v = mod_reduce(m(r, c), p);
      if (!v) return std::nullopt;
      out(r, c) = *v;
    }
  }
  return out;
}

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z;
  mpz_set_ui(z.get_mpz_t(), n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

}  // namespace gelement::linalg
