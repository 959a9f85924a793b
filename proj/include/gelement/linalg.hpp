#pragma once

// Dense exact and modular linear algebra.
//
// ExactMatrix holds arbitrary-precision rationals. Rows are scaled to integers
// and reduced fraction-free as sparse rows, dividing out each row's content.
// A pass modulo 2^31 - 1 first picks rows that are independent there (hence
// over Q); only those are reduced exactly, and the rest are checked against
// the exact kernel, falling back to all rows if one is not in their span.
//
// ModMatrix is the reduction of an integer matrix modulo a prime. Its rank is
// never larger than the rational rank, so a full-rank answer mod p certifies
// full rank over Q. The converse direction is not certified.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace gelement::linalg {

using Integer = mpz_class;
using Rational = mpq_class;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; the row length must equal cols() (or set it when the matrix is empty).
  void append_row(std::span<const Rational> values);

  ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

class ModMatrix {
 public:
  ModMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols)
      : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ModMatrix identity(std::uint64_t modulus, std::size_t n);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const std::uint64_t> values);

 private:
  std::uint64_t modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

// Modular scalar helpers. The modulus must be below 2^62.
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_reduce(long value, std::uint64_t p) noexcept;
/// Residue of a rational, or nullopt when p divides the denominator.
std::optional<std::uint64_t> mod_reduce(const Rational& value, std::uint64_t p);

/// Outcome of one elimination pass. The input rows listed in `pivot_rows`
/// form a basis of the row space; `pivot_columns` come from first-nonzero
/// pivoting in left-to-right column order.
struct EchelonSummary {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> pivot_rows;
};

EchelonSummary echelon(const ExactMatrix& m);
EchelonSummary echelon(const ModMatrix& m);

std::size_t rank_exact(const ExactMatrix& m);
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

std::size_t rank_mod(const ModMatrix& m);
std::vector<std::size_t> pivot_columns(const ModMatrix& m);
std::vector<std::vector<std::uint64_t>> kernel_basis(const ModMatrix& m);

/// Entrywise reduction; nullopt if some denominator vanishes mod p.
std::optional<ModMatrix> reduce_mod(const ExactMatrix& m, std::uint64_t p);

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> v);

bool is_prime(std::uint64_t n);

}  // namespace gelement::linalg
