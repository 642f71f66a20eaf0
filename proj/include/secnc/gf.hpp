#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace secnc::gf {

/// Prime field GF(q). Element values are canonical representatives in [0, q).
class Field {
 public:
  explicit Field(std::int64_t q);

  std::int64_t modulus() const { return q_; }

  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % q_;
    return r < 0 ? r + q_ : r;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % q_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % q_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  std::int64_t q_;
};

bool is_prime(std::int64_t n);
/// Smallest prime strictly greater than n.
std::int64_t next_prime(std::int64_t n);

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    a_[r * cols_ + c] = field_.reduce(v);
  }

  std::vector<std::int64_t> row(std::size_t r) const;
  std::vector<std::int64_t> col(std::size_t c) const;
  void set_row(std::size_t r, const std::vector<std::int64_t>& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  /// [this | o] side by side.
  Matrix augment_right(const Matrix& o) const;
  /// [this ; o] stacked.
  Matrix stack_below(const Matrix& o) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_identity() const;

  /// In-place reduced row-echelon form. Pivoting is leftmost column first,
  /// smallest row index on ties, so the result is deterministic.
  /// Returns the pivot column indices.
  std::vector<std::size_t> rref();

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

std::size_t rank(Matrix m);

/// Basis of the right null space {x : m x = 0}, returned as columns.
/// Always has cols() == m.cols() - rank(m).
Matrix null_space(const Matrix& m);

/// k x t matrix with entry (r, c) = alphas[c]^r. Any k columns are linearly
/// independent when the alphas are pairwise distinct.
Matrix vandermonde(const Field& f, std::size_t k, std::size_t t,
                   const std::vector<std::int64_t>& alphas);

/// Solves a * X = b exactly; nullopt when some column of b is outside the
/// column space of a. Free variables are set to zero, so the solution is
/// deterministic.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Wide in_dim x out_dim generator in which every in_dim x in_dim column
/// submatrix is invertible (Vandermonde points 1..out_dim). Requires
/// q > out_dim >= in_dim.
Matrix mds_expand(const Field& f, std::size_t in_dim, std::size_t out_dim);

/// True when v lies in the row space of m.
bool in_row_space(const Matrix& m, const std::vector<std::int64_t>& v);

}  // namespace secnc::gf
