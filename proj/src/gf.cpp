#include "secnc/gf.hpp"

#include <algorithm>

namespace secnc::gf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t next_prime(std::int64_t n) {
  std::int64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

Field::Field(std::int64_t q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("field modulus must be prime, got " + std::to_string(q));
}

std::int64_t Field::pow(std::int64_t a, std::int64_t e) const {
  a = reduce(a);
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t Field::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<std::int64_t> Matrix::row(std::size_t r) const {
  return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

std::vector<std::int64_t> Matrix::col(std::size_t c) const {
  std::vector<std::int64_t> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void Matrix::set_row(std::size_t r, const std::vector<std::int64_t>& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) set(r, j, v[j]);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, r.at(i, j) + x * o.at(k, j));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

Matrix Matrix::augment_right(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

Matrix Matrix::stack_below(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("column count mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.set(i, j, at(i, idx[j]));
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(idx[i], j));
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[r * cols_ + j], a_[p * cols_ + j]);
    std::int64_t piv_inv = field_.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) set(r, j, field_.mul(at(r, j), piv_inv));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      std::int64_t factor = at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        set(i, j, field_.sub(at(i, j), field_.mul(factor, at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return m.rref().size(); }

Matrix null_space(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  const Field& f = m.field();
  Matrix basis(f, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    basis.set(fc, j, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.set(pivots[i], j, f.neg(r.at(i, fc)));
  }
  return basis;
}

Matrix vandermonde(const Field& f, std::size_t k, std::size_t t,
                   const std::vector<std::int64_t>& alphas) {
  if (alphas.size() != t) throw std::invalid_argument("need one evaluation point per column");
  if (t > static_cast<std::size_t>(f.modulus()))
    throw std::invalid_argument("more evaluation points than field elements");
  std::vector<std::int64_t> canon(t);
  for (std::size_t i = 0; i < t; ++i) canon[i] = f.reduce(alphas[i]);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (canon[i] == canon[j]) throw std::invalid_argument("evaluation points must be distinct");

  Matrix m(f, k, t);
  for (std::size_t c = 0; c < t; ++c) {
    std::int64_t p = 1;
    for (std::size_t r = 0; r < k; ++r) {
      m.set(r, c, p);
      p = f.mul(p, canon[c]);
    }
  }
  return m;
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
  Matrix aug = a.augment_right(b);
  std::vector<std::size_t> pivots = aug.rref();
  for (std::size_t c : pivots)
    if (c >= a.cols()) return std::nullopt;

  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(pivots[i], j, aug.at(i, a.cols() + j));
  return x;
}

Matrix mds_expand(const Field& f, std::size_t in_dim, std::size_t out_dim) {
  if (out_dim < in_dim) throw std::invalid_argument("mds_expand needs out_dim >= in_dim");
  if (static_cast<std::size_t>(f.modulus()) <= out_dim)
    throw std::invalid_argument("field too small for mds_expand");
  std::vector<std::int64_t> alphas(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i) alphas[i] = static_cast<std::int64_t>(i + 1);
  return vandermonde(f, in_dim, out_dim, alphas);
}

bool in_row_space(const Matrix& m, const std::vector<std::int64_t>& v) {
  Matrix ext = m.stack_below(Matrix::from_rows(m.field(), {v}));
  return rank(ext) == rank(m);
}

}  // namespace secnc::gf
