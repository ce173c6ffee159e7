#include "postlie/matrix.hpp"

#include <stdexcept>

namespace postlie {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!postlie::is_zero(x)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (postlie::is_zero(x)) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += x * other.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: size mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: size mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix apply: size mismatch");
  Vec r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!postlie::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
  return r;
}

Rational Matrix::trace() const {
  Rational t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

RrefResult Matrix::rref() const {
  RrefResult res;
  res.reduced = *this;
  Matrix& m = res.reduced;
  int pivot_row = 0;
  for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
    int best = -1;
    size_t best_bits = 0;
    for (int r = pivot_row; r < rows_; ++r) {
      if (postlie::is_zero(m.at(r, col))) continue;
      size_t bits = rat_bits(m.at(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != pivot_row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(best, j), m.at(pivot_row, j));
    Rational inv = 1 / m.at(pivot_row, col);
    for (int j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == pivot_row || postlie::is_zero(m.at(r, col))) continue;
      Rational f = m.at(r, col);
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(pivot_row, j);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  return res;
}

std::vector<Vec> Matrix::kernel_basis() const {
  RrefResult r = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Rational(0));
    v[free] = 1;
    for (int p = 0; p < r.rank; ++p)
      v[r.pivot_cols[p]] = -r.reduced.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> Matrix::solve(const Vec& rhs) const {
  if (static_cast<int>(rhs.size()) != rows_)
    throw std::invalid_argument("solve: rhs length != rows");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  RrefResult r = aug.rref();
  for (int c : r.pivot_cols)
    if (c == cols_) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(cols_, Rational(0));
  for (int p = 0; p < r.rank; ++p)
    sol.particular[r.pivot_cols[p]] = r.reduced.at(p, cols_);
  sol.homogeneous = kernel_basis();
  return sol;
}

std::vector<Vec> canonical_span(const std::vector<Vec>& vectors, int ambient) {
  if (vectors.empty()) return {};
  Matrix m(static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient)
      throw std::invalid_argument("canonical_span: bad vector length");
    for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
  }
  RrefResult r = m.rref();
  std::vector<Vec> basis;
  for (int i = 0; i < r.rank; ++i) basis.push_back(r.reduced.row(i));
  return basis;
}

bool in_span(const std::vector<Vec>& canonical_basis, const Vec& v, int ambient) {
  std::vector<Vec> aug = canonical_basis;
  aug.push_back(v);
  return span_dim(aug, ambient) == static_cast<int>(canonical_basis.size());
}

int span_dim(const std::vector<Vec>& vectors, int ambient) {
  return static_cast<int>(canonical_span(vectors, ambient).size());
}

}  // namespace postlie
