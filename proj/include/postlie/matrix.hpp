#ifndef POSTLIE_MATRIX_HPP
#define POSTLIE_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

struct RrefResult;
struct LinearSolution;

/// Dense matrix over exact rationals, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const;

  Vec apply(const Vec& v) const;

  Rational trace() const;

  /// Unique reduced row echelon form. Pivots are chosen by smallest
  /// combined bit size to limit coefficient growth.
  RrefResult rref() const;

  /// Canonical right null space basis: one vector per free column, with a 1
  /// in the free slot, ordered by free column index.
  std::vector<Vec> kernel_basis() const;

  /// Exact solve of this * x = rhs; nullopt iff inconsistent.
  std::optional<LinearSolution> solve(const Vec& rhs) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

struct LinearSolution {
  Vec particular;
  std::vector<Vec> homogeneous;
};

/// Row space of `vectors` in canonical rref form, zero rows dropped.
/// The standard representation for subspaces: two spans are equal iff
/// their canonical bases are equal.
std::vector<Vec> canonical_span(const std::vector<Vec>& vectors, int ambient);

/// True iff v lies in the span of the canonical basis rows.
bool in_span(const std::vector<Vec>& canonical_basis, const Vec& v, int ambient);

int span_dim(const std::vector<Vec>& vectors, int ambient);

}  // namespace postlie

#endif
