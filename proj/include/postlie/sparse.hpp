#ifndef POSTLIE_SPARSE_HPP
#define POSTLIE_SPARSE_HPP

#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

/// Sorted (column, value) pairs, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Constraint system assembled as triplets; solved by sparse exact
/// elimination. Intended for the large, very sparse linear systems produced
/// by bilinear-map constraints, where dense rref would be quadratically
/// wasteful.
class SparseSystem {
 public:
  explicit SparseSystem(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  size_t row_count() const { return rows_.size(); }

  /// Starts a new row; add coefficients with add(), then finish_row().
  void add(int col, const Rational& value);
  void finish_row();

  /// Reduced row echelon form of the assembled rows.
  struct Result {
    std::vector<SparseRow> reduced_rows;  // leading-1 rows, sorted by pivot col
    std::vector<int> pivot_cols;
    int rank = 0;
    /// Canonical kernel basis, dense vectors (free slot = 1).
    std::vector<Vec> kernel;
  };

  Result solve() const;

 private:
  int cols_;
  std::vector<SparseRow> rows_;
  SparseRow current_;
};

}  // namespace postlie

#endif
