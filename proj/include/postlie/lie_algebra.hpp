#ifndef POSTLIE_LIE_ALGEBRA_HPP
#define POSTLIE_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "postlie/errors.hpp"
#include "postlie/matrix.hpp"
#include "postlie/rational.hpp"

namespace postlie {

/// Sparse bracket table entry: [b_i, b_j] = sum of coeff * b_k.
struct BracketEntry {
  int i, j;
  std::vector<std::pair<int, Rational>> value;  // (k, coeff)
};

using LinearMap = Matrix;

/// Subspace of the coordinate space, held as a canonical rref basis so
/// equality of computed subspaces is a plain comparison.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;  // canonical rref rows

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Vec& v) const { return in_span(basis, v, ambient); }
  bool operator==(const Subspace& other) const = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// c_{ij}^k. Antisymmetry and the Jacobi identity are validated at
/// construction; instances are immutable afterwards.
class LieAlgebra {
 public:
  /// Builds from a sparse table. Entries with i < j are completed by
  /// antisymmetry; diagonal or duplicated (j,i) entries must be consistent.
  static LieAlgebra from_structure_constants(int dim, std::vector<std::string> labels,
                                             const std::vector<BracketEntry>& table);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Rational& c(int i, int j, int k) const {
    return tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Sparse coordinates of [b_i, b_j].
  const std::vector<std::pair<int, Rational>>& bracket(int i, int j) const {
    return sparse_[static_cast<size_t>(i) * dim_ + j];
  }

  /// [u, v] in coordinates.
  Vec bracket_vec(const Vec& u, const Vec& v) const;

  /// Matrix of ad(b_i): x -> [b_i, x].
  Matrix ad(int i) const;
  Matrix ad_vec(const Vec& u) const;

  bool operator==(const LieAlgebra& other) const {
    return dim_ == other.dim_ && tensor_ == other.tensor_;
  }

 private:
  LieAlgebra() = default;
  void rebuild_sparse();
  void validate() const;

  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> tensor_;  // c_{ij}^k, index (i*dim+j)*dim+k
  std::vector<std::vector<std::pair<int, Rational>>> sparse_;

  friend LieAlgebra lie_from_tensor(int, std::vector<std::string>, std::vector<Rational>);
};

/// Internal builder used by constructions; validates like
/// from_structure_constants.
LieAlgebra lie_from_tensor(int dim, std::vector<std::string> labels,
                           std::vector<Rational> tensor);

/// Builds the Lie algebra spanned by the given matrices under the
/// commutator; errors if the span is not closed.
LieAlgebra lie_from_matrices(const std::vector<std::string>& labels,
                             const std::vector<Matrix>& basis);

}  // namespace postlie

#endif
