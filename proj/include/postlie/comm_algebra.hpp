#ifndef POSTLIE_COMM_ALGEBRA_HPP
#define POSTLIE_COMM_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "postlie/errors.hpp"
#include "postlie/rational.hpp"

namespace postlie {

/// Commutative associative algebra with unit, given by structure constants
/// a_i a_j = sum of m_{ij}^k a_k. Commutativity, associativity and the unit
/// law are validated at construction.
class CommutativeAlgebra {
 public:
  static CommutativeAlgebra from_structure_constants(int dim, std::vector<std::string> labels,
                                                     std::vector<Rational> tensor, Vec unit,
                                                     std::optional<std::vector<long>> degrees);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }

  const Rational& m(int i, int j, int k) const {
    return tensor_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  Vec product(const Vec& a, const Vec& b) const;

  /// Z-degrees of the basis, when the algebra is graded (products then
  /// respect degree addition; validated).
  const std::optional<std::vector<long>>& degrees() const { return degrees_; }

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> tensor_;
  Vec unit_;
  std::optional<std::vector<long>> degrees_;
};

/// Q[t]/(t^n): basis 1, t, ..., t^{n-1}; degrees 0..n-1.
CommutativeAlgebra truncated_polynomial_algebra(int n);

/// Q[u,v]/(u,v)^2 with deg u = 1, deg v = -1: the smallest graded algebra
/// carrying an invariant-form pairing between opposite degrees, a finite
/// stand-in for the Laurent pair t, t^{-1} with all cross products pinched
/// to zero.
CommutativeAlgebra pinched_laurent_algebra();

}  // namespace postlie

#endif
