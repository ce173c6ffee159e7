#ifndef POSTLIE_GRADING_HPP
#define POSTLIE_GRADING_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "postlie/lie_algebra.hpp"

namespace postlie {

/// Grading group: the integers or Z/n.
struct GradeGroup {
  enum class Kind { Integers, Mod };
  Kind kind = Kind::Integers;
  long modulus = 0;  // n >= 1 when kind == Mod

  static GradeGroup integers() { return {Kind::Integers, 0}; }
  static GradeGroup mod(long n);

  long normalize(long g) const;
  long add(long a, long b) const { return normalize(a + b); }
  bool operator==(const GradeGroup&) const = default;
};

/// Degree assignment to basis vectors, validated against the bracket:
/// [b_i, b_j] must lie in the component of degree deg i + deg j.
struct Grading {
  GradeGroup group;
  std::vector<long> degrees;

  long degree_of_index(int i) const { return degrees[i]; }
  /// Basis indices per degree, in index order.
  std::map<long, std::vector<int>> components() const;
};

struct GradedLieAlgebra {
  LieAlgebra algebra;
  Grading grading;
};

/// Validates compatibility; throws GradingIncompatible with the offending
/// pair and stray component otherwise.
GradedLieAlgebra attach_grading(const LieAlgebra& L, Grading grading);

}  // namespace postlie

#endif
