#ifndef POSTLIE_RECHECK_HPP
#define POSTLIE_RECHECK_HPP

#include "postlie/bilinear.hpp"
#include "postlie/comm_algebra.hpp"
#include "postlie/lie_algebra.hpp"
#include "postlie/window.hpp"

namespace postlie {

/// Post-hoc identity checkers, written against the direct evaluators
/// (bracket_vec / apply) rather than the constraint assembler, so solver
/// output is confirmed through an independent code path.
namespace recheck {

struct Violation {
  bool ok = true;
  std::string identity;  // which identity failed
  int i = -1, j = -1, k = -1;
};

Violation derivation_identity(const LieAlgebra& L, const BilinearMap& m);
Violation commutativity(const BilinearMap& m);
Violation centroid_identity(const LieAlgebra& L, const BilinearMap& m);
Violation assoc_derivation_identity(const CommutativeAlgebra& A, const BilinearMap& m);

/// Derivation identity on every exact window instance.
Violation windowed_derivation_identity(const AlgebraWindow& w, const BilinearMap& m);

bool space_ok(const LieAlgebra& L, const BilinearMapSpace& space);

}  // namespace recheck

}  // namespace postlie

#endif
