#ifndef POSTLIE_CONSTRUCTIONS_HPP
#define POSTLIE_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "postlie/comm_algebra.hpp"
#include "postlie/grading.hpp"
#include "postlie/invariants.hpp"
#include "postlie/lie_algebra.hpp"
#include "postlie/window.hpp"

namespace postlie {

/// L tensor A with [x otimes a, y otimes b] = [x,y] otimes ab.
/// Basis order: (i, p) -> i * dim A + p.
LieAlgebra current_algebra(const LieAlgebra& L, const CommutativeAlgebra& A);

/// Z-grading of current_algebra(L, A) induced by graded A (L in degree 0).
Grading current_grading(const LieAlgebra& L, const CommutativeAlgebra& A);

/// Diagonal derivation of current_algebra(L, A) acting on x otimes a_p by
/// the degree of a_p (t d/dt for truncated polynomials).
LinearMap euler_derivation(const LieAlgebra& L, const CommutativeAlgebra& A);

struct DerivationExtension {
  LieAlgebra algebra;  // dim L + 1, derivation generator last
  int d_index;
  bool outer;  // computed, not asserted
};

/// L + K D with [D, x] = D(x). Validates that D is a derivation.
DerivationExtension semidirect_by_derivation(const LieAlgebra& L, const LinearMap& D,
                                             const std::string& label = "d");

struct CentralExtension {
  LieAlgebra algebra;  // dim L + 1, central generator last
  int z_index;
  bool nontrivial;  // computed, not asserted
};

/// L + K z with {x, y} = [x, y] + ksi(x, y) z, z central. Validates the
/// cocycle identity.
CentralExtension central_extension(const LieAlgebra& L, const Cocycle2& ksi,
                                   const std::string& label = "z");

/// Twisted loop window: basis x otimes t^i for homogeneous x of degree
/// i mod n, |i| <= N; bracket defined iff the result degree stays inside.
AlgebraWindow loop_window(const GradedLieAlgebra& gL, int N);

/// Witt window: basis e_i for -N <= i <= N (two-sided) or -1 <= i <= N
/// (one-sided), bracket [e_i, e_j] = (j - i) e_{i+j} where the target index
/// stays inside.
AlgebraWindow witt_window(int N, bool one_sided);

/// Loop window extended by the Euler element d and a central z, the loop
/// bracket twisted by ksi(x otimes t^i, y otimes t^j) =
/// i delta_{i+j,0} k(x,y) z with k the Killing form.
AlgebraWindow kac_moody_window(const GradedLieAlgebra& gL, int N);

struct BuiltinAlgebra {
  LieAlgebra algebra;
  std::optional<Grading> grading;
};

/// Named families: sl2, sl3, heisenberg, abelian<n>, r2, and graded
/// variants sl2_z (Z-root grading), sl2_z1, sl2_z2, heisenberg_z, r2_z.
BuiltinAlgebra builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace postlie

#endif
