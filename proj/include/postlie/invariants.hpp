#ifndef POSTLIE_INVARIANTS_HPP
#define POSTLIE_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "postlie/lie_algebra.hpp"

namespace postlie {

/// Scalar-valued 2-cochain ksi(b_i, b_j) stored as an antisymmetric matrix;
/// instances returned by two_cocycles satisfy the cyclic cocycle identity.
struct Cocycle2 {
  Matrix coefficients;  // antisymmetric dim x dim

  Rational eval(const Vec& u, const Vec& v) const;
};

Subspace center(const LieAlgebra& L);
Subspace derived_subalgebra(const LieAlgebra& L);
bool is_perfect(const LieAlgebra& L);
bool is_centerless(const LieAlgebra& L);

/// Basis of {D : D[x,y] = [Dx,y] + [x,Dy]}.
std::vector<LinearMap> derivation_space(const LieAlgebra& L);
/// Basis of span{ad x}.
std::vector<LinearMap> inner_derivation_space(const LieAlgebra& L);
bool all_derivations_inner(const LieAlgebra& L);

/// Basis of {g : g[x,y] = [g x, y]}.
std::vector<LinearMap> centroid(const LieAlgebra& L);
bool is_central(const LieAlgebra& L);

/// Basis of {w : [w x, y] + [x, w y] = 0 for all x, y}. The full kernel,
/// without restricting the image to an abelian subalgebra; emptiness of this
/// larger space is the sufficient condition used by the solver.
std::vector<LinearMap> skew_invariance_kernel(const LieAlgebra& L);

std::vector<Cocycle2> two_cocycles(const LieAlgebra& L);
std::vector<Cocycle2> coboundaries(const LieAlgebra& L);
int h2_dim(const LieAlgebra& L);
bool cocycle_is_trivial(const LieAlgebra& L, const Cocycle2& c);
/// A cocycle outside the coboundary space, or nullopt when h2 is 0.
std::optional<Cocycle2> pick_nontrivial_cocycle(const LieAlgebra& L);

/// k(x,y) = tr(ad x ad y); symmetric and invariant.
Matrix killing_form(const LieAlgebra& L);

/// True iff D satisfies the Leibniz rule on all basis pairs.
bool is_derivation(const LieAlgebra& L, const LinearMap& D);
/// True iff D lies in the span of the ad maps.
bool is_inner_derivation(const LieAlgebra& L, const LinearMap& D);
/// True iff ksi satisfies the cyclic 2-cocycle identity.
bool is_two_cocycle(const LieAlgebra& L, const Cocycle2& ksi);

Vec flatten_map(const LinearMap& m);
LinearMap unflatten_map(const Vec& v, int dim);

}  // namespace postlie

#endif
