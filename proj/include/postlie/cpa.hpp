#ifndef POSTLIE_CPA_HPP
#define POSTLIE_CPA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postlie/bilinear.hpp"
#include "postlie/constructions.hpp"
#include "postlie/groebner.hpp"
#include "postlie/lie_algebra.hpp"
#include "postlie/window.hpp"

namespace postlie {

struct CpaCheck {
  bool ok = true;
  std::string identity;  // "commutativity", "derivation", "compatibility"
  int i = -1, j = -1, k = -1;
};

/// Checks the three defining identities of a commutative post-Lie structure
/// on every basis triple; reports the first violation.
CpaCheck verify_cpa(const LieAlgebra& L, const BilinearMap& phi);
/// Window variant: identities are checked on every instance whose bracket
/// evaluations stay defined.
CpaCheck verify_cpa(const AlgebraWindow& w, const BilinearMap& phi);

/// The compatibility equation phi([x,y],z) = phi(x,phi(y,z)) - phi(y,phi(x,z))
/// imposed on phi = sum c_a basis_a: one polynomial per (triple, output
/// coordinate), deduplicated, deterministic order.
PolyIdeal cpa_quadratic_ideal(const LieAlgebra& L, const std::vector<BilinearMap>& basis);

enum class CpaVerdict { ZeroOnly, LinearSpace, Inconclusive };

std::string verdict_name(CpaVerdict v);

struct CpaReport {
  CpaVerdict verdict = CpaVerdict::Inconclusive;
  int dcomm_dim = 0;
  /// Canonical basis of the solution set when verdict == LinearSpace.
  std::vector<BilinearMap> solution_basis;
  /// Verified structures (the solution basis, each passed through
  /// verify_cpa), lexicographically smallest first.
  std::vector<BilinearMap> witnesses;
  std::vector<std::string> ideal_generators;
  std::vector<std::string> certificate;  // reduced Groebner basis
  bool windowed = false;
  std::map<long, int> per_degree_dcomm;
  std::map<long, int> per_degree_solution;
  double seconds = 0.0;

  int solution_dim() const { return static_cast<int>(solution_basis.size()); }
};

/// Full pipeline: dcomm space, compatibility ideal, certification.
CpaReport cpa_solve(const LieAlgebra& L, const GroebnerBudget& budget = {});
CpaReport cpa_solve(const AlgebraWindow& w, long degree_bound,
                    const GroebnerBudget& budget = {});

enum class ConditionC { HoldsByCorollary, HoldsByDirectCheck, Fails, Inconclusive };

std::string condition_c_name(ConditionC v);

struct ConditionCResult {
  ConditionC verdict = ConditionC::Inconclusive;
  std::optional<BilinearMap> witness;  // nonzero violating map when Fails
};

/// Sufficient linear checks first (centerless, derivations inner, trivial
/// skew-invariance kernel), then the direct quadratic solve over dcomm.
ConditionCResult check_condition_C(const LieAlgebra& L, const GroebnerBudget& budget = {});

/// The solution space a nontrivial one-dimensional central extension of a
/// centerless CPA-trivial algebra must have: z-valued symmetric forms on
/// the quotient by the derived subalgebra and the center line. Hypotheses
/// are validated computationally.
BilinearMapSpace lemma2_predicted_space(const LieAlgebra& base, const CentralExtension& ext,
                                        const GroebnerBudget& budget = {});

/// Components of a map on an extension L + K w along the direct-sum basis:
/// Phi(x,y) = phi(x,y) + lambda(x,y) w, Phi(x,w) = psi(x) + mu(x) w,
/// Phi(w,w) = a + eta w. Requires a symmetric map, which is the domain the
/// template describes.
struct ExtensionDecomposition {
  BilinearMap phi;  // on the base
  Matrix lambda;    // symmetric scalar form on the base
  Matrix psi;       // base-valued linear map
  Vec mu;           // scalar functional
  Vec a;            // base element
  Rational eta;

  BilinearMap reassemble() const;  // map on base dim + 1
};

ExtensionDecomposition decompose_extension_map(const BilinearMap& Phi, int base_dim);

}  // namespace postlie

#endif
