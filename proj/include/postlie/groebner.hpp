#ifndef POSTLIE_GROEBNER_HPP
#define POSTLIE_GROEBNER_HPP

#include <optional>
#include <vector>

#include "postlie/errors.hpp"
#include "postlie/polynomial.hpp"

namespace postlie {

struct GroebnerBudget {
  unsigned long long max_spair_reductions = 100000;
  unsigned long long max_terms = 1ull << 32;  // cumulative term operations
};

struct GroebnerStats {
  unsigned long long spair_reductions = 0;
  unsigned long long term_ops = 0;
  size_t basis_size = 0;
};

/// Polynomial ideal with an optionally cached reduced Groebner basis.
class PolyIdeal {
 public:
  PolyIdeal() : nvars_(0) {}
  explicit PolyIdeal(int nvars) : nvars_(nvars) {}
  PolyIdeal(int nvars, std::vector<Polynomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_basis() const { return basis_.has_value(); }

  /// Reduced Groebner basis under deg-lex; deterministic normal selection.
  /// Throws ResourceLimit when the budget is exceeded.
  const std::vector<Polynomial>& reduced_basis(const GroebnerBudget& budget = {}) const;

  const GroebnerStats& stats() const { return stats_; }

 private:
  int nvars_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> basis_;
  mutable GroebnerStats stats_;
};

/// Full reduction of p modulo a Groebner basis; the unique remainder.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

bool ideal_membership(const Polynomial& p, const PolyIdeal& ideal,
                      const GroebnerBudget& budget = {});

/// Leading-term criterion: every variable has a pure power among the
/// leading terms of the reduced basis. With generators vanishing at the
/// origin this certifies a zero-dimensional variety pinned at 0.
bool variety_is_origin_only(const PolyIdeal& ideal, const GroebnerBudget& budget = {});

/// Sound propagation check: starting from nothing, repeatedly reduce basis
/// elements by the variables already known to vanish on the variety; a
/// residual of the form a*c^k forces c to vanish. True when every variable
/// is eventually forced. Implies the variety is exactly the origin.
bool origin_only_strict(const PolyIdeal& ideal, const GroebnerBudget& budget = {});

/// True iff the variety of `ideal` equals the linear subspace spanned by
/// `subspace_basis` (vectors in the c-coordinates): the parameterization
/// must annihilate every generator, and every defining form of the
/// subspace must have a power inside the ideal.
bool variety_equals_linear_subspace(const PolyIdeal& ideal,
                                    const std::vector<Vec>& subspace_basis,
                                    const GroebnerBudget& budget = {});

}  // namespace postlie

#endif
