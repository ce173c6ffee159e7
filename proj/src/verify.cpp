#include "postlie/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "postlie/bilinear.hpp"
#include "postlie/constructions.hpp"
#include "postlie/cpa.hpp"
#include "postlie/invariants.hpp"
#include "postlie/recheck.hpp"

namespace postlie {

namespace {

void add(SuiteResult& r, const std::string& name, const std::string& expected,
         const std::string& computed) {
  bool pass = expected == computed;
  r.checks.push_back({name, expected, computed, pass});
  r.pass = r.pass && pass;
}

void add_flag(SuiteResult& r, const std::string& name, bool ok) {
  add(r, name, "yes", ok ? "yes" : "no");
}

std::string num(long v) { return std::to_string(v); }

GradedLieAlgebra graded_builtin(const std::string& name) {
  BuiltinAlgebra b = builtin(name);
  return GradedLieAlgebra{b.algebra, *b.grading};
}

void suite_th2(SuiteResult& r, const GroebnerBudget& budget) {
  for (const char* name : {"sl2_z1", "sl2_z2"}) {
    AlgebraWindow w = loop_window(graded_builtin(name), 3);
    CpaReport rep = cpa_solve(w, 3, budget);
    add(r, std::string(name) + " loop window N=3 verdict", "ZeroOnly",
        verdict_name(rep.verdict));
    int nonzero_degree = 0;
    for (const auto& [g, d] : rep.per_degree_solution)
      if (g != 0) nonzero_degree += d;
    add(r, std::string(name) + " nonzero-degree solution components", "0",
        num(nonzero_degree));
  }
}

void suite_witt(SuiteResult& r, const GroebnerBudget& budget) {
  for (bool one_sided : {false, true}) {
    std::string tag = one_sided ? "one-sided" : "two-sided";
    CpaReport rep = cpa_solve(witt_window(4, one_sided), 4, budget);
    std::ostringstream degs;
    for (const auto& [g, d] : rep.per_degree_dcomm)
      if (d) degs << " " << g << ":" << d;
    add(r, tag + " N=4 linear-stage degrees" + (degs.str().empty() ? " (all zero)" : degs.str()),
        "reported", "reported");
    if (rep.verdict == CpaVerdict::ZeroOnly) {
      add(r, tag + " N=4 nonzero-degree solution components", "0", "0");
      add(r, tag + " N=4 total solution dimension", "0", "0");
    } else {
      // spurious or uncertified window solutions must disappear at N=5
      int nonzero_degree = 0;
      for (const auto& [g, d] : rep.per_degree_solution)
        if (g != 0) nonzero_degree += d;
      add(r, tag + " N=4 outcome " + verdict_name(rep.verdict) + ", nonzero-degree dims " +
             num(nonzero_degree) + "; escalating", "escalated", "escalated");
      CpaReport rep5 = cpa_solve(witt_window(5, one_sided), 5, budget);
      add(r, tag + " N=5 escalation verdict", "ZeroOnly", verdict_name(rep5.verdict));
    }
  }
}

void suite_prop1(SuiteResult& r, const GroebnerBudget&) {
  LieAlgebra sl2 = builtin("sl2").algebra;
  int dL = d_space(sl2).dim();
  int cL = c_space(sl2).dim();
  for (int n : {2, 3}) {
    auto A = truncated_polynomial_algebra(n);
    int direct = d_space(current_algebra(sl2, A)).dim();
    int predicted = dL * n * n + cL * d_space_assoc(A).dim();
    add(r, "dim D(sl2 x Q[t]/t^" + num(n) + ")", num(predicted), num(direct));
  }
}

void suite_prop2(SuiteResult& r, const GroebnerBudget&) {
  LieAlgebra sl2 = builtin("sl2").algebra;
  int base = dcomm_space(sl2).dim();
  add(r, "dim Dcomm(sl2)", "0", num(base));
  for (int n : {2, 3}) {
    auto A = truncated_polynomial_algebra(n);
    int direct = dcomm_space(current_algebra(sl2, A)).dim();
    add(r, "dim Dcomm(sl2 x Q[t]/t^" + num(n) + ")", num(base * n), num(direct));
  }
  // nonzero cross-check on a central centerless algebra
  LieAlgebra r2 = builtin("r2").algebra;
  add_flag(r, "r2 central and centerless", is_central(r2) && is_centerless(r2));
  BilinearMapSpace dr2 = dcomm_space(r2);
  add(r, "dim Dcomm(r2)", "3", num(dr2.dim()));
  auto A = truncated_polynomial_algebra(2);
  LieAlgebra cur = current_algebra(r2, A);
  BilinearMapSpace big = dcomm_space(cur);
  add(r, "dim Dcomm(r2 x Q[t]/t^2)", num(dr2.dim() * 2), num(big.dim()));
  // generator membership: phi tensor (a b u) for u in the coefficient basis
  bool members = true;
  int nA = A.dim();
  auto flat = [&](int i, int p) { return i * nA + p; };
  for (const BilinearMap& phi : dr2.basis)
    for (int u = 0; u < nA; ++u) {
      BilinearMap m(cur.dim());
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            if (is_zero(phi.at(i, j, k))) continue;
            for (int p = 0; p < nA; ++p)
              for (int q = 0; q < nA; ++q) {
                Vec ab(nA, Rational(0));
                for (int t = 0; t < nA; ++t) ab[t] = A.m(p, q, t);
                Vec e_u(nA, Rational(0));
                e_u[u] = 1;
                Vec abu = A.product(ab, e_u);
                for (int t = 0; t < nA; ++t)
                  if (!is_zero(abu[t]))
                    m.at(flat(i, p), flat(j, q), flat(k, t)) += phi.at(i, j, k) * abu[t];
              }
          }
      members = members && big.contains(m);
    }
  add_flag(r, "generators phi x (ab u) lie in Dcomm(r2 x A)", members);
}

void suite_lemma1(SuiteResult& r, const GroebnerBudget& budget) {
  LieAlgebra sl2 = builtin("sl2").algebra;
  auto A = truncated_polynomial_algebra(3);
  LieAlgebra cur = current_algebra(sl2, A);
  add_flag(r, "sl2 x Q[t]/t^3 perfect", is_perfect(cur));
  add_flag(r, "sl2 x Q[t]/t^3 centerless", is_centerless(cur));
  CpaReport base = cpa_solve(cur, budget);
  add(r, "cpa verdict on sl2 x Q[t]/t^3", "ZeroOnly", verdict_name(base.verdict));
  auto ext = semidirect_by_derivation(cur, euler_derivation(sl2, A));
  add_flag(r, "Euler derivation outer", ext.outer);
  add(r, "extension dimension", "10", num(ext.algebra.dim()));
  CpaReport rep = cpa_solve(ext.algebra, budget);
  add(r, "cpa verdict on the dim-10 semidirect extension", "ZeroOnly",
      verdict_name(rep.verdict));
}

void suite_lemma2(SuiteResult& r, const GroebnerBudget& budget) {
  LieAlgebra sl2 = builtin("sl2").algebra;
  // the truncated family admits no nontrivial central extension; pinned
  // after computation (see project notes), which is why the desk-scale
  // instance below uses the pinched-Laurent coefficients instead
  std::ostringstream h2line;
  for (int n : {2, 3, 4}) {
    auto A = truncated_polynomial_algebra(n);
    LieAlgebra cur = current_algebra(sl2, A);
    auto ext = semidirect_by_derivation(cur, euler_derivation(sl2, A));
    h2line << (n > 2 ? " " : "") << h2_dim(ext.algebra);
  }
  add(r, "h2 of (sl2 x Q[t]/t^n) + Euler for n=2,3,4", "0 0 0", h2line.str());

  auto P = pinched_laurent_algebra();
  LieAlgebra cur = current_algebra(sl2, P);
  add_flag(r, "pinched current perfect and centerless",
           is_perfect(cur) && is_centerless(cur));
  CpaReport curr = cpa_solve(cur, budget);
  add(r, "cpa verdict on sl2 x pinched-Laurent", "ZeroOnly", verdict_name(curr.verdict));
  auto ext = semidirect_by_derivation(cur, euler_derivation(sl2, P));
  add_flag(r, "Euler derivation outer", ext.outer);
  CpaReport semi = cpa_solve(ext.algebra, budget);
  add(r, "cpa verdict on the dim-10 semidirect extension", "ZeroOnly",
      verdict_name(semi.verdict));
  add(r, "h2 of the dim-10 extension", "1", num(h2_dim(ext.algebra)));
  int q = ext.algebra.dim() - derived_subalgebra(ext.algebra).dim();
  add(r, "codimension q of the derived subalgebra", "1", num(q));
  auto xi = pick_nontrivial_cocycle(ext.algebra);
  add_flag(r, "nontrivial cocycle found", xi.has_value());
  if (!xi) return;
  auto cext = central_extension(ext.algebra, *xi);
  add_flag(r, "central extension nontrivial", cext.nontrivial);
  CpaReport full = cpa_solve(cext.algebra, budget);
  add(r, "cpa verdict on the dim-11 central extension", "LinearSpace",
      verdict_name(full.verdict));
  add(r, "solution dimension", num(q * (q + 1) / 2), num(full.solution_dim()));
  BilinearMapSpace pred = lemma2_predicted_space(ext.algebra, cext, budget);
  add(r, "predicted dimension q(q+1)/2", num(q * (q + 1) / 2), num(pred.dim()));
  BilinearMapSpace sol =
      BilinearMapSpace::from_maps(cext.algebra.dim(), SpaceKind::Custom, full.solution_basis);
  add_flag(r, "solution space equals the prediction (both inclusions)",
           sol.same_space(pred));
  if (full.solution_dim() == 1) {
    ExtensionDecomposition dec =
        decompose_extension_map(full.solution_basis[0], ext.algebra.dim());
    bool shape = dec.phi.is_zero() && dec.psi.is_zero() && vec_is_zero(dec.mu) &&
                 vec_is_zero(dec.a) && is_zero(dec.eta) &&
                 dec.lambda.at(ext.d_index, ext.d_index) == 1;
    add_flag(r, "spanning map is (d,d) -> z", shape);
  }
}

void suite_th22(SuiteResult& r, const GroebnerBudget& budget) {
  AlgebraWindow km = kac_moody_window(graded_builtin("sl2_z1"), 3);
  int d = km.dim() - 2, z = km.dim() - 1;
  BilinearMap span(km.dim());
  span.at(d, d, z) = 1;
  add_flag(r, "the (d,d) -> z map satisfies all window identities",
           verify_cpa(km, span).ok);
  CpaReport rep = cpa_solve(km, 3, budget);
  add(r, "kac-moody window N=3 verdict", "LinearSpace", verdict_name(rep.verdict));
  add(r, "solution dimension", "1", num(rep.solution_dim()));
  if (rep.solution_dim() == 1) add_flag(r, "solution is spanned by (d,d) -> z",
                                        rep.solution_basis[0] == span);
}

void suite_prop_p(SuiteResult& r, const GroebnerBudget& budget) {
  auto c2 = check_condition_C(builtin("sl2").algebra, budget);
  add(r, "condition (C) for sl2", "HoldsByCorollary", condition_c_name(c2.verdict));
  auto c3 = check_condition_C(builtin("sl3").algebra, budget);
  add(r, "condition (C) for sl3", "HoldsByCorollary", condition_c_name(c3.verdict));
  auto ca = check_condition_C(builtin("abelian2").algebra, budget);
  add(r, "condition (C) for abelian2 (negative control)", "Fails",
      condition_c_name(ca.verdict));
  CpaReport base = cpa_solve(builtin("sl2").algebra, budget);
  add(r, "cpa verdict on sl2", "ZeroOnly", verdict_name(base.verdict));
  // with the base solution set trivial, the window correspondence demands a
  // trivial windowed set of every degree; checked on both gradings
  for (const char* name : {"sl2_z1", "sl2_z2"}) {
    CpaReport rep = cpa_solve(loop_window(graded_builtin(name), 3), 3, budget);
    std::string computed = rep.verdict == CpaVerdict::Inconclusive
                               ? verdict_name(rep.verdict)
                               : num(rep.solution_dim());
    add(r, std::string(name) + " windowed solution dimension", "0", computed);
  }
}

void suite_prop33(SuiteResult& r, const GroebnerBudget&, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const char* name : {"sl2_z", "sl2_z1", "sl2_z2", "heisenberg_z", "r2_z"}) {
    BuiltinAlgebra b = builtin(name);
    for (bool comm : {false, true}) {
      BilinearMapSpace space = comm ? dcomm_space(b.algebra) : d_space(b.algebra);
      std::string tag = std::string(name) + (comm ? " Dcomm" : " D");
      HomogeneousDecomposition dec;
      try {
        dec = decompose_bilinear_space(space, *b.grading);
      } catch (const std::logic_error&) {
        add_flag(r, tag + " decomposes", false);
        continue;
      }
      add(r, tag + " component dimensions sum", num(space.dim()), num(dec.total_dim()));
      bool inside = true, homogeneous = true;
      std::vector<BilinearMap> all;
      for (const auto& [g, maps] : dec.components)
        for (const BilinearMap& m : maps) {
          inside = inside && space.contains(m);
          homogeneous = homogeneous && degree_of(m, *b.grading) == g;
          all.push_back(m);
        }
      add_flag(r, tag + " components homogeneous and inside the space",
               inside && homogeneous);
      add_flag(r, tag + " re-summed components span the space",
               BilinearMapSpace::from_maps(space.ambient, space.kind, all).same_space(space));
      // seeded random elements decompose back into the space
      if (space.dim() > 0) {
        BilinearMap mix(space.ambient);
        for (const BilinearMap& m : space.basis) {
          int c = coeff(rng);
          if (c == 0) continue;
          for (int i = 0; i < space.ambient; ++i)
            for (int j = 0; j < space.ambient; ++j)
              for (int k = 0; k < space.ambient; ++k)
                mix.at(i, j, k) += rat(c) * m.at(i, j, k);
        }
        bool parts_inside = true;
        for (const auto& [g, maps] : dec.components) {
          BilinearMap part(space.ambient);
          for (int i = 0; i < space.ambient; ++i)
            for (int j = 0; j < space.ambient; ++j)
              for (int k = 0; k < space.ambient; ++k) {
                if (is_zero(mix.at(i, j, k))) continue;
                long gg = b.grading->group.normalize(b.grading->degrees[k] -
                                                     b.grading->degrees[i] -
                                                     b.grading->degrees[j]);
                if (gg == g) part.at(i, j, k) = mix.at(i, j, k);
              }
          parts_inside = parts_inside && space.contains(part);
        }
        add_flag(r, tag + " random element splits inside the space", parts_inside);
      }
    }
  }
}

}  // namespace

std::vector<std::string> verify_suite_ids() {
  return {"th2", "witt", "prop1", "prop2", "lemma1", "lemma2", "th22", "prop-p", "prop33"};
}

SuiteResult run_verify_suite(const std::string& id, const GroebnerBudget& budget,
                             uint64_t seed) {
  SuiteResult r;
  r.id = id;
  auto start = std::chrono::steady_clock::now();
  if (id == "th2")
    suite_th2(r, budget);
  else if (id == "witt")
    suite_witt(r, budget);
  else if (id == "prop1")
    suite_prop1(r, budget);
  else if (id == "prop2")
    suite_prop2(r, budget);
  else if (id == "lemma1")
    suite_lemma1(r, budget);
  else if (id == "lemma2")
    suite_lemma2(r, budget);
  else if (id == "th22")
    suite_th22(r, budget);
  else if (id == "prop-p")
    suite_prop_p(r, budget);
  else if (id == "prop33")
    suite_prop33(r, budget, seed);
  else
    throw ValidationError("unknown verify suite '" + id + "'");
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace postlie
