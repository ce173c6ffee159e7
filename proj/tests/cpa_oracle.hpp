#ifndef POSTLIE_TESTS_CPA_ORACLE_HPP
#define POSTLIE_TESTS_CPA_ORACLE_HPP

// Test-only brute-force oracle: solves the commutative post-Lie system
// directly in the full dim^3 coefficient space by one Groebner computation,
// with no use of the structured dcomm pipeline. Used to cross-check
// cpa_solve verdicts on small algebras.

#include <random>
#include <vector>

#include "postlie/cpa.hpp"
#include "postlie/groebner.hpp"
#include "postlie/lie_algebra.hpp"

namespace postlie::oracle {

struct OracleReport {
  CpaVerdict verdict = CpaVerdict::Inconclusive;
  int solution_dim = -1;  // defined for ZeroOnly (0) and LinearSpace
};

inline OracleReport unstructured_cpa(const LieAlgebra& L, const GroebnerBudget& budget = {}) {
  int n = L.dim();
  int m = n * n * n;
  auto var = [&](int i, int j, int k) { return (i * n + j) * n + k; };
  std::vector<Polynomial> gens;
  Monomial one{std::vector<unsigned>(m, 0)};
  auto lin = [&](std::vector<std::pair<int, Rational>> terms) {
    Polynomial p(m);
    for (auto& [v, c] : terms) {
      Monomial mv = one;
      mv.e[v] = 1;
      p.add_term(mv, c);
    }
    if (!p.is_zero()) gens.push_back(p);
  };
  // commutativity
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        lin({{var(i, j, k), rat(1)}, {var(j, i, k), rat(-1)}});
  // derivation rule phi(x,[y,z]) - [phi(x,y),z] + [phi(x,z),y] = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          std::vector<std::pair<int, Rational>> terms;
          for (const auto& [u, v] : L.bracket(j, k)) terms.push_back({var(i, u, t), v});
          for (int u = 0; u < n; ++u) {
            for (const auto& [tt, v] : L.bracket(u, k))
              if (tt == t) terms.push_back({var(i, j, u), -v});
            for (const auto& [tt, v] : L.bracket(u, j))
              if (tt == t) terms.push_back({var(i, k, u), v});
          }
          lin(std::move(terms));
        }
  // compatibility phi([x,y],z) - phi(x,phi(y,z)) + phi(y,phi(x,z)) = 0
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          Polynomial p(m);
          for (const auto& [u, v] : L.bracket(i, j)) {
            Monomial mv = one;
            mv.e[var(u, k, t)] = 1;
            p.add_term(mv, v);
          }
          for (int u = 0; u < n; ++u) {
            Monomial q1 = one;
            q1.e[var(j, k, u)] += 1;
            q1.e[var(i, u, t)] += 1;
            p.add_term(q1, rat(-1));
            Monomial q2 = one;
            q2.e[var(i, k, u)] += 1;
            q2.e[var(j, u, t)] += 1;
            p.add_term(q2, rat(1));
          }
          if (!p.is_zero()) gens.push_back(p);
        }
  PolyIdeal ideal(m, std::move(gens));
  OracleReport rep;
  if (ideal.generators().empty()) {
    rep.verdict = CpaVerdict::LinearSpace;
    rep.solution_dim = m;
    return rep;
  }
  const auto& gb = ideal.reduced_basis(budget);
  if (variety_is_origin_only(ideal, budget) && origin_only_strict(ideal, budget)) {
    rep.verdict = CpaVerdict::ZeroOnly;
    rep.solution_dim = 0;
    return rep;
  }
  std::vector<Vec> forms;
  for (const Polynomial& g : gb)
    if (g.degree() == 1) {
      Vec f(m, Rational(0));
      for (const auto& [mono, c] : g.terms()) {
        int v = mono.pure_power_var();
        if (v >= 0) f[v] = c;
      }
      forms.push_back(std::move(f));
    }
  for (int v = 0; v < m; ++v) {
    Polynomial pw = Polynomial::variable(m, v);
    for (int k = 1; k <= 4; ++k) {
      if (normal_form(pw, gb).is_zero()) {
        Vec f(m, Rational(0));
        f[v] = 1;
        forms.push_back(std::move(f));
        break;
      }
      pw = pw * Polynomial::variable(m, v);
    }
  }
  std::vector<Vec> candidate;
  if (forms.empty()) {
    for (int v = 0; v < m; ++v) {
      Vec e(m, Rational(0));
      e[v] = 1;
      candidate.push_back(std::move(e));
    }
  } else {
    Matrix fm(static_cast<int>(forms.size()), m);
    for (size_t r = 0; r < forms.size(); ++r)
      for (int v = 0; v < m; ++v) fm.at(static_cast<int>(r), v) = forms[r][v];
    candidate = fm.kernel_basis();
  }
  if (!candidate.empty() && variety_equals_linear_subspace(ideal, candidate, budget)) {
    rep.verdict = CpaVerdict::LinearSpace;
    rep.solution_dim = static_cast<int>(candidate.size());
    return rep;
  }
  return rep;
}

/// Seeded random Lie algebras of dim <= 3: catalog brackets under a random
/// unimodular change of basis.
inline LieAlgebra random_small_algebra(std::mt19937_64& rng) {
  using Entry = BracketEntry;
  std::uniform_int_distribution<int> pick(0, 7);
  int choice = pick(rng);
  int n = 3;
  std::vector<Entry> table;
  switch (choice) {
    case 0: n = 1; break;
    case 1: n = 2; break;                                  // abelian2
    case 2: n = 2; table = {{0, 1, {{1, rat(1)}}}}; break;  // r2
    case 3: n = 3; break;                                  // abelian3
    case 4: table = {{0, 1, {{2, rat(1)}}}}; break;        // heisenberg
    case 5:                                                // sl2
      table = {{0, 1, {{2, rat(1)}}}, {0, 2, {{0, rat(-2)}}}, {1, 2, {{1, rat(2)}}}};
      break;
    case 6: table = {{0, 1, {{1, rat(1)}}}}; break;  // r2 + K
    case 7:                                          // solvable [x,y]=y, [x,z]=2z
      table = {{0, 1, {{1, rat(1)}}}, {0, 2, {{2, rat(2)}}}};
      break;
  }
  LieAlgebra base = LieAlgebra::from_structure_constants(n, {}, table);
  // random unimodular basis change from elementary operations
  Matrix P = Matrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), ops(2, 5);
  int k = ops(rng);
  for (int s = 0; s < k; ++s) {
    int a = idx(rng), b = idx(rng);
    int c = coef(rng);
    if (a == b || c == 0) continue;
    for (int r = 0; r < n; ++r) P.at(r, a) += rat(c) * P.at(r, b);
  }
  // columns of P are the new basis; transform the constants
  Matrix Q(n, n);  // P^{-1}
  for (int col = 0; col < n; ++col) {
    Vec e(n, Rational(0));
    e[col] = 1;
    auto sol = P.solve(e);
    for (int r = 0; r < n; ++r) Q.at(r, col) = sol->particular[r];
  }
  std::vector<Rational> tensor(static_cast<size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec pi(n), pj(n);
      for (int r = 0; r < n; ++r) {
        pi[r] = P.at(r, i);
        pj[r] = P.at(r, j);
      }
      Vec br = base.bracket_vec(pi, pj);
      Vec coords = Q.apply(br);
      for (int t = 0; t < n; ++t)
        tensor[(static_cast<size_t>(i) * n + j) * n + t] = coords[t];
    }
  return lie_from_tensor(n, {}, std::move(tensor));
}

}  // namespace postlie::oracle

#endif
