#include "postlie/cpa.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "postlie/invariants.hpp"

namespace postlie {

namespace {

Vec unit(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

std::string verdict_name(CpaVerdict v) {
  switch (v) {
    case CpaVerdict::ZeroOnly: return "ZeroOnly";
    case CpaVerdict::LinearSpace: return "LinearSpace";
    case CpaVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string condition_c_name(ConditionC v) {
  switch (v) {
    case ConditionC::HoldsByCorollary: return "HoldsByCorollary";
    case ConditionC::HoldsByDirectCheck: return "HoldsByDirectCheck";
    case ConditionC::Fails: return "Fails";
    case ConditionC::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CpaCheck verify_cpa(const LieAlgebra& L, const BilinearMap& phi) {
  int n = L.dim();
  if (phi.dim() != n)
    throw std::invalid_argument("verify_cpa: map dimension does not match the algebra");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (phi.at(i, j, k) != phi.at(j, i, k)) return {false, "commutativity", i, j, -1};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec lhs = phi.apply(ei, L.bracket_vec(ej, ek));
        Vec t1 = L.bracket_vec(phi.apply(ei, ej), ek);
        Vec t2 = L.bracket_vec(phi.apply(ei, ek), ej);
        for (int t = 0; t < n; ++t)
          if (lhs[t] != t1[t] - t2[t]) return {false, "derivation", i, j, k};
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec lhs = phi.apply(L.bracket_vec(ei, ej), ek);
        Vec r1 = phi.apply(ei, phi.apply(ej, ek));
        Vec r2 = phi.apply(ej, phi.apply(ei, ek));
        for (int t = 0; t < n; ++t)
          if (lhs[t] != r1[t] - r2[t]) return {false, "compatibility", i, j, k};
      }
  return {};
}

CpaCheck verify_cpa(const AlgebraWindow& w, const BilinearMap& phi) {
  int n = w.dim();
  if (phi.dim() != n)
    throw std::invalid_argument("verify_cpa: map dimension does not match the window");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (phi.at(i, j, k) != phi.at(j, i, k)) return {false, "commutativity", i, j, -1};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!w.defined(j, k)) continue;
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec bjk(n, Rational(0));
        for (const auto& [t, v] : w.bracket(j, k)) bjk[t] = v;
        Vec lhs = phi.apply(ei, bjk);
        auto t1 = w.bracket_vec(phi.apply(ei, ej), ek);
        auto t2 = w.bracket_vec(phi.apply(ei, ek), ej);
        if (!t1 || !t2) continue;
        for (int t = 0; t < n; ++t)
          if (lhs[t] != (*t1)[t] - (*t2)[t]) return {false, "derivation", i, j, k};
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!w.defined(i, j)) continue;
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec bij(n, Rational(0));
        for (const auto& [t, v] : w.bracket(i, j)) bij[t] = v;
        Vec lhs = phi.apply(bij, ek);
        Vec r1 = phi.apply(ei, phi.apply(ej, ek));
        Vec r2 = phi.apply(ej, phi.apply(ei, ek));
        for (int t = 0; t < n; ++t)
          if (lhs[t] != r1[t] - r2[t]) return {false, "compatibility", i, j, k};
      }
  return {};
}

PolyIdeal cpa_quadratic_ideal(const LieAlgebra& L, const std::vector<BilinearMap>& basis) {
  int n = L.dim();
  int m = static_cast<int>(basis.size());
  std::vector<Polynomial> polys;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          Polynomial p(m);
          Monomial one{std::vector<unsigned>(m, 0)};
          for (int a = 0; a < m; ++a) {
            // linear: phi_a([b_i,b_j], b_k)_t
            Rational lin(0);
            for (const auto& [u, v] : L.bracket(i, j)) lin += v * basis[a].at(u, k, t);
            if (!is_zero(lin)) {
              Monomial ma = one;
              ma.e[a] = 1;
              p.add_term(ma, lin);
            }
          }
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              // quadratic: phi_a(b_i, phi_b(b_j,b_k)) - phi_a(b_j, phi_b(b_i,b_k))
              Rational q(0);
              for (int u = 0; u < n; ++u) {
                if (!is_zero(basis[b].at(j, k, u))) q -= basis[b].at(j, k, u) * basis[a].at(i, u, t);
                if (!is_zero(basis[b].at(i, k, u))) q += basis[b].at(i, k, u) * basis[a].at(j, u, t);
              }
              if (!is_zero(q)) {
                Monomial mab = one;
                mab.e[a] += 1;
                mab.e[b] += 1;
                p.add_term(mab, q);
              }
            }
          if (!p.is_zero()) polys.push_back(std::move(p));
        }
  return PolyIdeal(m, std::move(polys));
}

namespace {

// generic certification of the variety of `ideal` inside the span of
// `maps`; fills verdict, solution, certificate
void certify(CpaReport& report, const PolyIdeal& ideal,
             const std::vector<BilinearMap>& maps, int ambient,
             const GroebnerBudget& budget) {
  int m = static_cast<int>(maps.size());
  for (const Polynomial& g : ideal.generators())
    report.ideal_generators.push_back(g.str());
  if (ideal.generators().empty()) {
    report.verdict = CpaVerdict::LinearSpace;
    report.solution_basis = maps;
    return;
  }
  const std::vector<Polynomial>& gb = ideal.reduced_basis(budget);
  for (const Polynomial& g : gb) report.certificate.push_back(g.str());
  if (variety_is_origin_only(ideal, budget) && origin_only_strict(ideal, budget)) {
    report.verdict = CpaVerdict::ZeroOnly;
    return;
  }
  // candidate linear subspace: vanishing directions forced by the ideal
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
    for (int v = 0; v < m; ++v) candidate.push_back(unit(m, v));
  } else {
    Matrix fm(static_cast<int>(forms.size()), m);
    for (size_t r = 0; r < forms.size(); ++r)
      for (int v = 0; v < m; ++v) fm.at(static_cast<int>(r), v) = forms[r][v];
    candidate = fm.kernel_basis();
  }
  if (!candidate.empty() && variety_equals_linear_subspace(ideal, candidate, budget)) {
    report.verdict = CpaVerdict::LinearSpace;
    std::vector<BilinearMap> sol;
    for (const Vec& cv : candidate) {
      BilinearMap s(ambient);
      for (int a = 0; a < m; ++a) {
        if (is_zero(cv[a])) continue;
        for (int i = 0; i < ambient; ++i)
          for (int j = 0; j < ambient; ++j)
            for (int k = 0; k < ambient; ++k)
              s.at(i, j, k) += cv[a] * maps[a].at(i, j, k);
      }
      sol.push_back(std::move(s));
    }
    BilinearMapSpace space = BilinearMapSpace::from_maps(ambient, SpaceKind::Custom, sol);
    report.solution_basis = space.basis;
    return;
  }
  report.verdict = CpaVerdict::Inconclusive;
}

}  // namespace

CpaReport cpa_solve(const LieAlgebra& L, const GroebnerBudget& budget) {
  Timer timer;
  CpaReport report;
  BilinearMapSpace dc = dcomm_space(L);
  report.dcomm_dim = dc.dim();
  if (dc.dim() == 0) {
    report.verdict = CpaVerdict::ZeroOnly;
    report.seconds = timer.seconds();
    return report;
  }
  PolyIdeal ideal = cpa_quadratic_ideal(L, dc.basis);
  certify(report, ideal, dc.basis, L.dim(), budget);
  for (const BilinearMap& s : report.solution_basis) {
    CpaCheck check = verify_cpa(L, s);
    if (!check.ok)
      throw std::logic_error("internal: certified solution fails verify_cpa at " +
                             check.identity);
    report.witnesses.push_back(s);
  }
  report.seconds = timer.seconds();
  return report;
}

namespace {

PolyIdeal windowed_cpa_ideal(const AlgebraWindow& w, const WindowedDcomm& wd) {
  int n = w.dim();
  int m = wd.dim();
  long lo = w.degree(0), hi = w.degree(0);
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, w.degree(i));
    hi = std::max(hi, w.degree(i));
  }
  auto in_range = [&](long g) { return g >= lo && g <= hi; };
  std::set<long> active(wd.basis_degrees.begin(), wd.basis_degrees.end());
  std::set<long> shifts;
  for (long l1 : active) {
    shifts.insert(l1);
    for (long l2 : active) shifts.insert(l1 + l2);
  }
  std::map<long, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[w.degree(i)].push_back(i);
  auto component = [&](long g) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = comps.find(g);
    return it == comps.end() ? empty : it->second;
  };
  std::vector<Polynomial> polys;
  Monomial one{std::vector<unsigned>(m, 0)};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!w.defined(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        long da = w.degree(a), db = w.degree(b), dc = w.degree(c);
        for (long s : shifts) {
          long out_deg = da + db + dc + s;
          if (!in_range(out_deg)) continue;
          // exactness: every active split of s must evaluate inside
          bool exact = true;
          for (long l2 : active) {
            if (!active.count(s - l2)) continue;
            if (!in_range(db + dc + l2) || !in_range(da + dc + l2)) {
              exact = false;
              break;
            }
          }
          if (!exact) continue;
          for (int t : component(out_deg)) {
            Polynomial p(m);
            for (int x = 0; x < m; ++x) {
              if (wd.basis_degrees[x] != s) continue;
              Rational lin(0);
              for (const auto& [u, v] : w.bracket(a, b)) lin += v * wd.basis[x].at(u, c, t);
              if (!is_zero(lin)) {
                Monomial mx = one;
                mx.e[x] = 1;
                p.add_term(mx, lin);
              }
            }
            for (int x = 0; x < m; ++x)
              for (int y = 0; y < m; ++y) {
                if (wd.basis_degrees[x] + wd.basis_degrees[y] != s) continue;
                Rational q(0);
                for (int u = 0; u < n; ++u) {
                  if (!is_zero(wd.basis[y].at(b, c, u)))
                    q -= wd.basis[y].at(b, c, u) * wd.basis[x].at(a, u, t);
                  if (!is_zero(wd.basis[y].at(a, c, u)))
                    q += wd.basis[y].at(a, c, u) * wd.basis[x].at(b, u, t);
                }
                if (!is_zero(q)) {
                  Monomial mxy = one;
                  mxy.e[x] += 1;
                  mxy.e[y] += 1;
                  p.add_term(mxy, q);
                }
              }
            if (!p.is_zero()) polys.push_back(std::move(p));
          }
        }
      }
    }
  return PolyIdeal(m, std::move(polys));
}

}  // namespace

CpaReport cpa_solve(const AlgebraWindow& w, long degree_bound, const GroebnerBudget& budget) {
  Timer timer;
  CpaReport report;
  report.windowed = true;
  WindowedDcomm wd = windowed_dcomm_space(w, degree_bound);
  report.dcomm_dim = wd.dim();
  report.per_degree_dcomm = wd.per_degree_dims;
  if (wd.dim() == 0) {
    report.verdict = CpaVerdict::ZeroOnly;
    for (const auto& [g, d] : wd.per_degree_dims) report.per_degree_solution[g] = 0;
    report.seconds = timer.seconds();
    return report;
  }
  PolyIdeal ideal = windowed_cpa_ideal(w, wd);
  certify(report, ideal, wd.basis, w.dim(), budget);
  for (const BilinearMap& s : report.solution_basis) {
    CpaCheck check = verify_cpa(w, s);
    if (!check.ok)
      throw std::logic_error("internal: certified window solution fails verify_cpa at " +
                             check.identity);
    report.witnesses.push_back(s);
  }
  // per-degree dimensions of the solution space
  for (const auto& [g, d] : wd.per_degree_dims) report.per_degree_solution[g] = 0;
  if (!report.solution_basis.empty()) {
    std::map<long, std::vector<Vec>> parts;
    for (const BilinearMap& s : report.solution_basis) {
      std::map<long, BilinearMap> split;
      for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j)
          for (int k = 0; k < w.dim(); ++k) {
            if (is_zero(s.at(i, j, k))) continue;
            long g = w.degree(k) - w.degree(i) - w.degree(j);
            auto [it, fresh] = split.emplace(g, BilinearMap(w.dim()));
            it->second.at(i, j, k) = s.at(i, j, k);
          }
      for (auto& [g, part] : split) parts[g].push_back(part.flatten());
    }
    int nd = w.dim() * w.dim() * w.dim();
    for (auto& [g, vecs] : parts)
      report.per_degree_solution[g] = span_dim(vecs, nd);
  }
  report.seconds = timer.seconds();
  return report;
}

ConditionCResult check_condition_C(const LieAlgebra& L, const GroebnerBudget& budget) {
  if (is_centerless(L) && all_derivations_inner(L) && skew_invariance_kernel(L).empty())
    return {ConditionC::HoldsByCorollary, std::nullopt};
  BilinearMapSpace dc = dcomm_space(L);
  int m = dc.dim();
  if (m == 0) return {ConditionC::HoldsByDirectCheck, std::nullopt};
  int n = L.dim();
  // phi(x, phi(y,z)) - phi(y, phi(x,z)) = 0: pure quadratic system
  std::vector<Polynomial> polys;
  Monomial one{std::vector<unsigned>(m, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          Polynomial p(m);
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              Rational q(0);
              for (int u = 0; u < n; ++u) {
                if (!is_zero(dc.basis[b].at(j, k, u)))
                  q += dc.basis[b].at(j, k, u) * dc.basis[a].at(i, u, t);
                if (!is_zero(dc.basis[b].at(i, k, u)))
                  q -= dc.basis[b].at(i, k, u) * dc.basis[a].at(j, u, t);
              }
              if (!is_zero(q)) {
                Monomial mab = one;
                mab.e[a] += 1;
                mab.e[b] += 1;
                p.add_term(mab, q);
              }
            }
          if (!p.is_zero()) polys.push_back(std::move(p));
        }
  auto violates = [&](const BilinearMap& phi) {
    if (phi.is_zero()) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
          Vec lhs = phi.apply(ei, phi.apply(ej, ek));
          Vec rhs = phi.apply(ej, phi.apply(ei, ek));
          if (lhs != rhs) return false;
        }
    return true;  // nonzero element of dcomm with symmetric composition
  };
  PolyIdeal ideal(m, std::move(polys));
  if (ideal.generators().empty()) {
    // every dcomm element qualifies; any nonzero basis element is a witness
    return {ConditionC::Fails, dc.basis[0]};
  }
  // generators are homogeneous quadratics, so the variety is a cone and the
  // leading-term criterion is conclusive
  if (variety_is_origin_only(ideal, budget))
    return {ConditionC::HoldsByDirectCheck, std::nullopt};
  for (const BilinearMap& cand : dc.basis)
    if (violates(cand)) return {ConditionC::Fails, cand};
  // rational witness through the forced-vanishing subspace
  const std::vector<Polynomial>& gb = ideal.reduced_basis(budget);
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
  std::vector<Vec> candidate;
  if (forms.empty()) {
    for (int v = 0; v < m; ++v) candidate.push_back(unit(m, v));
  } else {
    Matrix fm(static_cast<int>(forms.size()), m);
    for (size_t r = 0; r < forms.size(); ++r)
      for (int v = 0; v < m; ++v) fm.at(static_cast<int>(r), v) = forms[r][v];
    candidate = fm.kernel_basis();
  }
  for (const Vec& cv : candidate) {
    BilinearMap s(n);
    for (int a = 0; a < m; ++a)
      if (!is_zero(cv[a]))
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) s.at(i, j, k) += cv[a] * dc.basis[a].at(i, j, k);
    if (violates(s)) return {ConditionC::Fails, s};
  }
  return {ConditionC::Inconclusive, std::nullopt};
}

BilinearMapSpace lemma2_predicted_space(const LieAlgebra& base, const CentralExtension& ext,
                                        const GroebnerBudget& budget) {
  if (!is_centerless(base))
    throw HypothesisViolated("centerless", "base algebra has a nonzero center");
  if (!ext.nontrivial)
    throw HypothesisViolated("nontrivial extension", "the extension cocycle is a coboundary");
  CpaReport base_report = cpa_solve(base, budget);
  if (base_report.verdict != CpaVerdict::ZeroOnly)
    throw HypothesisViolated("base CPA triviality",
                             "base algebra CPA verdict is " + verdict_name(base_report.verdict));
  int n = ext.algebra.dim();
  // quotient functionals of ext modulo derived(ext) + K z
  Subspace derived = derived_subalgebra(ext.algebra);
  std::vector<Vec> sub = derived.basis;
  sub.push_back(unit(n, ext.z_index));
  std::vector<Vec> reduced = canonical_span(sub, n);
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivots;
  for (const Vec& row : reduced) {
    int p = 0;
    while (p < n && is_zero(row[p])) ++p;
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vec> functionals;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec ell(n, Rational(0));
    ell[f] = 1;
    for (size_t r = 0; r < reduced.size(); ++r) ell[pivots[r]] = -reduced[r][f];
    functionals.push_back(std::move(ell));
  }
  std::vector<BilinearMap> maps;
  int q = static_cast<int>(functionals.size());
  for (int a = 0; a < q; ++a)
    for (int b = a; b < q; ++b) {
      BilinearMap mmap(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational v = functionals[a][i] * functionals[b][j];
          if (a != b) v += functionals[b][i] * functionals[a][j];
          mmap.at(i, j, ext.z_index) = v;
        }
      maps.push_back(std::move(mmap));
    }
  return BilinearMapSpace::from_maps(n, SpaceKind::Custom, maps);
}

ExtensionDecomposition decompose_extension_map(const BilinearMap& Phi, int base_dim) {
  int n = base_dim;
  if (Phi.dim() != n + 1)
    throw std::invalid_argument("decompose_extension_map: dimension mismatch");
  if (!Phi.is_symmetric())
    throw std::invalid_argument("decompose_extension_map: the template describes symmetric maps");
  ExtensionDecomposition d;
  d.phi = BilinearMap(n);
  d.lambda = Matrix(n, n);
  d.psi = Matrix(n, n);
  d.mu = Vec(n, Rational(0));
  d.a = Vec(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) d.phi.at(i, j, k) = Phi.at(i, j, k);
      d.lambda.at(i, j) = Phi.at(i, j, n);
    }
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) d.psi.at(t, i) = Phi.at(i, n, t);
    d.mu[i] = Phi.at(i, n, n);
    d.a[i] = Phi.at(n, n, i);
  }
  d.eta = Phi.at(n, n, n);
  return d;
}

BilinearMap ExtensionDecomposition::reassemble() const {
  int n = phi.dim();
  BilinearMap Phi(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) Phi.at(i, j, k) = phi.at(i, j, k);
      Phi.at(i, j, n) = lambda.at(i, j);
    }
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) {
      Phi.at(i, n, t) = psi.at(t, i);
      Phi.at(n, i, t) = psi.at(t, i);
    }
    Phi.at(i, n, n) = mu[i];
    Phi.at(n, i, n) = mu[i];
    Phi.at(n, n, i) = a[i];
  }
  Phi.at(n, n, n) = eta;
  return Phi;
}

}  // namespace postlie
