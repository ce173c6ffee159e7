#include "postlie/groebner.hpp"

#include <algorithm>
#include <set>

#include "postlie/matrix.hpp"

namespace postlie {

namespace {

struct SPair {
  size_t i, j;
  Monomial lcm;
};

struct SPairLess {
  // normal strategy: smallest lcm first, ties by index
  bool operator()(const SPair& a, const SPair& b) const {
    DegLexLess less;
    if (a.lcm != b.lcm) return less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.term_multiple(l / f.leading_monomial(), 1 / f.leading_coeff());
  Polynomial b = g.term_multiple(l / g.leading_monomial(), 1 / g.leading_coeff());
  return a - b;
}

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       GroebnerStats* stats, const GroebnerBudget* budget) {
  Polynomial rem(p.nvars());
  Polynomial h = p;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const Polynomial& f : basis) {
      if (f.is_zero()) continue;
      if (f.leading_monomial().divides(h.leading_monomial())) {
        Rational c = h.leading_coeff() / f.leading_coeff();
        h = h - f.term_multiple(h.leading_monomial() / f.leading_monomial(), c);
        if (stats) {
          stats->term_ops += f.term_count();
          if (budget && stats->term_ops > budget->max_terms)
            throw ResourceLimit(stats->spair_reductions, stats->term_ops,
                                stats->basis_size, "term budget exceeded in reduction");
        }
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(h.leading_monomial(), h.leading_coeff());
      h.add_term(h.leading_monomial(), -h.leading_coeff());
    }
  }
  return rem;
}

}  // namespace

PolyIdeal::PolyIdeal(int nvars, std::vector<Polynomial> gens) : nvars_(nvars) {
  for (Polynomial& g : gens)
    if (!g.is_zero()) gens_.push_back(g.content_stripped());
  // canonical generator order
  std::sort(gens_.begin(), gens_.end(),
            [](const Polynomial& a, const Polynomial& b) { return a < b; });
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const std::vector<Polynomial>& PolyIdeal::reduced_basis(const GroebnerBudget& budget) const {
  if (basis_) return *basis_;
  std::vector<Polynomial> G;
  std::set<SPair, SPairLess> queue;
  auto enqueue_with = [&](size_t new_index) {
    const Polynomial& f = G[new_index];
    for (size_t i = 0; i < new_index; ++i) {
      if (G[i].is_zero()) continue;
      // product criterion: coprime leading terms reduce to zero
      if (G[i].leading_monomial().coprime(f.leading_monomial())) continue;
      queue.insert(SPair{i, new_index,
                         Monomial::lcm(G[i].leading_monomial(), f.leading_monomial())});
    }
  };
  for (const Polynomial& g : gens_) {
    G.push_back(g);
    enqueue_with(G.size() - 1);
  }
  while (!queue.empty()) {
    SPair p = *queue.begin();
    queue.erase(queue.begin());
    if (G[p.i].is_zero() || G[p.j].is_zero()) continue;
    ++stats_.spair_reductions;
    if (stats_.spair_reductions > budget.max_spair_reductions) {
      stats_.basis_size = G.size();
      throw ResourceLimit(stats_.spair_reductions, stats_.term_ops, G.size(),
                          "S-pair budget exceeded");
    }
    Polynomial s = spoly(G[p.i], G[p.j]);
    Polynomial r = reduce_full(s, G, &stats_, &budget).content_stripped();
    if (r.is_zero()) continue;
    G.push_back(r);
    enqueue_with(G.size() - 1);
  }
  // minimalize: ascending leading-term order, keep an element only when no
  // kept element's leading term divides its leading term
  std::vector<Polynomial> sorted;
  for (const Polynomial& g : G)
    if (!g.is_zero()) sorted.push_back(g);
  std::sort(sorted.begin(), sorted.end(),
            [](const Polynomial& a, const Polynomial& b) { return a < b; });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : sorted) {
    bool redundant = false;
    for (const Polynomial& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  // interreduce to the unique reduced basis
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce_full(minimal[i], others, &stats_, &budget);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return a < b; });
  stats_.basis_size = reduced.size();
  basis_ = std::move(reduced);
  return *basis_;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  return reduce_full(p, basis, nullptr, nullptr);
}

bool ideal_membership(const Polynomial& p, const PolyIdeal& ideal,
                      const GroebnerBudget& budget) {
  if (p.is_zero()) return true;
  return normal_form(p, ideal.reduced_basis(budget)).is_zero();
}

bool variety_is_origin_only(const PolyIdeal& ideal, const GroebnerBudget& budget) {
  const std::vector<Polynomial>& basis = ideal.reduced_basis(budget);
  std::vector<bool> covered(ideal.nvars(), false);
  for (const Polynomial& g : basis) {
    if (g.is_constant() && !g.is_zero()) return false;  // inconsistent precondition
    int v = g.leading_monomial().pure_power_var();
    if (v >= 0) covered[v] = true;
  }
  for (bool b : covered)
    if (!b) return false;
  return true;
}

bool origin_only_strict(const PolyIdeal& ideal, const GroebnerBudget& budget) {
  const std::vector<Polynomial>& basis = ideal.reduced_basis(budget);
  int n = ideal.nvars();
  std::vector<bool> known(n, false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Polynomial& g : basis) {
      // drop terms containing a variable already known to vanish
      Polynomial r(n);
      for (const auto& [m, c] : g.terms()) {
        bool dead = false;
        for (int v = 0; v < n; ++v)
          if (m.e[v] > 0 && known[v]) {
            dead = true;
            break;
          }
        if (!dead) r.add_term(m, c);
      }
      if (r.is_zero()) continue;
      if (r.term_count() == 1) {
        int v = r.leading_monomial().pure_power_var();
        if (v >= 0 && !known[v]) {
          known[v] = true;
          progress = true;
        }
      }
    }
  }
  for (bool b : known)
    if (!b) return false;
  return true;
}

bool variety_equals_linear_subspace(const PolyIdeal& ideal,
                                    const std::vector<Vec>& subspace_basis,
                                    const GroebnerBudget& budget) {
  int n = ideal.nvars();
  int s = static_cast<int>(subspace_basis.size());
  // (a) the parameterization kills every generator
  std::vector<Polynomial> subs;
  for (int v = 0; v < n; ++v) {
    Polynomial sub(s == 0 ? 1 : s);
    for (int a = 0; a < s; ++a) {
      if (!is_zero(subspace_basis[a][v])) {
        Polynomial t = Polynomial::variable(s, a).scaled(subspace_basis[a][v]);
        sub = sub + t;
      }
    }
    subs.push_back(sub);
  }
  for (const Polynomial& g : ideal.generators())
    if (!g.substitute(subs).is_zero()) return false;
  // (b) every defining form of the subspace has a power inside the ideal
  std::vector<Vec> forms;
  if (s == 0) {
    for (int v = 0; v < n; ++v) {
      Vec e(n, Rational(0));
      e[v] = 1;
      forms.push_back(std::move(e));
    }
  } else {
    Matrix m(s, n);
    for (int a = 0; a < s; ++a)
      for (int v = 0; v < n; ++v) m.at(a, v) = subspace_basis[a][v];
    forms = m.kernel_basis();
  }
  const std::vector<Polynomial>& basis = ideal.reduced_basis(budget);
  for (const Vec& f : forms) {
    Polynomial lin(n);
    Monomial one{std::vector<unsigned>(n, 0)};
    for (int v = 0; v < n; ++v)
      if (!is_zero(f[v])) {
        Monomial mv = one;
        mv.e[v] = 1;
        lin.add_term(mv, f[v]);
      }
    bool inside = false;
    Polynomial pw = lin;
    for (int k = 1; k <= 4; ++k) {
      if (normal_form(pw, basis).is_zero()) {
        inside = true;
        break;
      }
      pw = pw * lin;
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace postlie
