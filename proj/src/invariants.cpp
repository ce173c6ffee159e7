#include "postlie/invariants.hpp"

#include <algorithm>

namespace postlie {

Rational Cocycle2::eval(const Vec& u, const Vec& v) const {
  int n = coefficients.rows();
  Rational s(0);
  for (int i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < n; ++j)
      if (!is_zero(coefficients.at(i, j))) s += u[i] * v[j] * coefficients.at(i, j);
  }
  return s;
}

Vec flatten_map(const LinearMap& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

LinearMap unflatten_map(const Vec& v, int dim) {
  LinearMap m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = v[static_cast<size_t>(i) * dim + j];
  return m;
}

Subspace center(const LieAlgebra& L) {
  int n = L.dim();
  // x central iff ad(b_j) x = 0 for all j: stack the ad matrices
  Matrix stacked(n * n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i)
      for (const auto& [k, v] : L.bracket(i, j)) stacked.at(j * n + k, i) += v;
  }
  Subspace s;
  s.ambient = n;
  s.basis = canonical_span(stacked.kernel_basis(), n);
  return s;
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Vec> spanning;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v(n, Rational(0));
      for (const auto& [k, w] : L.bracket(i, j)) v[k] = w;
      if (!vec_is_zero(v)) spanning.push_back(std::move(v));
    }
  Subspace s;
  s.ambient = n;
  s.basis = canonical_span(spanning, n);
  return s;
}

bool is_perfect(const LieAlgebra& L) { return derived_subalgebra(L).dim() == L.dim(); }
bool is_centerless(const LieAlgebra& L) { return center(L).dim() == 0; }

namespace {

// Kernel of a linear condition on maps D in coordinates d_{ab} = D(b_b)_a.
// row_filler(i, j, add) adds coefficients for the pair (i, j).
template <typename Filler>
std::vector<LinearMap> map_kernel(const LieAlgebra& L, bool ordered_pairs, Filler filler) {
  int n = L.dim();
  Matrix sys(ordered_pairs ? n * n * n : n * (n - 1) / 2 * n, n * n);
  int row0 = 0;
  for (int i = 0; i < n; ++i) {
    int jstart = ordered_pairs ? 0 : i + 1;
    for (int j = jstart; j < n; ++j) {
      auto add = [&](int coord, int a, int b, const Rational& v) {
        sys.at(row0 + coord, a * n + b) += v;
      };
      filler(i, j, add);
      row0 += n;
    }
  }
  std::vector<LinearMap> out;
  for (const Vec& v : canonical_span(sys.kernel_basis(), n * n))
    out.push_back(unflatten_map(v, n));
  return out;
}

}  // namespace

std::vector<LinearMap> derivation_space(const LieAlgebra& L) {
  int n = L.dim();
  // D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] = 0; antisymmetric in (i,j)
  return map_kernel(L, false, [&](int i, int j, auto add) {
    for (const auto& [m, v] : L.bracket(i, j))
      for (int t = 0; t < n; ++t) add(t, t, m, v);
    for (int a = 0; a < n; ++a) {
      for (const auto& [t, v] : L.bracket(a, j)) add(t, a, i, -v);
      for (const auto& [t, v] : L.bracket(i, a)) add(t, a, j, -v);
    }
  });
}

std::vector<LinearMap> inner_derivation_space(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Vec> flats;
  for (int i = 0; i < n; ++i) flats.push_back(flatten_map(L.ad(i)));
  std::vector<LinearMap> out;
  for (const Vec& v : canonical_span(flats, n * n)) out.push_back(unflatten_map(v, n));
  return out;
}

bool all_derivations_inner(const LieAlgebra& L) {
  return derivation_space(L).size() == inner_derivation_space(L).size();
}

std::vector<LinearMap> centroid(const LieAlgebra& L) {
  int n = L.dim();
  // g[b_i, b_j] - [g b_i, b_j] = 0, all ordered pairs including i = j
  return map_kernel(L, true, [&](int i, int j, auto add) {
    for (const auto& [m, v] : L.bracket(i, j))
      for (int t = 0; t < n; ++t) add(t, t, m, v);
    for (int a = 0; a < n; ++a)
      for (const auto& [t, v] : L.bracket(a, j)) add(t, a, i, -v);
  });
}

bool is_central(const LieAlgebra& L) { return centroid(L).size() == 1; }

std::vector<LinearMap> skew_invariance_kernel(const LieAlgebra& L) {
  int n = L.dim();
  // [w b_i, b_j] + [b_i, w b_j] = 0; symmetric in (i,j), pairs i < j suffice
  return map_kernel(L, false, [&](int i, int j, auto add) {
    for (int a = 0; a < n; ++a) {
      for (const auto& [t, v] : L.bracket(a, j)) add(t, a, i, v);
      for (const auto& [t, v] : L.bracket(i, a)) add(t, a, j, v);
    }
  });
}

std::vector<Cocycle2> two_cocycles(const LieAlgebra& L) {
  int n = L.dim();
  int m = n * (n - 1) / 2;  // unknowns ksi_{ij}, i < j
  auto flat = [&](int i, int j) { return i * n + j; };  // only used with i < j
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_index(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_index[flat(i, j)] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  // ksi([b_i,b_j], b_k) + ksi([b_j,b_k], b_i) + ksi([b_k,b_i], b_j) = 0
  int rows = n * (n - 1) * (n - 2) / 6;
  Matrix sys(std::max(rows, 1), m);
  int row = 0;
  auto add_term = [&](int r, int a, int b, const Rational& v) {
    if (a == b) return;
    if (a < b)
      sys.at(r, pair_index[flat(a, b)]) += v;
    else
      sys.at(r, pair_index[flat(b, a)]) -= v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        for (const auto& [t, v] : L.bracket(i, j)) add_term(row, t, k, v);
        for (const auto& [t, v] : L.bracket(j, k)) add_term(row, t, i, v);
        for (const auto& [t, v] : L.bracket(k, i)) add_term(row, t, j, v);
        ++row;
      }
  std::vector<Cocycle2> out;
  for (const Vec& v : canonical_span(sys.kernel_basis(), m)) {
    Matrix c(n, n);
    for (size_t p = 0; p < pairs.size(); ++p) {
      c.at(pairs[p].first, pairs[p].second) = v[p];
      c.at(pairs[p].second, pairs[p].first) = -v[p];
    }
    out.push_back(Cocycle2{std::move(c)});
  }
  return out;
}

namespace {

Vec cocycle_flat(const Cocycle2& c) {
  int n = c.coefficients.rows();
  Vec v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.push_back(c.coefficients.at(i, j));
  return v;
}

std::vector<Vec> coboundary_span(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Vec> flats;
  for (int f = 0; f < n; ++f) {
    // ksi(x, y) = f([x, y]) for the coordinate functional f
    Vec v;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v.push_back(L.c(i, j, f));
    flats.push_back(std::move(v));
  }
  return canonical_span(flats, n * (n - 1) / 2);
}

}  // namespace

std::vector<Cocycle2> coboundaries(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Cocycle2> out;
  for (const Vec& v : coboundary_span(L)) {
    Matrix c(n, n);
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p) {
        c.at(i, j) = v[p];
        c.at(j, i) = -v[p];
      }
    out.push_back(Cocycle2{std::move(c)});
  }
  return out;
}

int h2_dim(const LieAlgebra& L) {
  return static_cast<int>(two_cocycles(L).size()) -
         static_cast<int>(coboundaries(L).size());
}

bool cocycle_is_trivial(const LieAlgebra& L, const Cocycle2& c) {
  int m = L.dim() * (L.dim() - 1) / 2;
  return in_span(coboundary_span(L), cocycle_flat(c), m);
}

std::optional<Cocycle2> pick_nontrivial_cocycle(const LieAlgebra& L) {
  for (const Cocycle2& c : two_cocycles(L))
    if (!cocycle_is_trivial(L, c)) return c;
  return std::nullopt;
}

Matrix killing_form(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Matrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(L.ad(i));
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

bool is_derivation(const LieAlgebra& L, const LinearMap& D) {
  int n = L.dim();
  if (D.rows() != n || D.cols() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec lhs(n, Rational(0));
      for (const auto& [m, v] : L.bracket(i, j))
        for (int t = 0; t < n; ++t) lhs[t] += v * D.at(t, m);
      Vec di(n), dj(n);
      for (int t = 0; t < n; ++t) {
        di[t] = D.at(t, i);
        dj[t] = D.at(t, j);
      }
      Vec ei(n, Rational(0)), ej(n, Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      Vec rhs = L.bracket_vec(di, ej);
      Vec rhs2 = L.bracket_vec(ei, dj);
      for (int t = 0; t < n; ++t)
        if (lhs[t] != rhs[t] + rhs2[t]) return false;
    }
  return true;
}

bool is_inner_derivation(const LieAlgebra& L, const LinearMap& D) {
  int n = L.dim();
  std::vector<Vec> flats;
  for (int i = 0; i < n; ++i) flats.push_back(flatten_map(L.ad(i)));
  return in_span(canonical_span(flats, n * n), flatten_map(D), n * n);
}

bool is_two_cocycle(const LieAlgebra& L, const Cocycle2& ksi) {
  int n = L.dim();
  const Matrix& m = ksi.coefficients;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Rational s(0);
        for (const auto& [t, v] : L.bracket(i, j)) s += v * m.at(t, k);
        for (const auto& [t, v] : L.bracket(j, k)) s += v * m.at(t, i);
        for (const auto& [t, v] : L.bracket(k, i)) s += v * m.at(t, j);
        if (!is_zero(s)) return false;
      }
  return true;
}

}  // namespace postlie
