#include "postlie/bilinear.hpp"

#include <algorithm>

#include "postlie/sparse.hpp"

namespace postlie {

BilinearMap BilinearMap::from_flat(int dim, const Vec& flat) {
  BilinearMap m(dim);
  m.t_ = flat;
  return m;
}

Vec BilinearMap::apply(const Vec& u, const Vec& v) const {
  Vec r(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (postlie::is_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (postlie::is_zero(v[j])) continue;
      for (int k = 0; k < dim_; ++k)
        if (!postlie::is_zero(at(i, j, k))) r[k] += u[i] * v[j] * at(i, j, k);
    }
  }
  return r;
}

bool BilinearMap::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& x : t_)
    if (!postlie::is_zero(x)) return false;
  return true;
}

bool BilinearMapSpace::contains(const BilinearMap& m) const {
  std::vector<Vec> flats;
  for (const BilinearMap& b : basis) flats.push_back(b.flatten());
  int n = ambient * ambient * ambient;
  return in_span(canonical_span(flats, n), m.flatten(), n);
}

bool BilinearMapSpace::same_space(const BilinearMapSpace& other) const {
  if (ambient != other.ambient) return false;
  std::vector<Vec> a, b;
  for (const BilinearMap& m : basis) a.push_back(m.flatten());
  for (const BilinearMap& m : other.basis) b.push_back(m.flatten());
  int n = ambient * ambient * ambient;
  return canonical_span(a, n) == canonical_span(b, n);
}

BilinearMapSpace BilinearMapSpace::from_maps(int ambient, SpaceKind kind,
                                             const std::vector<BilinearMap>& maps) {
  BilinearMapSpace s;
  s.ambient = ambient;
  s.kind = kind;
  std::vector<Vec> flats;
  for (const BilinearMap& m : maps) flats.push_back(m.flatten());
  for (const Vec& v : canonical_span(flats, ambient * ambient * ambient))
    s.basis.push_back(BilinearMap::from_flat(ambient, v));
  return s;
}

namespace {

// shared assembler over any bilinear product given by sparse rows
using ProductRow = std::vector<std::pair<int, Rational>>;

struct ProductTable {
  int dim;
  std::vector<ProductRow> rows;  // (i*dim + j) -> product of b_i b_j

  const ProductRow& at(int i, int j) const { return rows[static_cast<size_t>(i) * dim + j]; }
};

ProductTable lie_table(const LieAlgebra& L) {
  ProductTable t;
  t.dim = L.dim();
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) t.rows.push_back(L.bracket(i, j));
  return t;
}

ProductTable comm_table(const CommutativeAlgebra& A) {
  ProductTable t;
  t.dim = A.dim();
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      ProductRow row;
      for (int k = 0; k < t.dim; ++k)
        if (!is_zero(A.m(i, j, k))) row.emplace_back(k, A.m(i, j, k));
      t.rows.push_back(std::move(row));
    }
  return t;
}

// phi(b_i, b_j b_k) - phi(b_i,b_j) b_k - [second_term] b_j phi(b_i,b_k) = 0,
// assembled in lexicographic (i, j, k, output) order over all ordered pairs.
BilinearMapSpace solve_space(const ProductTable& P, SpaceKind kind, bool symmetry_rows,
                             bool second_term) {
  int n = P.dim;
  auto idx = [&](int i, int j, int k) {
    return (static_cast<size_t>(i) * n + j) * n + k;
  };
  SparseSystem sys(n * n * n);
  if (symmetry_rows) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          sys.add(static_cast<int>(idx(i, j, k)), Rational(1));
          sys.add(static_cast<int>(idx(j, i, k)), Rational(-1));
          sys.finish_row();
        }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        for (int t = 0; t < n; ++t) {
          for (const auto& [m, v] : P.at(j, k)) sys.add(static_cast<int>(idx(i, m, t)), v);
          for (int m = 0; m < n; ++m) {
            for (const auto& [tt, v] : P.at(m, k))
              if (tt == t) sys.add(static_cast<int>(idx(i, j, m)), -v);
            if (second_term)
              for (const auto& [tt, v] : P.at(j, m))
                if (tt == t) sys.add(static_cast<int>(idx(i, k, m)), -v);
          }
          sys.finish_row();
        }
      }
  std::vector<BilinearMap> maps;
  for (const Vec& v : sys.solve().kernel) maps.push_back(BilinearMap::from_flat(n, v));
  return BilinearMapSpace::from_maps(n, kind, maps);
}

}  // namespace

BilinearMapSpace d_space(const LieAlgebra& L) {
  return solve_space(lie_table(L), SpaceKind::D, false, true);
}

BilinearMapSpace dcomm_space(const LieAlgebra& L) {
  return solve_space(lie_table(L), SpaceKind::Dcomm, true, true);
}

BilinearMapSpace c_space(const LieAlgebra& L) {
  return solve_space(lie_table(L), SpaceKind::C, false, false);
}

BilinearMapSpace d_space_assoc(const CommutativeAlgebra& A) {
  return solve_space(comm_table(A), SpaceKind::D, false, true);
}

std::optional<long> degree_of(const BilinearMap& m, const Grading& grading) {
  int n = m.dim();
  std::optional<long> deg;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (is_zero(m.at(i, j, k))) continue;
        long g = grading.group.normalize(grading.degrees[k] - grading.degrees[i] -
                                         grading.degrees[j]);
        if (!deg)
          deg = g;
        else if (*deg != g)
          return std::nullopt;
      }
  return deg ? deg : std::optional<long>(0);
}

int HomogeneousDecomposition::total_dim() const {
  int d = 0;
  for (const auto& [g, maps] : components) d += static_cast<int>(maps.size());
  return d;
}

HomogeneousDecomposition decompose_bilinear_space(const BilinearMapSpace& space,
                                                  const Grading& grading) {
  int n = space.ambient;
  std::map<long, std::vector<BilinearMap>> raw;
  for (const BilinearMap& m : space.basis) {
    std::map<long, BilinearMap> parts;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (is_zero(m.at(i, j, k))) continue;
          long g = grading.group.normalize(grading.degrees[k] - grading.degrees[i] -
                                           grading.degrees[j]);
          auto [it, fresh] = parts.emplace(g, BilinearMap(n));
          it->second.at(i, j, k) = m.at(i, j, k);
        }
    for (auto& [g, part] : parts) raw[g].push_back(std::move(part));
  }
  HomogeneousDecomposition dec;
  int total = 0;
  for (auto& [g, maps] : raw) {
    BilinearMapSpace comp = BilinearMapSpace::from_maps(n, SpaceKind::Custom, maps);
    for (const BilinearMap& m : comp.basis) {
      if (!space.contains(m))
        throw std::logic_error(
            "graded decomposition left the space; the input is not closed under "
            "homogeneous projection");
      dec.components[g].push_back(m);
    }
    total += comp.dim();
  }
  if (total != space.dim())
    throw std::logic_error("graded decomposition is not a direct sum of the input space");
  return dec;
}

WindowedDcomm windowed_dcomm_space(const AlgebraWindow& w, long degree_bound) {
  const long B = degree_bound;
  if (B < 0 || B > 2 * w.bound())
    throw std::invalid_argument("degree bound must satisfy 0 <= B <= 2N");
  int n = w.dim();
  long lo = w.degree(0), hi = w.degree(0);
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, w.degree(i));
    hi = std::max(hi, w.degree(i));
  }
  std::map<long, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[w.degree(i)].push_back(i);
  auto component = [&](long g) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = comps.find(g);
    return it == comps.end() ? empty : it->second;
  };
  auto in_range = [&](long g) { return g >= lo && g <= hi; };

  WindowedDcomm out;
  out.window_dim = n;
  out.degree_bound = B;
  std::vector<long> too_small;

  for (long ell = -B; ell <= B; ++ell) {
    // unknowns: unordered pairs (u <= v) with target component in range
    std::map<std::tuple<int, int, int>, int> col_of;
    std::vector<std::tuple<int, int, int>> cols;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        long target = w.degree(u) + w.degree(v) + ell;
        if (!in_range(target)) continue;
        for (int t : component(target)) {
          col_of[{u, v, t}] = static_cast<int>(cols.size());
          cols.emplace_back(u, v, t);
        }
      }
    if (cols.empty()) {
      out.per_degree_dims[ell] = 0;
      continue;
    }
    SparseSystem sys(static_cast<int>(cols.size()));
    auto unknown = [&](int a, int b, int t) {
      auto it = col_of.find({std::min(a, b), std::max(a, b), t});
      return it == col_of.end() ? -1 : it->second;
    };
    long instances = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!w.defined(b, c)) continue;
          long da = w.degree(a), db = w.degree(b), dc = w.degree(c);
          long out_deg = da + db + dc + ell;
          if (!in_range(out_deg)) continue;
          long g1 = da + db + ell;  // phi(a,b) component
          long g2 = da + dc + ell;  // phi(a,c) component
          if (!in_range(g1) || !in_range(g2)) continue;
          bool exact = true;
          for (int t : component(g1))
            if (!w.defined(t, c)) {
              exact = false;
              break;
            }
          if (exact)
            for (int t : component(g2))
              if (!w.defined(b, t)) {
                exact = false;
                break;
              }
          if (!exact) continue;
          ++instances;
          for (int t : component(out_deg)) {
            // phi(a, [b,c]) - [phi(a,b), c] - [b, phi(a,c)] = 0
            for (const auto& [m, v] : w.bracket(b, c)) {
              int col = unknown(a, m, t);
              if (col >= 0) sys.add(col, v);
            }
            for (int m : component(g1))
              for (const auto& [tt, v] : w.bracket(m, c))
                if (tt == t) {
                  int col = unknown(a, b, m);
                  if (col >= 0) sys.add(col, -v);
                }
            for (int m : component(g2))
              for (const auto& [tt, v] : w.bracket(b, m))
                if (tt == t) {
                  int col = unknown(a, c, m);
                  if (col >= 0) sys.add(col, -v);
                }
            sys.finish_row();
          }
        }
    if (instances == 0) {
      too_small.push_back(ell);
      out.per_degree_dims[ell] = static_cast<int>(cols.size());
      continue;
    }
    auto result = sys.solve();
    out.per_degree_dims[ell] = static_cast<int>(result.kernel.size());
    for (const Vec& kv : result.kernel) {
      BilinearMap m(n);
      for (size_t c = 0; c < cols.size(); ++c) {
        if (is_zero(kv[c])) continue;
        auto [u, v, t] = cols[c];
        m.at(u, v, t) = kv[c];
        if (u != v) m.at(v, u, t) = kv[c];
      }
      out.basis.push_back(std::move(m));
      out.basis_degrees.push_back(ell);
    }
  }
  if (!too_small.empty()) {
    std::string msg = "window cannot constrain degree components:";
    for (long g : too_small) msg += " " + std::to_string(g);
    throw WindowTooSmall(too_small, msg);
  }
  return out;
}

}  // namespace postlie
