#include "postlie/recheck.hpp"

namespace postlie::recheck {

namespace {

Vec unit(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

Violation derivation_identity(const LieAlgebra& L, const BilinearMap& m) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec lhs = m.apply(ei, L.bracket_vec(ej, ek));
        Vec t1 = L.bracket_vec(m.apply(ei, ej), ek);
        Vec t2 = L.bracket_vec(ej, m.apply(ei, ek));
        for (int t = 0; t < n; ++t)
          if (lhs[t] != t1[t] + t2[t]) return {false, "derivation", i, j, k};
      }
  return {};
}

Violation commutativity(const BilinearMap& m) {
  if (!m.is_symmetric()) return {false, "commutativity", -1, -1, -1};
  return {};
}

Violation centroid_identity(const LieAlgebra& L, const BilinearMap& m) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec lhs = m.apply(ei, L.bracket_vec(ej, ek));
        Vec rhs = L.bracket_vec(m.apply(ei, ej), ek);
        if (lhs != rhs) return {false, "centroid", i, j, k};
      }
  return {};
}

Violation assoc_derivation_identity(const CommutativeAlgebra& A, const BilinearMap& m) {
  int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec lhs = m.apply(ei, A.product(ej, ek));
        Vec t1 = A.product(m.apply(ei, ej), ek);
        Vec t2 = A.product(ej, m.apply(ei, ek));
        for (int t = 0; t < n; ++t)
          if (lhs[t] != t1[t] + t2[t]) return {false, "derivation", i, j, k};
      }
  return {};
}

Violation windowed_derivation_identity(const AlgebraWindow& w, const BilinearMap& m) {
  int n = w.dim();
  long lo = w.degree(0), hi = w.degree(0);
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, w.degree(i));
    hi = std::max(hi, w.degree(i));
  }
  // degree shifts carried by the map; values of a shift applied outside
  // [lo, hi] are unrepresented in the window, so such instances are inexact
  std::vector<long> shifts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(m.at(i, j, k))) {
          long s = w.degree(k) - w.degree(i) - w.degree(j);
          if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
        }
  auto representable = [&](long a, long b) {
    for (long s : shifts) {
      long t = a + b + s;
      if (t < lo || t > hi) return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!w.defined(j, k)) continue;
        long di = w.degree(i), dj = w.degree(j), dk = w.degree(k);
        if (!representable(di, dj) || !representable(di, dk) || !representable(di, dj + dk))
          continue;
        Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
        Vec bjk(n, Rational(0));
        for (const auto& [t, v] : w.bracket(j, k)) bjk[t] = v;
        Vec lhs = m.apply(ei, bjk);
        auto t1 = w.bracket_vec(m.apply(ei, ej), ek);
        auto t2 = w.bracket_vec(ej, m.apply(ei, ek));
        if (!t1 || !t2) continue;  // instance leaves the window
        for (int t = 0; t < n; ++t)
          if (lhs[t] != (*t1)[t] + (*t2)[t]) return {false, "derivation", i, j, k};
      }
  return {};
}

bool space_ok(const LieAlgebra& L, const BilinearMapSpace& space) {
  for (const BilinearMap& m : space.basis) {
    switch (space.kind) {
      case SpaceKind::D:
        if (!derivation_identity(L, m).ok) return false;
        break;
      case SpaceKind::Dcomm:
        if (!derivation_identity(L, m).ok || !commutativity(m).ok) return false;
        break;
      case SpaceKind::C:
        if (!centroid_identity(L, m).ok) return false;
        break;
      case SpaceKind::Custom:
        break;
    }
  }
  return true;
}

}  // namespace postlie::recheck
