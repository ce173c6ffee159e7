#include "postlie/constructions.hpp"

#include <algorithm>

namespace postlie {

LieAlgebra current_algebra(const LieAlgebra& L, const CommutativeAlgebra& A) {
  int nL = L.dim(), nA = A.dim();
  int n = nL * nA;
  std::vector<std::string> labels;
  for (int i = 0; i < nL; ++i)
    for (int p = 0; p < nA; ++p) labels.push_back(L.labels()[i] + "*" + A.labels()[p]);
  std::vector<Rational> tensor(static_cast<size_t>(n) * n * n, Rational(0));
  auto at = [&](int i, int j, int k) -> Rational& {
    return tensor[(static_cast<size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < nL; ++i)
    for (int j = 0; j < nL; ++j)
      for (const auto& [k, cv] : L.bracket(i, j))
        for (int p = 0; p < nA; ++p)
          for (int q = 0; q < nA; ++q)
            for (int r = 0; r < nA; ++r)
              if (!is_zero(A.m(p, q, r)))
                at(i * nA + p, j * nA + q, k * nA + r) += cv * A.m(p, q, r);
  return lie_from_tensor(n, std::move(labels), std::move(tensor));
}

Grading current_grading(const LieAlgebra& L, const CommutativeAlgebra& A) {
  if (!A.degrees()) throw InvalidGrading("coefficient algebra carries no grading");
  Grading g;
  g.group = GradeGroup::integers();
  for (int i = 0; i < L.dim(); ++i)
    for (int p = 0; p < A.dim(); ++p) g.degrees.push_back((*A.degrees())[p]);
  return g;
}

LinearMap euler_derivation(const LieAlgebra& L, const CommutativeAlgebra& A) {
  if (!A.degrees()) throw InvalidGrading("coefficient algebra carries no grading");
  int n = L.dim() * A.dim();
  LinearMap D(n, n);
  for (int i = 0; i < L.dim(); ++i)
    for (int p = 0; p < A.dim(); ++p)
      D.at(i * A.dim() + p, i * A.dim() + p) = rat((*A.degrees())[p]);
  return D;
}

DerivationExtension semidirect_by_derivation(const LieAlgebra& L, const LinearMap& D,
                                             const std::string& label) {
  int nL = L.dim();
  if (D.rows() != nL || D.cols() != nL)
    throw NotADerivation("derivation matrix size does not match the algebra");
  if (!is_derivation(L, D)) throw NotADerivation("map fails the Leibniz rule");
  int n = nL + 1;
  std::vector<std::string> labels = L.labels();
  labels.push_back(label);
  std::vector<Rational> tensor(static_cast<size_t>(n) * n * n, Rational(0));
  auto at = [&](int i, int j, int k) -> Rational& {
    return tensor[(static_cast<size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < nL; ++i)
    for (int j = 0; j < nL; ++j)
      for (const auto& [k, v] : L.bracket(i, j)) at(i, j, k) = v;
  for (int j = 0; j < nL; ++j)
    for (int t = 0; t < nL; ++t)
      if (!is_zero(D.at(t, j))) {
        at(nL, j, t) = D.at(t, j);
        at(j, nL, t) = -D.at(t, j);
      }
  DerivationExtension ext{lie_from_tensor(n, std::move(labels), std::move(tensor)), nL,
                          !is_inner_derivation(L, D)};
  return ext;
}

CentralExtension central_extension(const LieAlgebra& L, const Cocycle2& ksi,
                                   const std::string& label) {
  int nL = L.dim();
  if (ksi.coefficients.rows() != nL || ksi.coefficients.cols() != nL)
    throw NotACocycle("cocycle size does not match the algebra");
  if (!is_two_cocycle(L, ksi)) throw NotACocycle("map fails the 2-cocycle identity");
  int n = nL + 1;
  std::vector<std::string> labels = L.labels();
  labels.push_back(label);
  std::vector<Rational> tensor(static_cast<size_t>(n) * n * n, Rational(0));
  auto at = [&](int i, int j, int k) -> Rational& {
    return tensor[(static_cast<size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < nL; ++i)
    for (int j = 0; j < nL; ++j) {
      for (const auto& [k, v] : L.bracket(i, j)) at(i, j, k) = v;
      at(i, j, nL) = ksi.coefficients.at(i, j);
    }
  CentralExtension ext{lie_from_tensor(n, std::move(labels), std::move(tensor)), nL,
                       !cocycle_is_trivial(L, ksi)};
  return ext;
}

namespace {

std::string power_label(const std::string& base, long i) {
  if (i == 0) return base + "*1";
  if (i == 1) return base + "*t";
  return base + "*t^" + std::to_string(i);
}

std::vector<WindowElement> loop_basis(const GradedLieAlgebra& gL, int N) {
  if (gL.grading.group.kind != GradeGroup::Kind::Mod)
    throw InvalidGrading("loop windows need a Z/n grading");
  std::vector<WindowElement> elements;
  for (long i = -N; i <= N; ++i) {
    long residue = gL.grading.group.normalize(i);
    for (int b = 0; b < gL.algebra.dim(); ++b)
      if (gL.grading.degrees[b] == residue)
        elements.push_back(WindowElement{power_label(gL.algebra.labels()[b], i), i, b});
  }
  return elements;
}

}  // namespace

AlgebraWindow loop_window(const GradedLieAlgebra& gL, int N) {
  if (N < 1) throw ValidationError("window bound must be positive");
  std::vector<WindowElement> elements = loop_basis(gL, N);
  AlgebraWindow w(AlgebraWindow::Kind::Loop, N, false, elements);
  int n = static_cast<int>(elements.size());
  // window index lookup by (base index, degree)
  auto find = [&](int base, long deg) {
    for (int t = 0; t < n; ++t)
      if (elements[t].base_index == base && elements[t].degree == deg) return t;
    return -1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& bracket = gL.algebra.bracket(elements[a].base_index, elements[b].base_index);
      long target = elements[a].degree + elements[b].degree;
      if (bracket.empty()) {
        w.set_bracket(a, b, {});
        continue;
      }
      if (std::abs(target) > N) {
        w.set_undefined(a, b);
        continue;
      }
      SparseVec value;
      for (const auto& [k, v] : bracket) {
        int t = find(k, target);
        if (t < 0) throw std::logic_error("loop window: missing homogeneous component");
        value.emplace_back(t, v);
      }
      w.set_bracket(a, b, std::move(value));
    }
  w.validate();
  return w;
}

AlgebraWindow witt_window(int N, bool one_sided) {
  if (N < 2) throw ValidationError("witt window needs N >= 2");
  long lo = one_sided ? -1 : -static_cast<long>(N);
  std::vector<WindowElement> elements;
  for (long i = lo; i <= N; ++i)
    elements.push_back(WindowElement{"e_" + std::to_string(i), i, static_cast<int>(i)});
  AlgebraWindow w(AlgebraWindow::Kind::Witt, N, one_sided, elements);
  int n = static_cast<int>(elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      long i = elements[a].degree, j = elements[b].degree;
      if (j == i) {
        w.set_bracket(a, b, {});
        continue;
      }
      long t = i + j;
      if (t < lo || t > N) {
        w.set_undefined(a, b);
        continue;
      }
      w.set_bracket(a, b, {{static_cast<int>(t - lo), rat(j - i)}});
    }
  w.validate();
  return w;
}

AlgebraWindow kac_moody_window(const GradedLieAlgebra& gL, int N) {
  if (N < 1) throw ValidationError("window bound must be positive");
  // the construction is stated for simple base algebras; check the linear
  // surrogates so arbitrary input cannot smuggle in a degenerate base
  if (!is_perfect(gL.algebra) || !is_centerless(gL.algebra) || !is_central(gL.algebra))
    throw InvalidGrading("kac-moody window needs a simple base algebra");
  std::vector<WindowElement> elements = loop_basis(gL, N);
  int loop_n = static_cast<int>(elements.size());
  elements.push_back(WindowElement{"d", 0, -1});
  elements.push_back(WindowElement{"z", 0, -1});
  int d = loop_n, z = loop_n + 1;
  Matrix killing = killing_form(gL.algebra);
  AlgebraWindow w(AlgebraWindow::Kind::KacMoody, N, false, elements);
  auto find = [&](int base, long deg) {
    for (int t = 0; t < loop_n; ++t)
      if (elements[t].base_index == base && elements[t].degree == deg) return t;
    return -1;
  };
  for (int a = 0; a < loop_n; ++a)
    for (int b = a + 1; b < loop_n; ++b) {
      const auto& bracket = gL.algebra.bracket(elements[a].base_index, elements[b].base_index);
      long i = elements[a].degree, j = elements[b].degree;
      long target = i + j;
      SparseVec value;
      if (!bracket.empty() && std::abs(target) > N) {
        w.set_undefined(a, b);
        continue;
      }
      for (const auto& [k, v] : bracket) {
        int t = find(k, target);
        if (t < 0) throw std::logic_error("kac-moody window: missing homogeneous component");
        value.emplace_back(t, v);
      }
      if (target == 0) {
        Rational c = rat(i) * killing.at(elements[a].base_index, elements[b].base_index);
        if (!is_zero(c)) value.emplace_back(z, c);
      }
      w.set_bracket(a, b, std::move(value));
    }
  for (int a = 0; a < loop_n; ++a) {
    long i = elements[a].degree;
    // [d, x ot t^i] = i x ot t^i
    if (i == 0)
      w.set_bracket(a, d, {});
    else
      w.set_bracket(a, d, {{a, rat(-i)}});
    w.set_bracket(a, z, {});
  }
  w.set_bracket(d, z, {});
  w.validate();
  return w;
}

namespace {

LieAlgebra make_sl2() {
  // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  std::vector<BracketEntry> table = {
      {0, 1, {{2, rat(1)}}},   // [e,f] = h
      {0, 2, {{0, rat(-2)}}},  // [e,h] = -2e
      {1, 2, {{1, rat(2)}}},   // [f,h] = 2f
  };
  return LieAlgebra::from_structure_constants(3, {"e", "f", "h"}, table);
}

LieAlgebra make_sl3() {
  auto E = [](int i, int j) {
    Matrix m(3, 3);
    m.at(i, j) = 1;
    return m;
  };
  Matrix h1 = E(0, 0) - E(1, 1);
  Matrix h2 = E(1, 1) - E(2, 2);
  return lie_from_matrices({"e12", "e13", "e23", "f12", "f13", "f23", "h1", "h2"},
                           {E(0, 1), E(0, 2), E(1, 2), E(1, 0), E(2, 0), E(2, 1), h1, h2});
}

LieAlgebra make_heisenberg() {
  return LieAlgebra::from_structure_constants(3, {"x", "y", "z"}, {{0, 1, {{2, rat(1)}}}});
}

LieAlgebra make_abelian(int n) {
  return LieAlgebra::from_structure_constants(n, {}, {});
}

LieAlgebra make_r2() {
  // nonabelian 2-dimensional: [x, y] = y
  return LieAlgebra::from_structure_constants(2, {"x", "y"}, {{0, 1, {{1, rat(1)}}}});
}

BuiltinAlgebra graded(LieAlgebra L, GradeGroup group, std::vector<long> degrees) {
  GradedLieAlgebra g = attach_grading(L, Grading{group, std::move(degrees)});
  return {std::move(g.algebra), std::move(g.grading)};
}

}  // namespace

BuiltinAlgebra builtin(const std::string& name) {
  if (name == "sl2") return {make_sl2(), std::nullopt};
  if (name == "sl3") return {make_sl3(), std::nullopt};
  if (name == "heisenberg") return {make_heisenberg(), std::nullopt};
  if (name == "r2") return {make_r2(), std::nullopt};
  if (name.rfind("abelian", 0) == 0) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(7), &used);
      if (used != name.size() - 7) n = 0;
    } catch (const std::exception&) {
      throw UnknownFamily("unknown builtin algebra '" + name + "'");
    }
    if (n < 1) throw UnknownFamily("abelian dimension must be >= 1");
    return {make_abelian(n), std::nullopt};
  }
  if (name == "sl2_z") return graded(make_sl2(), GradeGroup::integers(), {1, -1, 0});
  if (name == "sl2_z1") return graded(make_sl2(), GradeGroup::mod(1), {0, 0, 0});
  if (name == "sl2_z2") return graded(make_sl2(), GradeGroup::mod(2), {1, 1, 0});
  if (name == "sl3_z1")
    return graded(make_sl3(), GradeGroup::mod(1), {0, 0, 0, 0, 0, 0, 0, 0});
  if (name == "heisenberg_z")
    return graded(make_heisenberg(), GradeGroup::integers(), {1, 1, 2});
  if (name == "r2_z") return graded(make_r2(), GradeGroup::integers(), {0, 1});
  throw UnknownFamily("unknown builtin algebra '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"sl2",    "sl3",   "heisenberg", "r2",           "abelian<n>", "sl2_z",
          "sl2_z1", "sl2_z2", "sl3_z1",    "heisenberg_z", "r2_z"};
}

}  // namespace postlie
