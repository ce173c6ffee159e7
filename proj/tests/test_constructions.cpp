#include "doctest.h"
#include "postlie/constructions.hpp"
#include "postlie/invariants.hpp"

using namespace postlie;

TEST_CASE("truncated polynomial algebras") {
  auto A1 = truncated_polynomial_algebra(1);
  CHECK(A1.dim() == 1);
  CHECK(A1.m(0, 0, 0) == 1);

  auto A2 = truncated_polynomial_algebra(2);
  CHECK(A2.m(1, 1, 0) == 0);  // t^2 = 0
  CHECK(A2.m(0, 1, 1) == 1);

  auto A3 = truncated_polynomial_algebra(3);
  CHECK(A3.m(1, 1, 2) == 1);   // t*t = t^2
  CHECK(A3.product({rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}) ==
        Vec{rat(0), rat(0), rat(0)});  // t*t^2 = 0
}

TEST_CASE("current algebra") {
  LieAlgebra sl2 = builtin("sl2").algebra;

  // A = field: identical structure constants
  LieAlgebra same = current_algebra(sl2, truncated_polynomial_algebra(1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(same.c(i, j, k) == sl2.c(i, j, k));

  LieAlgebra c2 = current_algebra(sl2, truncated_polynomial_algebra(2));
  CHECK(c2.dim() == 6);
  CHECK(is_perfect(c2));
  CHECK(is_centerless(c2));

  LieAlgebra h2t = current_algebra(builtin("heisenberg").algebra,
                                   truncated_polynomial_algebra(2));
  CHECK(h2t.dim() == 6);
  CHECK(center(h2t).dim() == 2);
}

TEST_CASE("euler derivation of a current algebra") {
  LieAlgebra sl2 = builtin("sl2").algebra;
  auto A = truncated_polynomial_algebra(3);
  LieAlgebra cur = current_algebra(sl2, A);
  LinearMap D = euler_derivation(sl2, A);
  CHECK(is_derivation(cur, D));
  CHECK_FALSE(is_inner_derivation(cur, D));
  auto ext = semidirect_by_derivation(cur, D);
  CHECK(ext.algebra.dim() == 10);
  CHECK(ext.outer);
  CHECK(ext.algebra.labels()[ext.d_index] == "d");
}

TEST_CASE("semidirect rejects non-derivations, accepts inner ones") {
  LieAlgebra sl2 = builtin("sl2").algebra;
  LinearMap bogus = Matrix::identity(3);
  CHECK_THROWS_AS(semidirect_by_derivation(sl2, bogus), NotADerivation);

  auto inner = semidirect_by_derivation(sl2, sl2.ad(2));  // ad h
  CHECK_FALSE(inner.outer);
  CHECK(inner.algebra.dim() == 4);

  // abelian dim 1 with D = identity: 2-dim solvable algebra
  auto aff = semidirect_by_derivation(builtin("abelian1").algebra, Matrix::identity(1));
  CHECK(aff.algebra.dim() == 2);
  CHECK_FALSE(is_perfect(aff.algebra));
  CHECK(aff.outer);
}

TEST_CASE("central extensions") {
  LieAlgebra ab2 = builtin("abelian2").algebra;
  Cocycle2 form{Matrix(2, 2)};
  form.coefficients.at(0, 1) = 1;
  form.coefficients.at(1, 0) = -1;
  auto ext = central_extension(ab2, form);
  CHECK(ext.nontrivial);
  // the result is heisenberg
  CHECK(ext.algebra.c(0, 1, 2) == 1);
  CHECK(center(ext.algebra).dim() == 1);

  // zero cocycle: trivial extension, z central, flag false
  Cocycle2 zero{Matrix(2, 2)};
  auto triv = central_extension(ab2, zero);
  CHECK_FALSE(triv.nontrivial);
  CHECK(center(triv.algebra).dim() == 3);

  // a non-cocycle is rejected: on sl2 + K w, the pairing (h, w) fails the
  // identity on the triple (e, f, w)
  std::vector<BracketEntry> table = {
      {0, 1, {{2, rat(1)}}}, {0, 2, {{0, rat(-2)}}}, {1, 2, {{1, rat(2)}}}};
  LieAlgebra sl2w = LieAlgebra::from_structure_constants(4, {"e", "f", "h", "w"}, table);
  Cocycle2 bad{Matrix(4, 4)};
  bad.coefficients.at(2, 3) = 1;
  bad.coefficients.at(3, 2) = -1;
  CHECK_THROWS_AS(central_extension(sl2w, bad), NotACocycle);
}

TEST_CASE("pinched laurent model") {
  auto P = pinched_laurent_algebra();
  CHECK(P.dim() == 3);
  CHECK(P.product({rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}) ==
        Vec{rat(0), rat(0), rat(0)});  // u*v = 0
  LieAlgebra sl2 = builtin("sl2").algebra;
  LieAlgebra cur = current_algebra(sl2, P);
  CHECK(is_perfect(cur));
  CHECK(is_centerless(cur));
  auto ext = semidirect_by_derivation(cur, euler_derivation(sl2, P));
  CHECK(ext.outer);
  CHECK(h2_dim(ext.algebra) == 1);
  CHECK(derived_subalgebra(ext.algebra).dim() == 9);
}

TEST_CASE("loop windows") {
  auto g1 = builtin("sl2_z1");
  AlgebraWindow w = loop_window(GradedLieAlgebra{g1.algebra, *g1.grading}, 1);
  CHECK(w.dim() == 9);

  auto g2 = builtin("sl2_z2");
  AlgebraWindow tw = loop_window(GradedLieAlgebra{g2.algebra, *g2.grading}, 2);
  CHECK(tw.dim() == 7);  // dims 1+2+1+2+1 across degrees -2..2

  // boundary: [e*t^N, f*t^N] escapes the window
  AlgebraWindow w3 = loop_window(GradedLieAlgebra{g1.algebra, *g1.grading}, 3);
  int e_top = -1, f_top = -1;
  for (int i = 0; i < w3.dim(); ++i) {
    if (w3.elements()[i].label == "e*t^3") e_top = i;
    if (w3.elements()[i].label == "f*t^3") f_top = i;
  }
  REQUIRE(e_top >= 0);
  REQUIRE(f_top >= 0);
  CHECK_FALSE(w3.defined(e_top, f_top));
  // [e*t^3, e*t^3] = 0 stays exact
  CHECK(w3.defined(e_top, e_top));

  // a Z-graded input is rejected
  auto gz = builtin("sl2_z");
  CHECK_THROWS_AS(loop_window(GradedLieAlgebra{gz.algebra, *gz.grading}, 2), InvalidGrading);
}

TEST_CASE("witt windows") {
  AlgebraWindow w = witt_window(4, false);
  CHECK(w.dim() == 9);
  auto at = [&](long i) {
    for (int t = 0; t < w.dim(); ++t)
      if (w.degree(t) == i) return t;
    FAIL("missing index");
    return -1;
  };
  // [e_1, e_2] = e_3
  REQUIRE(w.defined(at(1), at(2)));
  CHECK(w.bracket(at(1), at(2)) == SparseVec{{static_cast<int>(at(3)), rat(1)}});
  // [e_i, e_i] = 0
  CHECK(w.bracket(at(2), at(2)).empty());
  // [e_-1, e_1] = 2 e_0
  CHECK(w.bracket(at(-1), at(1)) == SparseVec{{static_cast<int>(at(0)), rat(2)}});
  // [e_3, e_4] leaves the window
  CHECK_FALSE(w.defined(at(3), at(4)));

  AlgebraWindow one = witt_window(4, true);
  CHECK(one.dim() == 6);  // e_{-1} .. e_4
  CHECK(one.degree(0) == -1);
}

TEST_CASE("kac moody window") {
  auto g1 = builtin("sl2_z1");
  AlgebraWindow km = kac_moody_window(GradedLieAlgebra{g1.algebra, *g1.grading}, 3);
  CHECK(km.dim() == 23);
  int d = km.dim() - 2, z = km.dim() - 1;
  CHECK(km.elements()[d].label == "d");
  CHECK(km.elements()[z].label == "z");
  auto find = [&](const std::string& label) {
    for (int i = 0; i < km.dim(); ++i)
      if (km.elements()[i].label == label) return i;
    FAIL("missing element");
    return -1;
  };
  // [d, e*t^2] = 2 e*t^2
  int et2 = find("e*t^2");
  REQUIRE(km.defined(d, et2));
  CHECK(km.bracket(d, et2) == SparseVec{{et2, rat(2)}});
  // z is central
  for (int i = 0; i < km.dim(); ++i) {
    REQUIRE(km.defined(z, i));
    CHECK(km.bracket(z, i).empty());
  }
  // [e*t, f*t^-1] = h*1 + killing(e,f) z = h + 4z
  int et = find("e*t"), ftm = find("f*t^-1"), h1 = find("h*1");
  REQUIRE(km.defined(et, ftm));
  CHECK(km.bracket(et, ftm) == SparseVec{{h1, rat(1)}, {z, rat(4)}});

  // dropping d, z and the cocycle reproduces the loop window
  AlgebraWindow lw = loop_window(GradedLieAlgebra{g1.algebra, *g1.grading}, 3);
  REQUIRE(lw.dim() == km.dim() - 2);
  for (int a = 0; a < lw.dim(); ++a)
    for (int b = 0; b < lw.dim(); ++b) {
      CHECK(lw.defined(a, b) == km.defined(a, b));
      if (!lw.defined(a, b)) continue;
      SparseVec km_no_z;
      for (const auto& [k, v] : km.bracket(a, b))
        if (k != z) km_no_z.emplace_back(k, v);
      CHECK(km_no_z == lw.bracket(a, b));
    }

  // non-simple bases are rejected
  auto hz = builtin("heisenberg");
  CHECK_THROWS_AS(
      kac_moody_window(GradedLieAlgebra{hz.algebra, Grading{GradeGroup::mod(1), {0, 0, 0}}}, 2),
      InvalidGrading);
}
