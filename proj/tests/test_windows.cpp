#include "doctest.h"
#include "postlie/bilinear.hpp"
#include "postlie/cpa.hpp"
#include "postlie/constructions.hpp"
#include "postlie/recheck.hpp"

using namespace postlie;

namespace {

GradedLieAlgebra graded_builtin(const char* name) {
  BuiltinAlgebra b = builtin(name);
  return GradedLieAlgebra{b.algebra, *b.grading};
}

}  // namespace

TEST_CASE("windowed dcomm on loop windows vanishes degree by degree") {
  for (const char* name : {"sl2_z1", "sl2_z2"}) {
    AlgebraWindow w = loop_window(graded_builtin(name), 3);
    WindowedDcomm wd = windowed_dcomm_space(w, 3);
    CHECK(wd.dim() == 0);
    for (const auto& [g, d] : wd.per_degree_dims) CHECK(d == 0);
    // all degrees up to the bound were examined
    CHECK(wd.per_degree_dims.size() == 7);
  }
}

TEST_CASE("windowed dcomm basis elements satisfy the window identities") {
  AlgebraWindow w = witt_window(4, true);
  WindowedDcomm wd = windowed_dcomm_space(w, 4);
  for (size_t i = 0; i < wd.basis.size(); ++i) {
    CHECK(wd.basis[i].is_symmetric());
    CHECK(recheck::windowed_derivation_identity(w, wd.basis[i]).ok);
    // homogeneity of the reported degree
    const BilinearMap& m = wd.basis[i];
    for (int a = 0; a < w.dim(); ++a)
      for (int b = 0; b < w.dim(); ++b)
        for (int c = 0; c < w.dim(); ++c)
          if (!is_zero(m.at(a, b, c)))
            CHECK(w.degree(c) - w.degree(a) - w.degree(b) == wd.basis_degrees[i]);
  }
}

TEST_CASE("degree bound validation") {
  AlgebraWindow w = witt_window(4, false);
  CHECK_THROWS_AS(windowed_dcomm_space(w, 9), std::invalid_argument);
  CHECK_THROWS_AS(windowed_dcomm_space(w, -1), std::invalid_argument);
}

TEST_CASE("window too small is reported, not ignored") {
  // two elements of opposite degree with their cross bracket escaping the
  // window: degree 1 has unknowns but no exact instance can mention them
  std::vector<WindowElement> elems = {{"x", -1, 0}, {"y", 1, 1}};
  AlgebraWindow w(AlgebraWindow::Kind::Loop, 1, false, elems);
  w.set_undefined(0, 1);
  w.validate();
  try {
    windowed_dcomm_space(w, 1);
    FAIL("expected WindowTooSmall");
  } catch (const WindowTooSmall& e) {
    REQUIRE_FALSE(e.unconstrained_degrees.empty());
    CHECK(e.unconstrained_degrees.front() == -1);
  }
}

TEST_CASE("pinned defaults constrain every degree of every builtin window") {
  // loop and kac-moody at N = 3, witt at N = 4, degree bound B = N: no
  // WindowTooSmall anywhere; these are the CLI defaults
  for (const char* name : {"sl2_z1", "sl2_z2"}) {
    CHECK_NOTHROW(windowed_dcomm_space(loop_window(graded_builtin(name), 3), 3));
    CHECK_NOTHROW(windowed_dcomm_space(kac_moody_window(graded_builtin(name), 3), 3));
  }
  for (bool one_sided : {false, true})
    CHECK_NOTHROW(windowed_dcomm_space(witt_window(4, one_sided), 4));
}

TEST_CASE("user-supplied Z/3 twisted gradings work end to end") {
  // deg e = 1, f = 2, h = 0 over Z/3
  auto b = builtin("sl2");
  auto g3 = attach_grading(b.algebra, Grading{GradeGroup::mod(3), {1, 2, 0}});
  AlgebraWindow w = loop_window(g3, 3);
  CHECK(w.dim() == 7);  // h at -3,0,3; e at -2,1; f at -1,2
  CpaReport rep = cpa_solve(w, 3);
  CHECK(rep.verdict == CpaVerdict::ZeroOnly);
}

TEST_CASE("abelian-style window at B = 0 keeps symmetric degree-0 maps") {
  // abelian base: grading is free, brackets vanish, every instance is exact
  LieAlgebra ab = builtin("abelian2").algebra;
  auto g = attach_grading(ab, Grading{GradeGroup::mod(1), {0, 0}});
  AlgebraWindow w = loop_window(GradedLieAlgebra{ab, g.grading}, 2);
  WindowedDcomm wd = windowed_dcomm_space(w, 0);
  CHECK(wd.per_degree_dims.size() == 1);
  CHECK(wd.per_degree_dims.at(0) > 0);
  for (const BilinearMap& m : wd.basis) CHECK(m.is_symmetric());
}
