#include <algorithm>
#include <random>

#include "doctest.h"
#include "postlie/groebner.hpp"
#include "postlie/polynomial.hpp"

using namespace postlie;

namespace {

Polynomial p(int nvars, const std::string& s) { return Polynomial::parse(nvars, s); }

}  // namespace

TEST_CASE("polynomial print/parse round trip") {
  Polynomial q = p(3, "3/2*c1^2*c3 - c2");
  CHECK(q.str() == "3/2*c1^2*c3 - c2");
  CHECK(Polynomial::parse(3, q.str()) == q);
  CHECK(p(2, "0").is_zero());
  CHECK(p(2, "c1 + c1") == p(2, "2*c1"));
  CHECK(p(2, "c1 - c1").is_zero());
  CHECK(p(1, "-c1^2").str() == "-c1^2");
}

TEST_CASE("deg-lex ordering") {
  Polynomial q = p(2, "c2 + c1 + c1*c2 + c1^2");
  CHECK(q.str() == "c1^2 + c1*c2 + c1 + c2");
  CHECK(q.leading_monomial().e == std::vector<unsigned>{2, 0});
}

TEST_CASE("buchberger basic cases") {
  PolyIdeal single(1, {p(1, "c1")});
  CHECK(single.reduced_basis() == std::vector<Polynomial>{p(1, "c1")});

  PolyIdeal empty(2, {});
  CHECK(empty.reduced_basis().empty());
}

TEST_CASE("buchberger two generators with known variety") {
  // variety of {c1*c2, c1^2 - c1}: points (0, t) and (1, 0)
  PolyIdeal ideal(2, {p(2, "c1*c2"), p(2, "c1^2 - c1")});
  const auto& basis = ideal.reduced_basis();
  auto member = [&](const Polynomial& q) { return ideal_membership(q, ideal); };
  CHECK(member(p(2, "c1*c2")));
  CHECK(member(p(2, "c1^2 - c1")));
  CHECK_FALSE(member(p(2, "c1")));
  CHECK_FALSE(member(p(2, "c2")));
  CHECK_FALSE(member(p(2, "1")));
  // members vanish on the known variety points
  for (const Polynomial& g : basis) {
    CHECK(g.evaluate({rat(0), rat(7)}) == 0);
    CHECK(g.evaluate({rat(1), rat(0)}) == 0);
  }
}

TEST_CASE("normal form and membership") {
  PolyIdeal ideal(1, {p(1, "c1")});
  CHECK(normal_form(p(1, "1"), ideal.reduced_basis()) == p(1, "1"));
  CHECK_FALSE(ideal_membership(p(1, "1"), ideal));
  CHECK(ideal_membership(p(1, "c1^2"), ideal));
}

TEST_CASE("variety certificates") {
  PolyIdeal coords(2, {p(2, "c1"), p(2, "c2")});
  CHECK(variety_is_origin_only(coords));
  CHECK(origin_only_strict(coords));

  PolyIdeal axes(2, {p(2, "c1*c2")});
  CHECK_FALSE(variety_is_origin_only(axes));
  CHECK_FALSE(origin_only_strict(axes));

  PolyIdeal triangular(2, {p(2, "c1^2"), p(2, "c2 - c1")});
  CHECK(variety_is_origin_only(triangular));
  CHECK(origin_only_strict(triangular));
}

TEST_CASE("variety equals linear subspace") {
  PolyIdeal empty(2, {});
  std::vector<Vec> whole = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  CHECK(variety_equals_linear_subspace(empty, whole));

  PolyIdeal c1(2, {p(2, "c1")});
  std::vector<Vec> line = {{rat(0), rat(1)}};  // c1 = 0
  CHECK(variety_equals_linear_subspace(c1, line));

  PolyIdeal axes(2, {p(2, "c1*c2")});
  CHECK_FALSE(variety_equals_linear_subspace(axes, line));

  // a squared complement form still certifies
  PolyIdeal sq(2, {p(2, "c1^2")});
  CHECK(variety_equals_linear_subspace(sq, line));
}

TEST_CASE("confluence: normal form independent of basis order") {
  PolyIdeal ideal(3, {p(3, "c1*c2 - c3"), p(3, "c2^2 - c1"), p(3, "c3^2 - c1*c2^2")});
  std::vector<Polynomial> basis = ideal.reduced_basis();
  std::mt19937_64 rng(112233);
  Polynomial probe = p(3, "c1^3*c2 + c2^2*c3 - c1");
  Polynomial expect = normal_form(probe, basis);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(basis.begin(), basis.end(), rng);
    CHECK(normal_form(probe, basis) == expect);
  }
}

TEST_CASE("membership agrees with evaluation on sampled common zeros") {
  // ideal with positive-dimensional variety c1 = c2^2
  PolyIdeal ideal(2, {p(2, "c1 - c2^2")});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int k = 0; k < 20; ++k) {
    Rational t = rat(val(rng), 1 + (k % 3));
    Vec point = {t * t, t};
    for (const Polynomial& g : ideal.reduced_basis()) CHECK(g.evaluate(point) == 0);
    Polynomial member = p(2, "c1^2 - c1*c2^2");
    CHECK(ideal_membership(member, ideal));
    CHECK(member.evaluate(point) == 0);
  }
}

TEST_CASE("determinism: identical inputs give identical reduced bases") {
  auto run = [] {
    PolyIdeal ideal(3, {Polynomial::parse(3, "c1*c3 - c2^2"),
                        Polynomial::parse(3, "c1^2 - c2"),
                        Polynomial::parse(3, "c2*c3 - c1")});
    std::string s;
    for (const Polynomial& g : ideal.reduced_basis()) s += g.str() + ";";
    return s;
  };
  CHECK(run() == run());
}

TEST_CASE("resource limit carries statistics") {
  GroebnerBudget tiny;
  tiny.max_spair_reductions = 1;
  PolyIdeal ideal(3, {p(3, "c1*c3 - c2^2"), p(3, "c1^2 - c2"), p(3, "c2*c3 - c1")});
  try {
    ideal.reduced_basis(tiny);
    FAIL("expected ResourceLimit");
  } catch (const ResourceLimit& e) {
    CHECK(e.reductions >= 1);
  }
}
