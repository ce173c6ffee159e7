#include <random>

#include "doctest.h"
#include "postlie/matrix.hpp"
#include "postlie/sparse.hpp"

using namespace postlie;

namespace {

Matrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) {
    Vec row;
    for (long x : r) row.push_back(rat(x));
    v.push_back(row);
  }
  return Matrix::from_rows(v);
}

Vec vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(rat(x));
  return v;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat_parse("3/6")) == "1/2");
  CHECK(rat_str(rat_parse("-4/2")) == "-2");
  CHECK(rat_parse("7") == rat(7));
  CHECK(rat(1, 3) + rat(2, 5) == rat(11, 15));
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
}

TEST_CASE("rref identity and rank") {
  Matrix id = Matrix::identity(2);
  auto r = id.rref();
  CHECK(r.reduced == id);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
  CHECK(r.rank == 2);
}

TEST_CASE("rref dependent rows") {
  auto r = mat({{1, 2}, {2, 4}}).rref();
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("rref permutation") {
  auto r = mat({{0, 1}, {1, 0}}).rref();
  CHECK(r.rank == 2);
  CHECK(r.reduced == Matrix::identity(2));
}

TEST_CASE("rref is idempotent") {
  Matrix m = mat({{2, 4, 1}, {3, 1, 0}, {5, 5, 1}});
  auto r1 = m.rref();
  auto r2 = r1.reduced.rref();
  CHECK(r1.reduced == r2.reduced);
}

TEST_CASE("kernel basis cases") {
  CHECK(Matrix::identity(3).kernel_basis().empty());

  auto k = mat({{1, -1}}).kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, 1}));

  auto z = Matrix(2, 3).kernel_basis();
  REQUIRE(z.size() == 3);
  CHECK(z[0] == vec({1, 0, 0}));
  CHECK(z[1] == vec({0, 1, 0}));
  CHECK(z[2] == vec({0, 0, 1}));
}

TEST_CASE("solve_linear examples") {
  auto s = Matrix::identity(2).solve(vec({1, 2}));
  REQUIRE(s.has_value());
  CHECK(s->particular == vec({1, 2}));
  CHECK(s->homogeneous.empty());

  auto t = mat({{1, 1}}).solve(vec({3}));
  REQUIRE(t.has_value());
  CHECK(t->particular == vec({3, 0}));
  REQUIRE(t->homogeneous.size() == 1);
  CHECK(t->homogeneous[0] == vec({-1, 1}));

  CHECK_FALSE(mat({{1}, {1}}).solve(vec({1, 2})).has_value());

  CHECK_THROWS(mat({{1, 1}}).solve(vec({1, 2})));
}

TEST_CASE("random matrices: kernel and solve are exact") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4), den(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rat(entry(rng), den(rng));
    auto rr = m.rref();
    auto kernel = m.kernel_basis();
    CHECK(rr.rank + static_cast<int>(kernel.size()) == c);
    for (const Vec& v : kernel) CHECK(vec_is_zero(m.apply(v)));
    // consistent rhs built from a known solution
    Vec x(c);
    for (int j = 0; j < c; ++j) x[j] = rat(entry(rng), den(rng));
    Vec rhs = m.apply(x);
    auto sol = m.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK(m.apply(sol->particular) == rhs);
  }
}

TEST_CASE("sparse solve agrees with dense rref") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    int r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    SparseSystem sys(c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        if (fill(rng) < 0.6) continue;
        int v = entry(rng);
        m.at(i, j) = rat(v);
        sys.add(j, rat(v));
      }
      sys.finish_row();
    }
    auto dense = m.rref();
    auto sparse = sys.solve();
    CHECK(sparse.rank == dense.rank);
    CHECK(sparse.pivot_cols == dense.pivot_cols);
    CHECK(sparse.kernel == m.kernel_basis());
    // reduced rows match nonzero rows of the dense rref
    for (size_t p = 0; p < sparse.reduced_rows.size(); ++p) {
      Vec row(c, Rational(0));
      for (auto& [col, val] : sparse.reduced_rows[p]) row[col] = val;
      CHECK(row == dense.reduced.row(static_cast<int>(p)));
    }
  }
}

TEST_CASE("canonical span and membership") {
  std::vector<Vec> span = canonical_span({vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 0, 1})}, 3);
  CHECK(span.size() == 2);
  CHECK(in_span(span, vec({3, 3, 5}), 3));
  CHECK_FALSE(in_span(span, vec({1, 0, 0}), 3));
}
