#include "postlie/comm_algebra.hpp"

namespace postlie {

CommutativeAlgebra CommutativeAlgebra::from_structure_constants(
    int dim, std::vector<std::string> labels, std::vector<Rational> tensor, Vec unit,
    std::optional<std::vector<long>> degrees) {
  CommutativeAlgebra A;
  A.dim_ = dim;
  A.labels_ = std::move(labels);
  A.tensor_ = std::move(tensor);
  A.unit_ = std::move(unit);
  A.degrees_ = std::move(degrees);
  if (static_cast<int>(A.labels_.size()) != dim || static_cast<int>(A.unit_.size()) != dim ||
      A.tensor_.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError("commutative algebra: inconsistent sizes");
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (A.m(i, j, k) != A.m(j, i, k))
          throw ValidationError("commutative algebra: product not commutative");
  auto basis_vec = [&](int i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Vec lhs = A.product(A.product(basis_vec(i), basis_vec(j)), basis_vec(k));
        Vec rhs = A.product(basis_vec(i), A.product(basis_vec(j), basis_vec(k)));
        if (lhs != rhs) throw ValidationError("commutative algebra: product not associative");
      }
  for (int i = 0; i < dim; ++i)
    if (A.product(A.unit_, basis_vec(i)) != basis_vec(i))
      throw ValidationError("commutative algebra: unit law fails");
  if (A.degrees_) {
    if (static_cast<int>(A.degrees_->size()) != dim)
      throw ValidationError("commutative algebra: degree list size mismatch");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          if (!is_zero(A.m(i, j, k)) &&
              (*A.degrees_)[k] != (*A.degrees_)[i] + (*A.degrees_)[j])
            throw ValidationError("commutative algebra: product violates grading");
  }
  return A;
}

Vec CommutativeAlgebra::product(const Vec& a, const Vec& b) const {
  Vec r(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(b[j])) continue;
      for (int k = 0; k < dim_; ++k)
        if (!is_zero(m(i, j, k))) r[k] += a[i] * b[j] * m(i, j, k);
    }
  }
  return r;
}

CommutativeAlgebra truncated_polynomial_algebra(int n) {
  if (n < 1) throw ValidationError("truncated polynomial algebra needs n >= 1");
  std::vector<std::string> labels;
  std::vector<long> degrees;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    degrees.push_back(i);
  }
  std::vector<Rational> tensor(static_cast<size_t>(n) * n * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) tensor[(static_cast<size_t>(i) * n + j) * n + i + j] = 1;
  Vec unit(n, Rational(0));
  unit[0] = 1;
  return CommutativeAlgebra::from_structure_constants(n, std::move(labels), std::move(tensor),
                                                      std::move(unit), std::move(degrees));
}

CommutativeAlgebra pinched_laurent_algebra() {
  int n = 3;  // basis 1, u, v
  std::vector<std::string> labels = {"1", "u", "v"};
  std::vector<long> degrees = {0, 1, -1};
  std::vector<Rational> tensor(27, Rational(0));
  auto set = [&](int i, int j, int k) { tensor[(static_cast<size_t>(i) * n + j) * n + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 0, 1);
  set(0, 2, 2);
  set(2, 0, 2);
  // u*u = u*v = v*v = 0
  Vec unit(n, Rational(0));
  unit[0] = 1;
  return CommutativeAlgebra::from_structure_constants(n, std::move(labels), std::move(tensor),
                                                      std::move(unit), std::move(degrees));
}

}  // namespace postlie
