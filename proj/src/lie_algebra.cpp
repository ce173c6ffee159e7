#include "postlie/lie_algebra.hpp"

#include <sstream>

namespace postlie {

namespace {

std::string triple_str(const std::vector<std::string>& labels, int i, int j, int k) {
  return "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
}

}  // namespace

LieAlgebra LieAlgebra::from_structure_constants(int dim, std::vector<std::string> labels,
                                                const std::vector<BracketEntry>& table) {
  if (dim < 0) throw ValidationError("negative dimension");
  if (labels.empty()) {
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim)
    throw ValidationError("label count does not match dimension");

  std::vector<Rational> tensor(static_cast<size_t>(dim) * dim * dim, Rational(0));
  auto at = [&](int i, int j, int k) -> Rational& {
    return tensor[(static_cast<size_t>(i) * dim + j) * dim + k];
  };
  std::vector<bool> seen(static_cast<size_t>(dim) * dim, false);
  for (const BracketEntry& e : table) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim)
      throw ValidationError("bracket table index out of range");
    if (e.i == e.j) {
      for (const auto& [k, v] : e.value)
        if (!is_zero(v))
          throw AntisymmetryViolation(e.i, e.j, "nonzero bracket [x,x] for basis index " +
                                                    std::to_string(e.i));
      continue;
    }
    size_t flat = static_cast<size_t>(std::min(e.i, e.j)) * dim + std::max(e.i, e.j);
    if (seen[flat])
      throw ValidationError("duplicate bracket table entry for pair (" + std::to_string(e.i) +
                            "," + std::to_string(e.j) + ")");
    seen[flat] = true;
    for (const auto& [k, v] : e.value) {
      if (k < 0 || k >= dim) throw ValidationError("bracket table output index out of range");
      at(e.i, e.j, k) += v;
      at(e.j, e.i, k) -= v;
    }
  }
  LieAlgebra L;
  L.dim_ = dim;
  L.labels_ = std::move(labels);
  L.tensor_ = std::move(tensor);
  L.rebuild_sparse();
  L.validate();
  return L;
}

LieAlgebra lie_from_tensor(int dim, std::vector<std::string> labels,
                           std::vector<Rational> tensor) {
  LieAlgebra L;
  L.dim_ = dim;
  L.labels_ = std::move(labels);
  L.tensor_ = std::move(tensor);
  L.rebuild_sparse();
  L.validate();
  return L;
}

void LieAlgebra::rebuild_sparse() {
  sparse_.assign(static_cast<size_t>(dim_) * dim_, {});
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      auto& list = sparse_[static_cast<size_t>(i) * dim_ + j];
      for (int k = 0; k < dim_; ++k)
        if (!is_zero(c(i, j, k))) list.emplace_back(k, c(i, j, k));
    }
}

void LieAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw AntisymmetryViolation(i, j, "antisymmetry fails at pair (" + labels_[i] +
                                                ", " + labels_[j] + ")");
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j]
        Vec res(dim_, Rational(0));
        for (const auto& [m, v] : bracket(i, j))
          for (const auto& [t, w] : bracket(m, k)) res[t] += v * w;
        for (const auto& [m, v] : bracket(j, k))
          for (const auto& [t, w] : bracket(m, i)) res[t] += v * w;
        for (const auto& [m, v] : bracket(k, i))
          for (const auto& [t, w] : bracket(m, j)) res[t] += v * w;
        if (!vec_is_zero(res)) {
          std::ostringstream os;
          os << "Jacobi identity fails on triple " << triple_str(labels_, i, j, k)
             << ", residual (";
          for (int t = 0; t < dim_; ++t) os << (t ? ", " : "") << rat_str(res[t]);
          os << ")";
          throw JacobiViolation(i, j, k, res, os.str());
        }
      }
}

Vec LieAlgebra::bracket_vec(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("bracket_vec: bad vector length");
  Vec r(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& [k, w] : bracket(i, j)) r[k] += u[i] * v[j] * w;
    }
  }
  return r;
}

Matrix LieAlgebra::ad(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, v] : bracket(i, j)) m.at(k, j) = v;
  return m;
}

Matrix LieAlgebra::ad_vec(const Vec& u) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, v] : bracket(i, j)) m.at(k, j) += u[i] * v;
  }
  return m;
}

LieAlgebra lie_from_matrices(const std::vector<std::string>& labels,
                             const std::vector<Matrix>& basis) {
  if (basis.empty()) throw ValidationError("lie_from_matrices: empty basis");
  int n = basis[0].rows();
  int dim = static_cast<int>(basis.size());
  auto flatten = [&](const Matrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v.push_back(m.at(r, c));
    return v;
  };
  Matrix coords(n * n, dim);
  for (int b = 0; b < dim; ++b) {
    Vec f = flatten(basis[b]);
    for (int r = 0; r < n * n; ++r) coords.at(r, b) = f[r];
  }
  std::vector<Rational> tensor(static_cast<size_t>(dim) * dim * dim, Rational(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto sol = coords.solve(flatten(comm));
      if (!sol)
        throw ValidationError("lie_from_matrices: commutator leaves the span at pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      for (int k = 0; k < dim; ++k)
        tensor[(static_cast<size_t>(i) * dim + j) * dim + k] = sol->particular[k];
    }
  return lie_from_tensor(dim, labels, std::move(tensor));
}

}  // namespace postlie
