#include "postlie/window.hpp"

#include <algorithm>

namespace postlie {

namespace {

SparseVec negated(const SparseVec& v) {
  SparseVec r = v;
  for (auto& [k, c] : r) c = -c;
  return r;
}

}  // namespace

AlgebraWindow::AlgebraWindow(Kind kind, long bound, bool one_sided,
                             std::vector<WindowElement> elements)
    : kind_(kind), bound_(bound), one_sided_(one_sided), elements_(std::move(elements)) {
  table_.assign(elements_.size() * elements_.size(), std::nullopt);
  for (size_t i = 0; i < elements_.size(); ++i) table_[flat(i, i)] = SparseVec{};
}

const SparseVec& AlgebraWindow::bracket(int i, int j) const {
  const auto& e = table_[flat(i, j)];
  if (!e) throw std::logic_error("bracket undefined at this pair");
  return *e;
}

void AlgebraWindow::set_bracket(int i, int j, SparseVec value) {
  std::sort(value.begin(), value.end());
  table_[flat(i, j)] = value;
  table_[flat(j, i)] = negated(value);
}

void AlgebraWindow::set_undefined(int i, int j) {
  table_[flat(i, j)] = std::nullopt;
  table_[flat(j, i)] = std::nullopt;
}

std::optional<Vec> AlgebraWindow::bracket_vec(const Vec& u, const Vec& v) const {
  int n = dim();
  Vec r(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(v[j])) continue;
      if (!defined(i, j)) return std::nullopt;
      for (const auto& [k, c] : bracket(i, j)) r[k] += u[i] * v[j] * c;
    }
  }
  return r;
}

void AlgebraWindow::validate() const {
  int n = dim();
  auto ad_apply = [&](int x, const SparseVec& v) -> std::optional<SparseVec> {
    SparseVec out;
    for (const auto& [k, c] : v) {
      if (!defined(x, k)) return std::nullopt;
      for (const auto& [t, w] : bracket(x, k)) out.emplace_back(t, c * w);
    }
    return out;
  };
  auto accumulate = [&](Vec& acc, const SparseVec& v) {
    for (const auto& [k, c] : v) acc[k] += c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (!defined(i, j)) continue;
      // antisymmetry of the stored table
      const SparseVec& fwd = bracket(i, j);
      const SparseVec& bwd = bracket(j, i);
      Vec check(n, Rational(0));
      accumulate(check, fwd);
      accumulate(check, bwd);
      if (!vec_is_zero(check))
        throw ValidationError("window bracket not antisymmetric at (" +
                              elements_[i].label + ", " + elements_[j].label + ")");
      // defined brackets respect the degree assignment
      for (const auto& [k, c] : fwd)
        if (elements_[k].degree != elements_[i].degree + elements_[j].degree)
          throw ValidationError("window bracket leaves its degree component at (" +
                                elements_[i].label + ", " + elements_[j].label + ")");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (!defined(j, k) || !defined(i, j) || !defined(k, i)) continue;
        auto t1 = ad_apply(i, bracket(j, k));
        auto t2 = ad_apply(j, bracket(k, i));
        auto t3 = ad_apply(k, bracket(i, j));
        if (!t1 || !t2 || !t3) continue;  // evaluation leaves the window
        Vec sum(n, Rational(0));
        accumulate(sum, *t1);
        accumulate(sum, *t2);
        accumulate(sum, *t3);
        if (!vec_is_zero(sum))
          throw ValidationError("window Jacobi fails on (" + elements_[i].label + ", " +
                                elements_[j].label + ", " + elements_[k].label + ")");
      }
}

}  // namespace postlie
