#include "postlie/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace postlie {

void SparseSystem::add(int col, const Rational& value) {
  if (col < 0 || col >= cols_) throw std::invalid_argument("SparseSystem::add: bad column");
  if (is_zero(value)) return;
  current_.emplace_back(col, value);
}

void SparseSystem::finish_row() {
  if (current_.empty()) return;
  std::sort(current_.begin(), current_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [c, v] : current_) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, v);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return is_zero(p.second); }),
               merged.end());
  current_.clear();
  if (!merged.empty()) rows_.push_back(std::move(merged));
}

namespace {

// row -= factor * pivot (pivot is monic with leading column pcol)
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (!is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(SparseRow& row) {
  Rational inv = 1 / row.front().second;
  for (auto& [c, v] : row) v *= inv;
}

}  // namespace

SparseSystem::Result SparseSystem::solve() const {
  if (!current_.empty()) throw std::logic_error("SparseSystem::solve: unfinished row");
  Result res;
  // pivot row per leading column
  std::map<int, SparseRow> pivots;
  for (const SparseRow& input : rows_) {
    SparseRow row = input;
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, row.front().second, it->second);
    }
    if (row.empty()) continue;
    make_monic(row);
    pivots.emplace(row.front().first, std::move(row));
  }
  // back substitution: reduce each pivot row against later pivots
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseRow& row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 1; k < row.size(); ++k) {
        auto pit = pivots.find(row[k].first);
        if (pit == pivots.end()) continue;
        row = axpy(row, row[k].second, pit->second);
        changed = true;
        break;
      }
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (auto& [c, row] : pivots) {
    res.pivot_cols.push_back(c);
    is_pivot[c] = true;
    res.reduced_rows.push_back(row);
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Rational(0));
    v[free] = 1;
    for (size_t p = 0; p < res.reduced_rows.size(); ++p) {
      const SparseRow& row = res.reduced_rows[p];
      auto at = std::lower_bound(row.begin(), row.end(), free,
                                 [](const auto& e, int c) { return e.first < c; });
      if (at != row.end() && at->first == free) v[res.pivot_cols[p]] = -at->second;
    }
    res.kernel.push_back(std::move(v));
  }
  return res;
}

}  // namespace postlie
