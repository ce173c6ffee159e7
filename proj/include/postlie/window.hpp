#ifndef POSTLIE_WINDOW_HPP
#define POSTLIE_WINDOW_HPP

#include <optional>
#include <string>
#include <vector>

#include "postlie/errors.hpp"
#include "postlie/rational.hpp"

namespace postlie {

using SparseVec = std::vector<std::pair<int, Rational>>;

struct WindowElement {
  std::string label;
  long degree;
  int base_index;  // index in the underlying algebra; -1 for adjoined d/z
};

/// Degree-truncated slice of a Z-graded algebra with a partially defined
/// bracket. A pair is Undefined exactly when its true value leaves the
/// window; Undefined is never silently treated as zero, so every defined
/// bracket agrees with the infinite algebra.
class AlgebraWindow {
 public:
  enum class Kind { Loop, Witt, KacMoody };

  AlgebraWindow(Kind kind, long bound, bool one_sided, std::vector<WindowElement> elements);

  Kind kind() const { return kind_; }
  long bound() const { return bound_; }
  bool one_sided() const { return one_sided_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  const std::vector<WindowElement>& elements() const { return elements_; }
  long degree(int i) const { return elements_[i].degree; }

  bool defined(int i, int j) const { return table_[flat(i, j)].has_value(); }
  const SparseVec& bracket(int i, int j) const;

  /// [u, v] for coordinate vectors; nullopt when any contributing pair is
  /// Undefined.
  std::optional<Vec> bracket_vec(const Vec& u, const Vec& v) const;

  /// Set an upper-triangular entry; the builder API. Antisymmetry is
  /// completed automatically, diagonals are zero.
  void set_bracket(int i, int j, SparseVec value);
  void set_undefined(int i, int j);

  /// Antisymmetry plus Jacobi on every triple whose complete evaluation
  /// stays in the window. Called by builders after filling the table.
  void validate() const;

 private:
  size_t flat(int i, int j) const { return static_cast<size_t>(i) * elements_.size() + j; }

  Kind kind_;
  long bound_;
  bool one_sided_;
  std::vector<WindowElement> elements_;
  std::vector<std::optional<SparseVec>> table_;
};

}  // namespace postlie

#endif
