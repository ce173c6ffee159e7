#ifndef POSTLIE_BILINEAR_HPP
#define POSTLIE_BILINEAR_HPP

#include <map>
#include <optional>
#include <vector>

#include "postlie/comm_algebra.hpp"
#include "postlie/grading.hpp"
#include "postlie/lie_algebra.hpp"
#include "postlie/window.hpp"

namespace postlie {

/// Bilinear map phi(b_i, b_j) = sum_k lambda_{ij}^k b_k as a rank-3
/// coefficient tensor.
class BilinearMap {
 public:
  BilinearMap() : dim_(0) {}
  explicit BilinearMap(int dim)
      : dim_(dim), t_(static_cast<size_t>(dim) * dim * dim, Rational(0)) {}
  static BilinearMap from_flat(int dim, const Vec& flat);

  int dim() const { return dim_; }
  Rational& at(int i, int j, int k) { return t_[flat_index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return t_[flat_index(i, j, k)]; }

  Vec apply(const Vec& u, const Vec& v) const;
  bool is_symmetric() const;
  bool is_zero() const;
  Vec flatten() const { return t_; }

  bool operator==(const BilinearMap& o) const = default;

  size_t flat_index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }

 private:
  int dim_;
  std::vector<Rational> t_;
};

enum class SpaceKind { D, Dcomm, C, Custom };

/// Linear space of bilinear maps with a canonical rref basis of the
/// flattened tensors; equality of computed spaces is basis equality.
struct BilinearMapSpace {
  int ambient = 0;
  SpaceKind kind = SpaceKind::Custom;
  std::vector<BilinearMap> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const BilinearMap& m) const;
  bool same_space(const BilinearMapSpace& other) const;

  static BilinearMapSpace from_maps(int ambient, SpaceKind kind,
                                    const std::vector<BilinearMap>& maps);
};

/// {phi : phi(x, .) is a derivation}, one sparse kernel computation with
/// dim^3 unknowns.
BilinearMapSpace d_space(const LieAlgebra& L);

/// Symmetric part: derivation rows plus symmetry rows in a single pass.
BilinearMapSpace dcomm_space(const LieAlgebra& L);

/// {phi : phi(x, .) lies in the centroid}.
BilinearMapSpace c_space(const LieAlgebra& L);

/// The associative analog of d_space, same assembler over the commutative
/// product.
BilinearMapSpace d_space_assoc(const CommutativeAlgebra& A);

/// phi restricted to a homogeneous component shift; nullopt means Mixed,
/// the zero map has degree 0 by convention.
std::optional<long> degree_of(const BilinearMap& m, const Grading& grading);

struct HomogeneousDecomposition {
  std::map<long, std::vector<BilinearMap>> components;
  int total_dim() const;
};

/// Re-bases the space into homogeneous elements per degree. The direct-sum
/// property is checked; failure aborts loudly since it indicates a bug for
/// the space kinds this is applied to.
HomogeneousDecomposition decompose_bilinear_space(const BilinearMapSpace& space,
                                                  const Grading& grading);

/// Windowed symmetric derivation-pair space: unknowns are homogeneous maps
/// of each degree |l| <= B, constrained by every window instance whose
/// terms all stay inside the window. Throws WindowTooSmall when some degree
/// with unknowns receives no exact instance at all.
struct WindowedDcomm {
  int window_dim = 0;
  long degree_bound = 0;
  std::vector<BilinearMap> basis;     // symmetric, homogeneous
  std::vector<long> basis_degrees;    // parallel to basis
  std::map<long, int> per_degree_dims;

  int dim() const { return static_cast<int>(basis.size()); }
};

WindowedDcomm windowed_dcomm_space(const AlgebraWindow& w, long degree_bound);

}  // namespace postlie

#endif
