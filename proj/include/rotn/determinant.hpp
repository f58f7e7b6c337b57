#pragma once

#include <vector>

#include "rotn/linalg.hpp"

namespace rotn {

// det_permutation enumerates all n! permutations; cost explodes past this.
inline constexpr int DET_PERMUTATION_MAX_DIM = 10;
// An LU pivot below this magnitude marks the matrix as singular.
inline constexpr double LU_PIVOT_TOL = 1e-14;

/// An ordering of 1..n together with its parity.
class Permutation {
 public:
  /// Validates that `order` is a bijection on {1..n}; parity is computed
  /// by inversion counting.
  explicit Permutation(std::vector<int> order);

  const std::vector<int>& order() const { return order_; }
  /// +1 for even permutations, -1 for odd.
  int parity() const { return parity_; }
  int size() const { return static_cast<int>(order_.size()); }

 private:
  std::vector<int> order_;
  int parity_;
};

/// +1 for even permutations, -1 for odd.
int permutation_sign(const Permutation& p);

/// Determinant as the signed sum over all n! permutations of products of
/// one entry per row. Permutations are enumerated with Heap's algorithm so
/// the sign flips once per generated transposition. Requires n <= 10.
double det_permutation(const Matrix& a);

/// Determinant via Gaussian elimination with partial pivoting. Returns 0
/// when a pivot magnitude falls below LU_PIVOT_TOL.
double det_lu(const Matrix& a);

struct DetProductReport {
  double lhs;       // det(A*B)
  double rhs;       // det(A)*det(B)
  double residual;  // |lhs - rhs| / max(1, |rhs|)
};

/// Computes det(A*B) and det(A)*det(B) and reports both with their
/// residual. Uses det_permutation for n <= 7 and det_lu above that.
DetProductReport check_product_property(const Matrix& a, const Matrix& b);

/// |det([u v])| for u, v in R^2: the area of the parallelogram they span.
double parallelogram_area(const Vector& u, const Vector& v);

}  // namespace rotn
