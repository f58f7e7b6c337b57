#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rotn/linalg.hpp"
#include "rotn/rotation.hpp"

namespace rotn {

/// Deterministic random source. The uniform mapping is implemented
/// directly on the raw 64-bit stream so identical seeds give identical
/// sequences on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  Vector vector(int dim, double lo = -1.0, double hi = 1.0);
  Matrix matrix(int rows, int cols, double lo = -1.0, double hi = 1.0);

 private:
  std::mt19937_64 gen_;
};

/// `count` orthonormal vectors in R^dim obtained by orthonormalizing
/// random draws (redrawn in the unlikely event of dependence).
std::vector<Vector> random_orthonormal_set(Rng& rng, int dim, int count);

/// A random valid spec: `planes` mutually orthogonal orthonormalized
/// planes in R^dim, angles uniform in [angle_lo, angle_hi), and, when
/// requested (dim == 2 * planes + 1 only), an explicit fixed axis.
RotationSpec random_rotation_spec(Rng& rng, int dim, int planes,
                                  bool with_axis, double angle_lo,
                                  double angle_hi);

}  // namespace rotn
