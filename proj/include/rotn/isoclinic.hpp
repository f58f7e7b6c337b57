#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rotn/rotation.hpp"

namespace rotn {

// Residual norm below which a plane counts as invariant.
inline constexpr double INVARIANCE_TOL = 1e-9;
// Angles are compared for equality modulo 2*pi within this tolerance.
inline constexpr double ANGLE_EQ_TOL = 1e-12;
// Minimum component norm that puts a sampled plane in general position
// (well away from both the rotation plane and its complement).
inline constexpr double GENERAL_POSITION_MIN = 0.1;

/// An ordered orthonormal pair spanning a 2D subspace.
struct Plane {
  Vector u;
  Vector v;
};

/// ba^T - ab^T + dc^T - cd^T for an orthonormal frame {a, b, c, d} of R^4:
/// skew-symmetric and squaring to -I.
Matrix build_J(const Vector& a, const Vector& b, const Vector& c,
               const Vector& d);

/// The equiangular double rotation cos(alpha) I + sin(alpha) J on the
/// frame; identical to rotation_4d with both angles equal to alpha.
Matrix isoclinic_rotation(const Vector& a, const Vector& b, const Vector& c,
                          const Vector& d, double alpha);

/// The plane spanned by u and Ju, orthonormalized. Since J is
/// skew-symmetric, Ju is automatically orthogonal to u.
Plane invariant_plane(const Vector& u, const Matrix& j);

/// True iff R maps span{u, v} into itself: the residuals of Ru and Rv
/// after projection onto the plane both have norm below tol.
bool is_invariant_plane(const Matrix& r, const Plane& plane,
                        double tol = INVARIANCE_TOL);

enum class InvariantKind {
  all_J_planes,  // every span{u, Ju} is invariant
  none_extra,    // only the rotation planes themselves are invariant
};

struct InvariantPlaneReport {
  InvariantKind kind;
  // The rotation is +/-I, so every 2D subspace is invariant and the
  // span{u, Ju} classification below is vacuous.
  bool degenerate = false;
  // The shared-angle generator sum_k (b_k a_k^T - a_k b_k^T); present for
  // all_J_planes.
  std::optional<Matrix> j;
  std::vector<Plane> witnesses;
  // Randomized falsification statistics (none_extra only): how many
  // general-position planes were sampled and how many of them turned out
  // invariant (expected: zero).
  int trials = 0;
  int extra_invariant = 0;
};

/// Classifies the invariant planes of the rotation described by the spec.
/// The planes must cover the whole space (2p == n, no axis). When all
/// angles agree modulo 2*pi the report lists `samples` verified witness
/// planes of the form span{u, Ju}; otherwise (4D only) the two rotation
/// planes are the sole witnesses and `samples` random general-position
/// planes are checked as falsification evidence. The seed makes the
/// sampling reproducible.
InvariantPlaneReport classify_invariant_planes(const RotationSpec& spec,
                                               int samples, uint64_t seed);

}  // namespace rotn
