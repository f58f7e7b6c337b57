#pragma once

#include <optional>
#include <vector>

#include "rotn/linalg.hpp"

namespace rotn {

// verify_rotation accepts a matrix as a rotation when max|R^T R - I| stays
// below VERIFY_ORTHO_TOL and |det - 1| below VERIFY_DET_TOL.
inline constexpr double VERIFY_ORTHO_TOL = 1e-9;
inline constexpr double VERIFY_DET_TOL = 1e-8;

/// One oriented rotation plane: an ordered pair of spanning vectors and a
/// rotation angle in radians. A positive angle turns a toward b.
struct PlaneSpec {
  Vector a;
  Vector b;
  double angle;
};

/// A full rotation specification: dimension, mutually orthogonal planes,
/// and (for n == 2p + 1) an optional fixed-axis vector. Directions not
/// covered by any plane or axis are left fixed.
struct RotationSpec {
  int dim;
  std::vector<PlaneSpec> planes;
  std::optional<Vector> axis;
};

/// Validates a spec and returns it with every plane orthonormalized and,
/// for n == 2p + 1 with no axis given, the fixed axis completed from the
/// standard basis candidate with the largest component outside the planes.
///
/// With strict == false, plane pairs that are independent but not
/// orthonormal are repaired by Gram-Schmidt, keeping the direction of a.
/// With strict == true such input is rejected. Vectors from distinct
/// planes must be mutually orthogonal either way; that is never repaired.
RotationSpec normalize_spec(const RotationSpec& spec, bool strict = false);

/// cos(angle) I + sin(angle) J with J = [[0,-1],[1,0]], the
/// counterclockwise rotation of the plane.
Matrix rotation_2d(double angle);

/// Rotation of R^3 in the plane spanned by {a, b}, fixing the axis
/// c = a x b:
///   cos(angle)(aa^T + bb^T) + sin(angle)(ba^T - ab^T) + cc^T.
/// {a, b, c} is always right-handed; the caller never supplies c.
Matrix rotation_3d(const Vector& a, const Vector& b, double angle,
                   bool strict = false);

/// Rodrigues' formula: rotates x about the unit axis c by the angle,
///   cos(angle) x + (1 - cos(angle)) c (c^T x) + sin(angle) (c x x).
Vector rodrigues_apply(const Vector& c, double angle, const Vector& x);

/// Cross product of two vectors in R^3.
Vector cross(const Vector& a, const Vector& b);

/// ba^T - ab^T for orthonormal a, b in R^3: the skew-symmetric matrix
/// representation of the cross product (a x b) x (.).
Matrix cross_matrix(const Vector& a, const Vector& b);

/// Double rotation of R^4 turning span{a, b} by alpha and span{c, d} by
/// beta. The frame {a, b, c, d} must be orthonormal.
Matrix rotation_4d(const Vector& a, const Vector& b, const Vector& c,
                   const Vector& d, double alpha, double beta);

/// Rotation of R^n from a plane/angle specification:
///   sum_k cos(a_k)(a_k a_k^T + b_k b_k^T) + sin(a_k)(b_k a_k^T - a_k b_k^T)
/// plus cc^T for the fixed axis when present, plus the projector onto
/// whatever orthogonal complement the planes leave uncovered (those
/// directions are fixed). The result is always n x n and orthogonal.
Matrix rotation_nd(const RotationSpec& spec, bool strict = false);

/// Applies the rotation described by the spec to x without forming the
/// matrix: for each plane, y_k is the projection of x onto the plane and
/// z_k is y_k turned by pi/2 inside it, contributing
/// cos(a_k) y_k + sin(a_k) z_k; the axis and uncovered complement pass
/// their projections of x through unchanged.
Vector apply_vector_form(const RotationSpec& spec, const Vector& x,
                         bool strict = false);

struct RotationReport {
  double ortho_residual;  // max entrywise |R^T R - I|
  double det_value;       // determinant via det_lu
  bool is_rotation;
};

/// Checks that R is orthogonal with determinant one.
RotationReport verify_rotation(const Matrix& r);

}  // namespace rotn
