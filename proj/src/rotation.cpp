#include "rotn/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotn/determinant.hpp"

namespace rotn {

namespace {

void require_dim(const Vector& v, int dim, const char* op, const char* name) {
  if (v.dim() != dim) {
    throw std::invalid_argument(std::string(op) + ": " + name + " has dim " +
                                std::to_string(v.dim()) + ", expected " +
                                std::to_string(dim));
  }
}

void require_finite_angle(double angle, const char* op) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument(std::string(op) + ": angle is not finite");
  }
}

// Worst orthonormality defect of a set of supposedly orthonormal vectors:
// the largest |<v_i, v_j> - delta_ij|, plus which pair achieved it.
struct FrameDefect {
  double value = 0.0;
  int i = 0;
  int j = 0;
};

FrameDefect frame_defect(const std::vector<const Vector*>& vs) {
  FrameDefect d;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i; j < vs.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      const double dev = std::fabs(dot(*vs[i], *vs[j]) - target);
      if (dev > d.value) {
        d.value = dev;
        d.i = static_cast<int>(i);
        d.j = static_cast<int>(j);
      }
    }
  }
  return d;
}

void require_orthonormal_frame(const std::vector<const Vector*>& vs,
                               const char* op) {
  const FrameDefect d = frame_defect(vs);
  if (d.value > ORTHO_TOL) {
    throw std::invalid_argument(
        std::string(op) + ": frame is not orthonormal; worst pair (" +
        std::to_string(d.i) + ", " + std::to_string(d.j) + ") deviates by " +
        std::to_string(d.value));
  }
}

// Orthonormalizes {a, b}, or verifies them in strict mode. Either way the
// returned pair spans the same plane with a's direction preserved.
std::pair<Vector, Vector> plane_basis(const Vector& a, const Vector& b,
                                      bool strict, const char* op,
                                      int plane_index) {
  if (strict) {
    const FrameDefect d = frame_defect({&a, &b});
    if (d.value > ORTHO_TOL) {
      throw std::invalid_argument(
          std::string(op) + ": plane " + std::to_string(plane_index) +
          " is not orthonormal (deviation " + std::to_string(d.value) +
          ") and strict mode forbids repair");
    }
  }
  std::vector<Vector> q;
  try {
    q = gram_schmidt({a, b});
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(op) + ": plane " +
                                std::to_string(plane_index) + ": " + e.what());
  }
  return {q[0], q[1]};
}

}  // namespace

RotationSpec normalize_spec(const RotationSpec& spec, bool strict) {
  const char* op = "normalize_spec";
  const int n = spec.dim;
  const int p = static_cast<int>(spec.planes.size());
  if (n < 1) {
    throw std::invalid_argument(std::string(op) + ": dim must be positive, got " +
                                std::to_string(n));
  }
  if (2 * p > n) {
    throw std::invalid_argument(std::string(op) + ": " + std::to_string(p) +
                                " planes need dimension >= " +
                                std::to_string(2 * p) + ", got " +
                                std::to_string(n));
  }
  if (spec.axis && n != 2 * p + 1) {
    throw std::invalid_argument(
        std::string(op) + ": an axis is only meaningful when dim == 2p + 1 (" +
        std::to_string(2 * p + 1) + "), got dim " + std::to_string(n));
  }

  RotationSpec out{n, {}, std::nullopt};
  out.planes.reserve(spec.planes.size());
  for (int k = 0; k < p; ++k) {
    const PlaneSpec& pl = spec.planes[static_cast<size_t>(k)];
    require_dim(pl.a, n, op, ("plane " + std::to_string(k) + " vector a").c_str());
    require_dim(pl.b, n, op, ("plane " + std::to_string(k) + " vector b").c_str());
    require_finite_angle(pl.angle, op);
    auto [qa, qb] = plane_basis(pl.a, pl.b, strict, op, k);
    out.planes.push_back(PlaneSpec{qa, qb, pl.angle});
  }

  // Vectors from distinct planes must already be orthogonal; that is a
  // property of the spec itself, never repaired.
  double worst = 0.0;
  int worst_k = 0, worst_l = 0;
  for (int k = 0; k < p; ++k) {
    for (int l = k + 1; l < p; ++l) {
      for (const Vector* u : {&out.planes[static_cast<size_t>(k)].a,
                              &out.planes[static_cast<size_t>(k)].b}) {
        for (const Vector* v : {&out.planes[static_cast<size_t>(l)].a,
                                &out.planes[static_cast<size_t>(l)].b}) {
          const double dev = std::fabs(dot(*u, *v));
          if (dev > worst) {
            worst = dev;
            worst_k = k;
            worst_l = l;
          }
        }
      }
    }
  }
  if (worst > ORTHO_TOL) {
    throw std::invalid_argument(
        std::string(op) + ": planes " + std::to_string(worst_k) + " and " +
        std::to_string(worst_l) + " are not mutually orthogonal (|dot| = " +
        std::to_string(worst) + ")");
  }

  if (spec.axis) {
    const Vector& c = *spec.axis;
    require_dim(c, n, op, "axis");
    const double len = norm(c);
    if (len <= GS_DEPENDENCE_TOL) {
      throw std::invalid_argument(std::string(op) + ": axis has norm " +
                                  std::to_string(len));
    }
    if (strict && std::fabs(len - 1.0) > ORTHO_TOL) {
      throw std::invalid_argument(
          std::string(op) + ": axis norm deviates from 1 by " +
          std::to_string(std::fabs(len - 1.0)) +
          " and strict mode forbids repair");
    }
    const Vector unit_axis = (1.0 / len) * c;
    for (int k = 0; k < p; ++k) {
      const PlaneSpec& pl = out.planes[static_cast<size_t>(k)];
      const double dev =
          std::max(std::fabs(dot(unit_axis, pl.a)), std::fabs(dot(unit_axis, pl.b)));
      if (dev > ORTHO_TOL) {
        throw std::invalid_argument(
            std::string(op) + ": axis is not orthogonal to plane " +
            std::to_string(k) + " (|dot| = " + std::to_string(dev) + ")");
      }
    }
    out.axis = unit_axis;
  } else if (n == 2 * p + 1) {
    // The fixed line is the kernel of the span of the plane vectors; find
    // it by orthogonalizing the standard basis candidate that keeps the
    // largest residual.
    Vector best(n);
    double best_residual = -1.0;
    for (int i = 0; i < n; ++i) {
      Vector v = Vector::unit(n, i);
      for (const PlaneSpec& pl : out.planes) {
        v = v - dot(pl.a, v) * pl.a;
        v = v - dot(pl.b, v) * pl.b;
      }
      const double r = norm(v);
      if (r > best_residual) {
        best_residual = r;
        best = v;
      }
    }
    // One clean-up sweep, then normalize. With p orthonormal planes the
    // best candidate's residual is at least 1/sqrt(n), far from zero.
    for (const PlaneSpec& pl : out.planes) {
      best = best - dot(pl.a, best) * pl.a;
      best = best - dot(pl.b, best) * pl.b;
    }
    out.axis = (1.0 / norm(best)) * best;
  }

  return out;
}

Matrix rotation_2d(double angle) {
  require_finite_angle(angle, "rotation_2d");
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Matrix{{c, -s}, {s, c}};
}

Matrix rotation_3d(const Vector& a, const Vector& b, double angle, bool strict) {
  const char* op = "rotation_3d";
  require_dim(a, 3, op, "a");
  require_dim(b, 3, op, "b");
  require_finite_angle(angle, op);
  auto [qa, qb] = plane_basis(a, b, strict, op, 0);
  const Vector qc = cross(qa, qb);  // right-handed, never user-supplied
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  return ca * (outer(qa, qa) + outer(qb, qb)) +
         sa * (outer(qb, qa) - outer(qa, qb)) + outer(qc, qc);
}

Vector rodrigues_apply(const Vector& c, double angle, const Vector& x) {
  const char* op = "rodrigues_apply";
  require_dim(c, 3, op, "c");
  require_dim(x, 3, op, "x");
  require_finite_angle(angle, op);
  const double len = norm(c);
  if (std::fabs(len - 1.0) > ORTHO_TOL) {
    throw std::invalid_argument(
        std::string(op) + ": axis norm deviates from 1 by " +
        std::to_string(std::fabs(len - 1.0)));
  }
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  return ca * x + ((1.0 - ca) * dot(c, x)) * c + sa * cross(c, x);
}

Vector cross(const Vector& a, const Vector& b) {
  require_dim(a, 3, "cross", "a");
  require_dim(b, 3, "cross", "b");
  return Vector{a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

Matrix cross_matrix(const Vector& a, const Vector& b) {
  require_dim(a, 3, "cross_matrix", "a");
  require_dim(b, 3, "cross_matrix", "b");
  return outer(b, a) - outer(a, b);
}

Matrix rotation_4d(const Vector& a, const Vector& b, const Vector& c,
                   const Vector& d, double alpha, double beta) {
  const char* op = "rotation_4d";
  require_dim(a, 4, op, "a");
  require_dim(b, 4, op, "b");
  require_dim(c, 4, op, "c");
  require_dim(d, 4, op, "d");
  require_finite_angle(alpha, op);
  require_finite_angle(beta, op);
  require_orthonormal_frame({&a, &b, &c, &d}, op);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  return ca * (outer(a, a) + outer(b, b)) + sa * (outer(b, a) - outer(a, b)) +
         cb * (outer(c, c) + outer(d, d)) + sb * (outer(d, c) - outer(c, d));
}

Matrix rotation_nd(const RotationSpec& spec, bool strict) {
  const RotationSpec ns = normalize_spec(spec, strict);
  const int n = ns.dim;
  Matrix r(n, n);
  Matrix complement = identity(n);
  for (const PlaneSpec& pl : ns.planes) {
    const Matrix projector = outer(pl.a, pl.a) + outer(pl.b, pl.b);
    const Matrix quarter_turn = outer(pl.b, pl.a) - outer(pl.a, pl.b);
    r = r + std::cos(pl.angle) * projector + std::sin(pl.angle) * quarter_turn;
    complement = complement - projector;
  }
  if (ns.axis) {
    const Matrix axis_projector = outer(*ns.axis, *ns.axis);
    r = r + axis_projector;
    complement = complement - axis_projector;
  }
  // Directions no plane or axis covers stay fixed.
  return r + complement;
}

Vector apply_vector_form(const RotationSpec& spec, const Vector& x,
                         bool strict) {
  const RotationSpec ns = normalize_spec(spec, strict);
  require_dim(x, ns.dim, "apply_vector_form", "x");
  Vector result(ns.dim);
  Vector remainder = x;
  for (const PlaneSpec& pl : ns.planes) {
    const double ca = dot(pl.a, x);
    const double cb = dot(pl.b, x);
    const Vector y = ca * pl.a + cb * pl.b;  // projection of x onto the plane
    const Vector z = ca * pl.b - cb * pl.a;  // y turned by pi/2 in the plane
    result = result + std::cos(pl.angle) * y + std::sin(pl.angle) * z;
    remainder = remainder - y;
  }
  if (ns.axis) {
    const Vector y = dot(*ns.axis, x) * (*ns.axis);
    result = result + y;
    remainder = remainder - y;
  }
  // Whatever is left of x lies in the uncovered complement and stays put.
  return result + remainder;
}

RotationReport verify_rotation(const Matrix& r) {
  if (r.rows() != r.cols()) {
    throw std::invalid_argument("verify_rotation: matrix is " +
                                std::to_string(r.rows()) + "x" +
                                std::to_string(r.cols()) + ", must be square");
  }
  RotationReport report;
  report.ortho_residual =
      max_abs_diff(matmul_rowcol(transpose(r), r), identity(r.rows()));
  report.det_value = det_lu(r);
  report.is_rotation = report.ortho_residual < VERIFY_ORTHO_TOL &&
                       std::fabs(report.det_value - 1.0) < VERIFY_DET_TOL;
  return report;
}

}  // namespace rotn
