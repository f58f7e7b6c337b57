#include "rotn/isoclinic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotn/random.hpp"

namespace rotn {

namespace {

void require_dim(const Vector& v, int dim, const char* op, const char* name) {
  if (v.dim() != dim) {
    throw std::invalid_argument(std::string(op) + ": " + name + " has dim " +
                                std::to_string(v.dim()) + ", expected " +
                                std::to_string(dim));
  }
}

void require_orthonormal_frame(const std::vector<const Vector*>& vs,
                               const char* op) {
  double worst = 0.0;
  size_t wi = 0, wj = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i; j < vs.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      const double dev = std::fabs(dot(*vs[i], *vs[j]) - target);
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > ORTHO_TOL) {
    throw std::invalid_argument(
        std::string(op) + ": frame is not orthonormal; worst pair (" +
        std::to_string(wi) + ", " + std::to_string(wj) + ") deviates by " +
        std::to_string(worst));
  }
}

// Angle difference reduced to (-pi, pi].
double reduce_angle(double d) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return d - two_pi * std::round(d / two_pi);
}

}  // namespace

Matrix build_J(const Vector& a, const Vector& b, const Vector& c,
               const Vector& d) {
  const char* op = "build_J";
  require_dim(a, 4, op, "a");
  require_dim(b, 4, op, "b");
  require_dim(c, 4, op, "c");
  require_dim(d, 4, op, "d");
  require_orthonormal_frame({&a, &b, &c, &d}, op);
  return outer(b, a) - outer(a, b) + outer(d, c) - outer(c, d);
}

Matrix isoclinic_rotation(const Vector& a, const Vector& b, const Vector& c,
                          const Vector& d, double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("isoclinic_rotation: angle is not finite");
  }
  return std::cos(alpha) * identity(4) + std::sin(alpha) * build_J(a, b, c, d);
}

Plane invariant_plane(const Vector& u, const Matrix& j) {
  const char* op = "invariant_plane";
  if (j.rows() != j.cols()) {
    throw std::invalid_argument(std::string(op) + ": J is " +
                                std::to_string(j.rows()) + "x" +
                                std::to_string(j.cols()) + ", must be square");
  }
  require_dim(u, j.rows(), op, "u");
  const double len = norm(u);
  if (len < 1e-12) {
    throw std::invalid_argument(std::string(op) + ": u has norm " +
                                std::to_string(len));
  }
  const double square_defect =
      max_abs(matmul_rowcol(j, j) + identity(j.rows()));
  if (square_defect > INVARIANCE_TOL) {
    throw std::invalid_argument(std::string(op) +
                                ": J^2 deviates from -I by " +
                                std::to_string(square_defect));
  }
  const Vector un = (1.0 / len) * u;
  // Ju is orthogonal to u already (u^T J u = 0 for skew J); the projection
  // only strips rounding noise.
  Vector v = matvec(j, un);
  v = v - dot(un, v) * un;
  return Plane{un, (1.0 / norm(v)) * v};
}

bool is_invariant_plane(const Matrix& r, const Plane& plane, double tol) {
  const char* op = "is_invariant_plane";
  if (r.rows() != r.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix is " +
                                std::to_string(r.rows()) + "x" +
                                std::to_string(r.cols()) + ", must be square");
  }
  require_dim(plane.u, r.rows(), op, "plane.u");
  require_dim(plane.v, r.rows(), op, "plane.v");
  require_orthonormal_frame({&plane.u, &plane.v}, op);
  double worst = 0.0;
  for (const Vector* w : {&plane.u, &plane.v}) {
    const Vector rw = matvec(r, *w);
    const Vector residual =
        rw - dot(plane.u, rw) * plane.u - dot(plane.v, rw) * plane.v;
    worst = std::max(worst, norm(residual));
  }
  return worst < tol;
}

InvariantPlaneReport classify_invariant_planes(const RotationSpec& spec,
                                               int samples, uint64_t seed) {
  const char* op = "classify_invariant_planes";
  if (samples < 0) {
    throw std::invalid_argument(std::string(op) + ": samples must be >= 0");
  }
  const RotationSpec ns = normalize_spec(spec);
  const int n = ns.dim;
  const int p = static_cast<int>(ns.planes.size());
  if (2 * p != n) {
    throw std::invalid_argument(
        std::string(op) + ": the planes must cover the whole space (got " +
        std::to_string(p) + " planes in dimension " + std::to_string(n) +
        ", leaving fixed directions); the classification does not apply");
  }

  const double base = ns.planes.front().angle;
  bool equiangular = true;
  for (const PlaneSpec& pl : ns.planes) {
    if (std::fabs(reduce_angle(pl.angle - base)) > ANGLE_EQ_TOL) {
      equiangular = false;
      break;
    }
  }

  const Matrix r = rotation_nd(ns);
  Rng rng(seed);
  InvariantPlaneReport report;

  if (equiangular) {
    Matrix j(n, n);
    for (const PlaneSpec& pl : ns.planes) {
      j = j + (outer(pl.b, pl.a) - outer(pl.a, pl.b));
    }
    report.kind = InvariantKind::all_J_planes;
    const double reduced = reduce_angle(base);
    report.degenerate = std::fabs(reduced) <= ANGLE_EQ_TOL ||
                        std::fabs(std::fabs(reduced) - std::numbers::pi) <=
                            ANGLE_EQ_TOL;
    for (int s = 0; s < samples; ++s) {
      Vector u = rng.vector(n);
      while (norm(u) < 1e-6) u = rng.vector(n);
      Plane witness = invariant_plane(u, j);
      if (!is_invariant_plane(r, witness)) {
        throw std::logic_error(std::string(op) +
                               ": a span{u, Ju} plane failed the invariance "
                               "check; the construction is inconsistent");
      }
      report.witnesses.push_back(std::move(witness));
    }
    report.j = std::move(j);
    return report;
  }

  if (n != 4) {
    throw std::invalid_argument(
        std::string(op) + ": unequal angles are only classified in dimension "
        "4; got dimension " + std::to_string(n));
  }

  report.kind = InvariantKind::none_extra;
  const PlaneSpec& p0 = ns.planes[0];
  const PlaneSpec& p1 = ns.planes[1];
  for (const PlaneSpec* pl : {&p0, &p1}) {
    Plane witness{pl->a, pl->b};
    if (!is_invariant_plane(r, witness)) {
      throw std::logic_error(std::string(op) +
                             ": a rotation plane failed its own invariance "
                             "check; the construction is inconsistent");
    }
    report.witnesses.push_back(std::move(witness));
  }

  // Randomized falsification: no general-position plane (one staying well
  // clear of both rotation planes) should come out invariant.
  auto component_norms = [&](const Vector& w) {
    const Vector in_p0 = dot(p0.a, w) * p0.a + dot(p0.b, w) * p0.b;
    const Vector in_p1 = dot(p1.a, w) * p1.a + dot(p1.b, w) * p1.b;
    return std::pair<double, double>{norm(in_p0), norm(in_p1)};
  };
  report.trials = samples;
  for (int t = 0; t < samples; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 10000) {
        throw std::logic_error(std::string(op) +
                               ": could not sample a general-position plane");
      }
      const Vector u = rng.vector(4);
      const Vector v = rng.vector(4);
      std::vector<Vector> q;
      try {
        q = gram_schmidt({u, v});
      } catch (const std::invalid_argument&) {
        continue;  // dependent draw; try again
      }
      const auto [u0, u1] = component_norms(q[0]);
      const auto [v0, v1] = component_norms(q[1]);
      if (std::min({u0, u1, v0, v1}) <= GENERAL_POSITION_MIN) continue;
      if (is_invariant_plane(r, Plane{q[0], q[1]})) ++report.extra_invariant;
      break;
    }
  }
  return report;
}

}  // namespace rotn
