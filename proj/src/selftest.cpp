#include "rotn/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "rotn/determinant.hpp"
#include "rotn/isoclinic.hpp"
#include "rotn/random.hpp"
#include "rotn/rotation.hpp"

namespace rotn {

namespace {

struct Check {
  const char* name;
  std::function<double()> worst_residual;
  double tol;
};

}  // namespace

bool run_selftest(uint64_t seed, bool inject_failure, std::ostream& out) {
  Rng rng(seed);

  const std::vector<Check> checks = {
      {"matrix product routes agree", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int m = rng.uniform_int(2, 6);
           const int k = rng.uniform_int(2, 6);
           const int n = rng.uniform_int(2, 6);
           const Matrix a = rng.matrix(m, k);
           const Matrix b = rng.matrix(k, n);
           Matrix ref = matmul_rowcol(a, b);
           // The negative control corrupts one entry; the harness must
           // notice or it proves nothing.
           if (inject_failure && rep == 0) ref(0, 0) += 1e-6;
           worst = std::max(worst, max_abs_diff(matmul_cayley(a, b), ref));
           worst = std::max(worst, max_abs_diff(matmul_colrow(a, b), ref));
         }
         return worst;
       }, 1e-12},
      {"determinant product property holds", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int n = rng.uniform_int(2, 6);
           worst = std::max(
               worst,
               check_product_property(rng.matrix(n, n), rng.matrix(n, n))
                   .residual);
         }
         return worst;
       }, 1e-9},
      {"permutation and LU determinants agree", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int n = rng.uniform_int(2, 7);
           const Matrix a = rng.matrix(n, n);
           const double dp = det_permutation(a);
           const double dl = det_lu(a);
           worst = std::max(worst, std::fabs(dp - dl) /
                                       std::max(1.0, std::fabs(dl)));
         }
         return worst;
       }, 1e-10},
      {"constructed rotations verify", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int n = rng.uniform_int(2, 9);
           const int p = rng.uniform_int(1, n / 2);
           const bool axis = n == 2 * p + 1 && rep % 2 == 0;
           const RotationSpec spec =
               random_rotation_spec(rng, n, p, axis, 0.0, 6.28);
           const RotationReport r = verify_rotation(rotation_nd(spec));
           worst = std::max(worst, r.ortho_residual);
           worst = std::max(worst, std::fabs(r.det_value - 1.0));
         }
         return worst;
       }, 1e-9},
      {"vector form matches the matrix", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int n = rng.uniform_int(2, 9);
           const int p = rng.uniform_int(1, n / 2);
           const RotationSpec spec =
               random_rotation_spec(rng, n, p, false, 0.0, 6.28);
           const Vector x = rng.vector(n);
           worst = std::max(worst,
                            max_abs_diff(apply_vector_form(spec, x),
                                         matvec(rotation_nd(spec), x)));
         }
         return worst;
       }, 1e-12},
      {"rotation squares to plane projection", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const int n = rng.uniform_int(3, 8);
           const auto q = random_orthonormal_set(rng, n, 2);
           const Matrix k = outer(q[1], q[0]) - outer(q[0], q[1]);
           const Matrix p = outer(q[0], q[0]) + outer(q[1], q[1]);
           worst = std::max(worst, max_abs(matmul_rowcol(k, k) + p));
         }
         return worst;
       }, 1e-12},
      {"Rodrigues agrees with the matrix form", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 20; ++rep) {
           const auto q = random_orthonormal_set(rng, 3, 2);
           const Vector axis = cross(q[0], q[1]);
           const double angle = rng.uniform(0.0, 6.28);
           const Matrix r = rotation_3d(q[0], q[1], angle);
           const Vector x = rng.vector(3);
           worst = std::max(worst, max_abs_diff(rodrigues_apply(axis, angle, x),
                                                matvec(r, x)));
         }
         return worst;
       }, 1e-12},
      {"isoclinic planes are invariant", [&] {
         double worst = 0.0;
         for (int rep = 0; rep < 5; ++rep) {
           const auto q = random_orthonormal_set(rng, 4, 4);
           const Matrix j = build_J(q[0], q[1], q[2], q[3]);
           worst = std::max(worst, max_abs(matmul_rowcol(j, j) + identity(4)));
           const double angle = rng.uniform(0.1, 3.0);
           const Matrix r = isoclinic_rotation(q[0], q[1], q[2], q[3], angle);
           for (int s = 0; s < 20; ++s) {
             const Plane plane = invariant_plane(rng.vector(4), j);
             if (!is_invariant_plane(r, plane)) worst = std::max(worst, 1.0);
           }
         }
         return worst;
       }, 1e-12},
  };

  int passed = 0;
  for (const Check& check : checks) {
    const double worst = check.worst_residual();
    const bool ok = worst <= check.tol;
    out << (ok ? "ok" : "FAIL") << " - " << check.name << " (worst residual "
        << worst << ", tolerance " << check.tol << ")\n";
    if (ok) ++passed;
  }
  out << "selftest: " << passed << "/" << checks.size() << " checks passed\n";
  return passed == static_cast<int>(checks.size());
}

}  // namespace rotn
