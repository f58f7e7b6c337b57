#include "rotn/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotn {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix is " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", must be square");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n == 0) {
    throw std::invalid_argument("Permutation: empty");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : order_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v - 1)]) {
      throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                  " repeated");
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
  // Each inversion corresponds to one adjacent transposition.
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (order_[static_cast<size_t>(i)] > order_[static_cast<size_t>(j)])
        ++inversions;
  parity_ = inversions % 2 == 0 ? 1 : -1;
}

int permutation_sign(const Permutation& p) { return p.parity(); }

double det_permutation(const Matrix& a) {
  require_square(a, "det_permutation");
  const int n = a.rows();
  if (n > DET_PERMUTATION_MAX_DIM) {
    throw std::invalid_argument(
        "det_permutation: dimension " + std::to_string(n) + " exceeds " +
        std::to_string(DET_PERMUTATION_MAX_DIM) + "; use det_lu");
  }

  // Heap's algorithm visits all n! permutations, each reached from the
  // previous by a single transposition, so the sign just alternates.
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> c(static_cast<size_t>(n), 0);

  double sign = 1.0;
  auto term = [&]() {
    double t = 1.0;
    for (int i = 0; i < n; ++i) t *= a(i, perm[static_cast<size_t>(i)]);
    return t;
  };

  double det = term();
  int i = 1;
  while (i < n) {
    if (c[static_cast<size_t>(i)] < i) {
      const int swap_with = (i % 2 == 0) ? 0 : c[static_cast<size_t>(i)];
      std::swap(perm[static_cast<size_t>(swap_with)], perm[static_cast<size_t>(i)]);
      sign = -sign;
      det += sign * term();
      ++c[static_cast<size_t>(i)];
      i = 1;
    } else {
      c[static_cast<size_t>(i)] = 0;
      ++i;
    }
  }
  return det;
}

double det_lu(const Matrix& a) {
  require_square(a, "det_lu");
  const int n = a.rows();
  std::vector<double> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = a(i, j);

  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot_row = k;
    double pivot_mag = std::fabs(m[static_cast<size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double mag = std::fabs(m[static_cast<size_t>(i) * n + k]);
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = i;
      }
    }
    if (pivot_mag < LU_PIVOT_TOL) return 0.0;
    if (pivot_row != k) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<size_t>(k) * n + j],
                  m[static_cast<size_t>(pivot_row) * n + j]);
      det = -det;
    }
    const double pivot = m[static_cast<size_t>(k) * n + k];
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      const double factor = m[static_cast<size_t>(i) * n + k] / pivot;
      for (int j = k; j < n; ++j)
        m[static_cast<size_t>(i) * n + j] -=
            factor * m[static_cast<size_t>(k) * n + j];
    }
  }
  return det;
}

DetProductReport check_product_property(const Matrix& a, const Matrix& b) {
  require_square(a, "check_product_property");
  require_square(b, "check_product_property");
  if (a.rows() != b.rows()) {
    throw std::invalid_argument(
        "check_product_property: sizes differ (" + std::to_string(a.rows()) +
        " vs " + std::to_string(b.rows()) + ")");
  }
  const bool small = a.rows() <= 7;
  auto det = [&](const Matrix& m) {
    return small ? det_permutation(m) : det_lu(m);
  };
  DetProductReport r;
  r.lhs = det(matmul_cayley(a, b));
  r.rhs = det(a) * det(b);
  r.residual = std::fabs(r.lhs - r.rhs) / std::max(1.0, std::fabs(r.rhs));
  return r;
}

double parallelogram_area(const Vector& u, const Vector& v) {
  if (u.dim() != 2 || v.dim() != 2) {
    throw std::invalid_argument("parallelogram_area: vectors must have dim 2");
  }
  const Matrix m{{u[0], v[0]}, {u[1], v[1]}};
  return std::fabs(det_permutation(m));
}

}  // namespace rotn
