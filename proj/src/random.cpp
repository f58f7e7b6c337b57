#include "rotn/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotn {

double Rng::uniform(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("Rng::uniform: bad range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                ")");
  }
  // Top 53 bits of the raw draw, scaled to [0, 1). Bypassing
  // std::uniform_real_distribution keeps the stream identical everywhere.
  const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) {
    throw std::invalid_argument("Rng::uniform_int: bad range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "]");
  }
  const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(gen_() % range);
}

Vector Rng::vector(int dim, double lo, double hi) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
  return v;
}

Matrix Rng::matrix(int rows, int cols, double lo, double hi) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

std::vector<Vector> random_orthonormal_set(Rng& rng, int dim, int count) {
  if (count < 1 || count > dim) {
    throw std::invalid_argument("random_orthonormal_set: cannot pick " +
                                std::to_string(count) + " orthonormal vectors in dim " +
                                std::to_string(dim));
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vector> vs;
    vs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) vs.push_back(rng.vector(dim));
    try {
      return gram_schmidt(vs);
    } catch (const std::invalid_argument&) {
      // dependent draw; essentially impossible, but retry anyway
    }
  }
  throw std::logic_error("random_orthonormal_set: repeated dependent draws");
}

RotationSpec random_rotation_spec(Rng& rng, int dim, int planes,
                                  bool with_axis, double angle_lo,
                                  double angle_hi) {
  if (2 * planes > dim) {
    throw std::invalid_argument("random_rotation_spec: " +
                                std::to_string(planes) +
                                " planes do not fit in dim " +
                                std::to_string(dim));
  }
  if (with_axis && dim != 2 * planes + 1) {
    throw std::invalid_argument(
        "random_rotation_spec: an axis requires dim == 2 * planes + 1");
  }
  const int count = 2 * planes + (with_axis ? 1 : 0);
  std::vector<Vector> vs;
  if (count > 0) vs = random_orthonormal_set(rng, dim, count);

  RotationSpec spec{dim, {}, std::nullopt};
  spec.planes.reserve(static_cast<size_t>(planes));
  for (int k = 0; k < planes; ++k) {
    spec.planes.push_back(PlaneSpec{vs[static_cast<size_t>(2 * k)],
                                    vs[static_cast<size_t>(2 * k + 1)],
                                    rng.uniform(angle_lo, angle_hi)});
  }
  if (with_axis) spec.axis = vs.back();
  return spec;
}

}  // namespace rotn
