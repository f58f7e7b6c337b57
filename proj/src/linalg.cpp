#include "rotn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rotn {

namespace {

void require_finite(const std::vector<double>& entries, const char* what) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i])) {
      throw std::invalid_argument(std::string(what) + ": entry " +
                                  std::to_string(i) + " is not finite");
    }
  }
}

[[noreturn]] void throw_dim_mismatch(const char* op, const std::string& lhs,
                                     const std::string& rhs) {
  throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                              lhs + " vs " + rhs + ")");
}

std::string shape_str(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

Vector::Vector(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("Vector: dim must be positive, got " +
                                std::to_string(dim));
  }
  entries_.assign(static_cast<size_t>(dim), 0.0);
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("Vector: dim must be positive, got 0");
  }
  require_finite(entries_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries)
    : Vector(std::vector<double>(entries)) {}

Vector Vector::unit(int dim, int index) {
  Vector e(dim);
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("Vector::unit: index " + std::to_string(index) +
                                " out of range for dim " + std::to_string(dim));
  }
  e[index] = 1.0;
  return e;
}

Vector operator+(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw_dim_mismatch("vector addition", std::to_string(u.dim()),
                       std::to_string(v.dim()));
  }
  Vector w(u.dim());
  for (int i = 0; i < u.dim(); ++i) w[i] = u[i] + v[i];
  return w;
}

Vector operator-(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw_dim_mismatch("vector subtraction", std::to_string(u.dim()),
                       std::to_string(v.dim()));
  }
  Vector w(u.dim());
  for (int i = 0; i < u.dim(); ++i) w[i] = u[i] - v[i];
  return w;
}

Vector operator*(double s, const Vector& v) {
  Vector w(v.dim());
  for (int i = 0; i < v.dim(); ++i) w[i] = s * v[i];
  return w;
}

Vector operator*(const Vector& v, double s) { return s * v; }

double dot(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw_dim_mismatch("dot", std::to_string(u.dim()), std::to_string(v.dim()));
  }
  double s = 0.0;
  for (int i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

double norm(const Vector& u) { return std::sqrt(dot(u, u)); }

double max_abs_diff(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw_dim_mismatch("max_abs_diff", std::to_string(u.dim()),
                       std::to_string(v.dim()));
  }
  double m = 0.0;
  for (int i = 0; i < u.dim(); ++i) m = std::max(m, std::fabs(u[i] - v[i]));
  return m;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("Matrix: dimensions must be positive, got " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : Matrix(static_cast<int>(rows.size()),
             rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("Matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(cols_));
    }
    int j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
  require_finite(data_, "Matrix");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(static_cast<int>(rows.size()),
           rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) {
      throw std::invalid_argument("Matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) +
                                  " entries, expected " +
                                  std::to_string(m.cols_));
    }
    for (int j = 0; j < m.cols_; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  require_finite(m.data_, "Matrix");
  return m;
}

Vector Matrix::column(int j) const {
  if (j < 0 || j >= cols_) {
    throw std::invalid_argument("Matrix::column: index " + std::to_string(j) +
                                " out of range for " + std::to_string(cols_) +
                                " columns");
  }
  Vector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dim_mismatch("matrix addition", shape_str(a), shape_str(b));
  }
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dim_mismatch("matrix subtraction", shape_str(a), shape_str(b));
  }
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Matrix identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dim_mismatch("max_abs_diff", shape_str(a), shape_str(b));
  }
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
  return m;
}

Vector matvec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.dim()) {
    throw_dim_mismatch("matvec", shape_str(a),
                       "vector of dim " + std::to_string(x.dim()));
  }
  // Accumulate the columns scaled by the entries of x.
  Vector y(a.rows());
  for (int j = 0; j < a.cols(); ++j) {
    const double xj = x[j];
    for (int i = 0; i < a.rows(); ++i) y[i] += xj * a(i, j);
  }
  return y;
}

Matrix matmul_cayley(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw_dim_mismatch("matmul_cayley", shape_str(a), shape_str(b));
  }
  Matrix c(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    const Vector cj = matvec(a, b.column(j));
    for (int i = 0; i < a.rows(); ++i) c(i, j) = cj[i];
  }
  return c;
}

Matrix matmul_colrow(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw_dim_mismatch("matmul_colrow", shape_str(a), shape_str(b));
  }
  Matrix c(a.rows(), b.cols());
  for (int k = 0; k < a.cols(); ++k) {
    for (int i = 0; i < a.rows(); ++i) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix matmul_rowcol(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw_dim_mismatch("matmul_rowcol", shape_str(a), shape_str(b));
  }
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix m(u.dim(), v.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs) {
  if (vs.empty()) {
    throw std::invalid_argument("gram_schmidt: input is empty");
  }
  const int dim = vs.front().dim();
  for (size_t i = 1; i < vs.size(); ++i) {
    if (vs[i].dim() != dim) {
      throw std::invalid_argument(
          "gram_schmidt: vector at index " + std::to_string(i) + " has dim " +
          std::to_string(vs[i].dim()) + ", expected " + std::to_string(dim));
    }
  }

  std::vector<Vector> out;
  out.reserve(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    Vector v = vs[i];
    const double input_norm = norm(v);
    double coef_max = 0.0;
    for (const Vector& q : out) {
      const double c = dot(q, v);
      coef_max = std::max(coef_max, std::fabs(c));
      v = v - c * q;
    }
    if (coef_max > 0.5 * input_norm) {
      for (const Vector& q : out) v = v - dot(q, v) * q;
    }
    const double residual = norm(v);
    if (residual <= GS_DEPENDENCE_TOL * input_norm) {
      throw std::invalid_argument(
          "gram_schmidt: vector at index " + std::to_string(i) +
          " is linearly dependent on its predecessors (residual norm " +
          std::to_string(residual) + ")");
    }
    out.push_back((1.0 / residual) * v);
  }
  return out;
}

}  // namespace rotn
