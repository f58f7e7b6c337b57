#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace rotn {

// Tolerance for orthonormality checks (unit norms, zero dot products).
inline constexpr double ORTHO_TOL = 1e-10;
// Tolerance for agreement between equivalent computation routes.
inline constexpr double EQ_TOL = 1e-12;
// A Gram-Schmidt residual below this fraction of the input norm means
// the vector is linearly dependent on its predecessors.
inline constexpr double GS_DEPENDENCE_TOL = 1e-12;

/// Relative comparison for values above 1 in magnitude, absolute below.
bool approx_equal(double a, double b, double tol);

/// Dense real vector. Constructors taking entry data reject NaN/Inf.
class Vector {
 public:
  explicit Vector(int dim);
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  /// Standard basis vector e_index (0-based) in the given dimension.
  static Vector unit(int dim, int index);

  int dim() const { return static_cast<int>(entries_.size()); }
  double& operator[](int i) { return entries_[static_cast<size_t>(i)]; }
  double operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double s, const Vector& v);
Vector operator*(const Vector& v, double s);

double dot(const Vector& u, const Vector& v);
double norm(const Vector& u);
double max_abs_diff(const Vector& u, const Vector& v);

/// Dense real matrix with column-oriented access. Storage is row-major
/// internally; the layout is hidden behind the accessors.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  /// The j-th column as a vector.
  Vector column(int j) const;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Matrix identity(int n);
Matrix transpose(const Matrix& a);

/// Largest entrywise |a - b|.
double max_abs_diff(const Matrix& a, const Matrix& b);
/// Largest entry magnitude.
double max_abs(const Matrix& a);

/// A*x as the linear combination x_1 a_1 + ... + x_n a_n of the columns of A.
Vector matvec(const Matrix& a, const Vector& x);

/// Matrix product assembled column by column: AB = [A b_1, ..., A b_k].
Matrix matmul_cayley(const Matrix& a, const Matrix& b);

/// Matrix product as the sum of outer products of A's columns with B's rows.
Matrix matmul_colrow(const Matrix& a, const Matrix& b);

/// Entry-by-entry matrix product, c_ij = sum_k a_ik b_kj. Serves as the
/// oracle for the other two product routes.
Matrix matmul_rowcol(const Matrix& a, const Matrix& b);

/// Outer product u v^T (u.dim x v.dim).
Matrix outer(const Vector& u, const Vector& v);

/// Modified Gram-Schmidt orthonormalization. The first output is parallel
/// to vs[0]. Runs one extra reorthogonalization sweep for a vector whose
/// projection coefficients exceed half its norm. Throws when a vector is
/// linearly dependent on its predecessors, naming the offending index.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vs);

}  // namespace rotn
