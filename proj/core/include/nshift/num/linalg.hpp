#pragma once

#include <span>
#include <vector>

// Dense linear algebra for the small matrices that show up here (metric
// blocks, Jacobians, tangent frames; n stays in single digits).

namespace nshift::num {

class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

// In-place Cholesky factorization A = L L^T of a symmetric matrix; returns
// false when A is not positive definite. On success the lower triangle of
// `a` holds L.
bool cholesky_factor(Matrix& a);

// Solves L L^T x = b given the factor from cholesky_factor.
void cholesky_solve(const Matrix& l, std::span<double> b);

// Inverse of the original SPD matrix from its Cholesky factor.
Matrix cholesky_inverse(const Matrix& l);

// Determinant via LU with partial pivoting (consumes its argument).
double determinant(Matrix a);

// Solves A x = b via LU with partial pivoting; returns false if singular.
bool solve_linear(Matrix a, std::span<double> b);

// Generalized cross product: given (n-1) rows in R^n, returns the vector
// orthogonal (in the Euclidean sense) to all of them, with components given
// by signed maximal minors. Zero output signals a rank-deficient input.
std::vector<double> generalized_cross(const Matrix& rows);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace nshift::num
