#include "nshift/num/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace nshift::num {

bool cholesky_factor(Matrix& a) {
  const int n = a.rows();
  for (int j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (int k = 0; k < j; ++k) diag -= a(j, k) * a(j, k);
    if (!(diag > 0.0)) return false;
    const double ljj = std::sqrt(diag);
    a(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / ljj;
    }
  }
  return true;
}

void cholesky_solve(const Matrix& l, std::span<double> b) {
  const int n = l.rows();
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
    b[i] = s / l(i, i);
  }
}

Matrix cholesky_inverse(const Matrix& l) {
  const int n = l.rows();
  Matrix inv(n, n);
  std::vector<double> e(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) e[i] = (i == j) ? 1.0 : 0.0;
    cholesky_solve(l, e);
    for (int i = 0; i < n; ++i) inv(i, j) = e[i];
  }
  return inv;
}

namespace {

// LU with partial pivoting; returns false if singular. perm_sign gets the
// permutation parity for determinant use.
bool lu_factor(Matrix& a, std::vector<int>& piv, int& perm_sign) {
  const int n = a.rows();
  piv.resize(n);
  perm_sign = 1;
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(piv[pivot], piv[col]);
      perm_sign = -perm_sign;
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      a(r, col) = f;
      for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return true;
}

}  // namespace

double determinant(Matrix a) {
  std::vector<int> piv;
  int sign = 1;
  if (!lu_factor(a, piv, sign)) return 0.0;
  double det = sign;
  for (int i = 0; i < a.rows(); ++i) det *= a(i, i);
  return det;
}

bool solve_linear(Matrix a, std::span<double> b) {
  const int n = a.rows();
  std::vector<int> piv;
  int sign = 1;
  if (!lu_factor(a, piv, sign)) return false;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[piv[i]];
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < i; ++k) x[i] -= a(i, k) * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= a(i, k) * x[k];
    x[i] /= a(i, i);
  }
  for (int i = 0; i < n; ++i) b[i] = x[i];
  return true;
}

std::vector<double> generalized_cross(const Matrix& rows) {
  const int n = rows.cols();
  std::vector<double> out(n, 0.0);
  Matrix minor(n - 1, n - 1);
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == k) continue;
        minor(r, cc++) = rows(r, c);
      }
    }
    out[k] = sign * determinant(minor);
    sign = -sign;
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace nshift::num
