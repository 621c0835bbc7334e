#include "floatberg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace floatberg {

double min_singular_value(const Mat& m) {
  // Smallest eigenvalue of M = A^T A, then sqrt.
  Mat g = transpose(m) * m;
  switch (m.n) {
    case 1:
      return std::sqrt(g(0, 0));
    case 2: {
      double tr = g(0, 0) + g(1, 1);
      double d = det(g);
      double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - d));
      return std::sqrt(std::max(0.0, tr / 2.0 - disc));
    }
    case 3: {
      // Trigonometric solution of the characteristic cubic of a symmetric 3x3.
      double q = (g(0, 0) + g(1, 1) + g(2, 2)) / 3.0;
      double p2 = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double v = g(i, j) - (i == j ? q : 0.0);
          p2 += v * v;
        }
      double p = std::sqrt(p2 / 6.0);
      if (p == 0) return std::sqrt(std::max(0.0, q));
      Mat B(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) B(i, j) = (g(i, j) - (i == j ? q : 0.0)) / p;
      double r = det(B) / 2.0;
      r = std::clamp(r, -1.0, 1.0);
      double phi = std::acos(r) / 3.0;
      double eig_min = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
      return std::sqrt(std::max(0.0, eig_min));
    }
    default:
      throw std::invalid_argument("min_singular_value: dimension out of range");
  }
}

bool solve_dense(int m, double* A, double* b) {
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(A[r * m + col]) > std::abs(A[piv * m + col])) piv = r;
    if (std::abs(A[piv * m + col]) < 1e-300) return false;
    if (piv != col) {
      for (int c = 0; c < m; ++c) std::swap(A[piv * m + c], A[col * m + c]);
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < m; ++r) {
      double f = A[r * m + col] / A[col * m + col];
      for (int c = col; c < m; ++c) A[r * m + c] -= f * A[col * m + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = m - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < m; ++c) s -= A[r * m + c] * b[c];
    b[r] = s / A[r * m + r];
  }
  return true;
}

}  // namespace floatberg
