// Small fixed-capacity vectors and matrices for dimensions 1..3.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace floatberg {

inline constexpr int kMaxDim = 3;

struct Vec {
  int n = 0;
  std::array<double, kMaxDim> a{0.0, 0.0, 0.0};

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  Vec(std::initializer_list<double> xs) {
    n = static_cast<int>(xs.size());
    int i = 0;
    for (double x : xs) a[i++] = x;
  }

  double& operator[](int i) { return a[i]; }
  double operator[](int i) const { return a[i]; }
};

inline Vec operator+(const Vec& u, const Vec& v) {
  Vec w(u.n);
  for (int i = 0; i < u.n; ++i) w[i] = u[i] + v[i];
  return w;
}

inline Vec operator-(const Vec& u, const Vec& v) {
  Vec w(u.n);
  for (int i = 0; i < u.n; ++i) w[i] = u[i] - v[i];
  return w;
}

inline Vec operator*(double s, const Vec& u) {
  Vec w(u.n);
  for (int i = 0; i < u.n; ++i) w[i] = s * u[i];
  return w;
}

inline Vec operator-(const Vec& u) { return -1.0 * u; }

inline double dot(const Vec& u, const Vec& v) {
  double s = 0;
  for (int i = 0; i < u.n; ++i) s += u[i] * v[i];
  return s;
}

inline double norm(const Vec& u) { return std::sqrt(dot(u, u)); }

inline Vec normalized(const Vec& u) {
  double s = norm(u);
  if (s == 0) throw std::invalid_argument("cannot normalize zero vector");
  return (1.0 / s) * u;
}

inline double dist(const Vec& u, const Vec& v) { return norm(u - v); }

// Row-major n x n matrix, n <= 3.
struct Mat {
  int n = 0;
  std::array<double, kMaxDim * kMaxDim> a{};

  Mat() = default;
  explicit Mat(int dim) : n(dim) {}

  double& operator()(int i, int j) { return a[i * kMaxDim + j]; }
  double operator()(int i, int j) const { return a[i * kMaxDim + j]; }

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Vec operator*(const Mat& m, const Vec& v) {
  Vec w(v.n);
  for (int i = 0; i < m.n; ++i) {
    double s = 0;
    for (int j = 0; j < m.n; ++j) s += m(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      double s = 0;
      for (int k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
      z(i, j) = s;
    }
  return z;
}

inline Mat transpose(const Mat& m) {
  Mat t(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) t(i, j) = m(j, i);
  return t;
}

inline double det(const Mat& m) {
  switch (m.n) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      throw std::invalid_argument("det: dimension out of range");
  }
}

inline Mat inverse(const Mat& m) {
  double d = det(m);
  if (d == 0) throw std::invalid_argument("inverse: singular matrix");
  Mat r(m.n);
  switch (m.n) {
    case 1:
      r(0, 0) = 1.0 / d;
      break;
    case 2:
      r(0, 0) = m(1, 1) / d;
      r(0, 1) = -m(0, 1) / d;
      r(1, 0) = -m(1, 0) / d;
      r(1, 1) = m(0, 0) / d;
      break;
    case 3:
      r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
      r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
      r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
      r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
      r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
      r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
      r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
      r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
      r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
      break;
    default:
      throw std::invalid_argument("inverse: dimension out of range");
  }
  return r;
}

// Smallest singular value of A, from the eigenvalues of A^T A (n <= 3).
double min_singular_value(const Mat& m);

// Solves a dense m x m system in place by Gaussian elimination with partial
// pivoting (m <= 4, used by the ellipsoid fitter). Returns false if singular.
bool solve_dense(int m, double* A, double* b);

}  // namespace floatberg
