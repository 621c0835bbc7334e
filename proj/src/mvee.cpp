#include "floatberg/mvee.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "floatberg/errors.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

namespace {

// Jacobi eigendecomposition of a symmetric matrix, n <= 3.
void sym_eigen(const Mat& s, Vec& evals, Mat& evecs) {
  int n = s.n;
  Mat a = s;
  evecs = Mat::identity(n);
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = evecs(k, p), vkq = evecs(k, q);
          evecs(k, p) = c * vkp - sn * vkq;
          evecs(k, q) = sn * vkp + c * vkq;
        }
      }
  }
  evals = Vec(n);
  for (int i = 0; i < n; ++i) evals[i] = a(i, i);
}

Mat sym_sqrt(const Mat& s) {
  Vec evals;
  Mat v;
  sym_eigen(s, evals, v);
  Mat d(s.n);
  for (int i = 0; i < s.n; ++i) {
    if (evals[i] < 0) evals[i] = 0;
    d(i, i) = std::sqrt(evals[i]);
  }
  return v * d * transpose(v);
}

}  // namespace

Body mvee(const std::vector<Vec>& points) {
  if (points.empty()) throw DegenerateBody("mvee: no points");
  int n = points[0].n;
  int m = static_cast<int>(points.size());
  if (m < n + 1) throw DegenerateBody("mvee: need at least n+1 points");
  int d = n + 1;

  std::vector<double> u(m, 1.0 / m);
  std::vector<double> g(m, 0.0);
  const double eps = kTol.mvee_gap;
  const int max_iter = 200000;

  for (int iter = 0; iter < max_iter; ++iter) {
    // M = sum u_i q_i q_i^T over lifted points q = (p; 1), then g_i = q^T M^-1 q.
    double M[16] = {0};
    for (int i = 0; i < m; ++i) {
      double q[4];
      for (int k = 0; k < n; ++k) q[k] = points[i][k];
      q[n] = 1.0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) M[r * d + c] += u[i] * q[r] * q[c];
    }
    // Invert M column by column.
    double Minv[16];
    for (int c = 0; c < d; ++c) {
      double A[16];
      std::copy(M, M + d * d, A);
      double b[4] = {0, 0, 0, 0};
      b[c] = 1.0;
      if (!solve_dense(d, A, b)) throw DegenerateBody("mvee: points affinely dependent");
      for (int r = 0; r < d; ++r) Minv[r * d + c] = b[r];
    }
    int jmax = 0, jmin = -1;
    double gmax = -1e300, gmin = 1e300;
    for (int i = 0; i < m; ++i) {
      double q[4];
      for (int k = 0; k < n; ++k) q[k] = points[i][k];
      q[n] = 1.0;
      double s = 0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) s += q[r] * Minv[r * d + c] * q[c];
      g[i] = s;
      if (s > gmax) {
        gmax = s;
        jmax = i;
      }
      if (u[i] > 1e-14 && s < gmin) {
        gmin = s;
        jmin = i;
      }
    }
    if (gmax <= d * (1.0 + eps)) break;
    // Take whichever of the add step and away step improves more.
    bool away = jmin >= 0 && (d - gmin) > (gmax - d);
    int j = away ? jmin : jmax;
    double alpha = (g[j] - d) / (d * (g[j] - 1.0));
    if (away) alpha = std::max(alpha, -u[j] / (1.0 - u[j]));
    if (std::abs(alpha) < 1e-18) break;
    for (int i = 0; i < m; ++i) u[i] *= (1.0 - alpha);
    u[j] += alpha;
  }

  Vec c(n);
  for (int i = 0; i < m; ++i) c = c + u[i] * points[i];
  Mat sigma(n);
  for (int i = 0; i < m; ++i) {
    Vec w = points[i] - c;
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) sigma(r, cc) += u[i] * w[r] * w[cc];
  }
  Mat q = inverse(sigma);
  // E = {x : (x-c)^T (n Sigma)^-1 (x-c) <= 1}; inflate to the largest actual
  // radius so every input point is inside.
  double r2max = 0;
  for (int i = 0; i < m; ++i) {
    Vec w = points[i] - c;
    double s = 0;
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) s += w[r] * q(r, cc) * w[cc];
    r2max = std::max(r2max, s / n);
  }
  Mat scaled(n);
  for (int r = 0; r < n; ++r)
    for (int cc = 0; cc < n; ++cc) scaled(r, cc) = n * r2max * sigma(r, cc);
  return Body::ellipsoid(c, sym_sqrt(scaled));
}

double mvee_max_radius(const Body& ellipsoid, const std::vector<Vec>& points) {
  if (ellipsoid.kind != BodyKind::ellipsoid) throw Error("mvee_max_radius: not an ellipsoid");
  Mat ainv = inverse(ellipsoid.shape);
  double r = 0;
  for (const Vec& p : points) r = std::max(r, norm(ainv * (p - ellipsoid.center)));
  return r;
}

Body john_inner(const Body& ellipsoid, int n) {
  if (ellipsoid.kind != BodyKind::ellipsoid) throw Error("john_inner: not an ellipsoid");
  if (n < 1) throw Error("john_inner: n must be >= 1");
  Mat a = ellipsoid.shape;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) a(i, j) /= n;
  return Body::ellipsoid(ellipsoid.center, a);
}

}  // namespace floatberg
