// Shared test helpers: deterministic random bodies, a small 2D hull for
// containment oracles, modified Bessel functions for the independent disk
// kernel route.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "floatberg/body.hpp"

namespace fbtest {

using floatberg::Body;
using floatberg::Mat;
using floatberg::Vec;

// Monotone-chain hull of 2D points (CCW). Test-side oracle only.
inline std::vector<Vec> hull2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline bool in_hull(const std::vector<Vec>& hull, const Vec& p, double tol = 1e-12) {
  int m = static_cast<int>(hull.size());
  for (int i = 0; i < m; ++i) {
    const Vec& a = hull[i];
    const Vec& b = hull[(i + 1) % m];
    double c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    if (c < -tol) return false;
  }
  return true;
}

// Random convex polygon: vertices at sorted random angles on a randomly
// sheared circle, so convex position is guaranteed.
inline Body random_convex_polygon(std::mt19937& rng, int nverts, bool symmetric) {
  std::uniform_real_distribution<double> uang(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> ush(-0.6, 0.6);
  std::uniform_real_distribution<double> usc(0.6, 1.6);
  double a = usc(rng), bsc = usc(rng), sh = ush(rng);
  int base = symmetric ? nverts / 2 : nverts;
  std::vector<double> angs;
  for (int i = 0; i < base; ++i) angs.push_back(symmetric ? uang(rng) / 2.0 : uang(rng));
  std::sort(angs.begin(), angs.end());
  // Keep angles separated so the polygon stays strictly convex.
  for (std::size_t i = 1; i < angs.size(); ++i)
    if (angs[i] - angs[i - 1] < 0.05) angs[i] = angs[i - 1] + 0.05;
  std::vector<Vec> pts;
  for (double t : angs) {
    double x = a * std::cos(t), y = bsc * std::sin(t);
    pts.push_back(Vec{x + sh * y, y});
    if (symmetric) pts.push_back(Vec{-(x + sh * y), -y});
  }
  return Body::polygon(pts);
}

// Modified Bessel functions of the first kind (orders 0 and 1), series for
// small arguments and the asymptotic expansion for large; used only as the
// independent route for the disk kernel.
inline double bessel_i(int nu, double x) {
  if (x < 14.0) {
    double term = nu == 0 ? 1.0 : x / 2.0;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
      term *= (x * x / 4.0) / (k * (k + nu));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  double mu = 4.0 * nu * nu;
  double s = 1.0, term = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= -(mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * x * k);
    s += term;
  }
  return std::exp(x) / std::sqrt(2.0 * M_PI * x) * s;
}

// exp(-x) * I_nu(x), stable for large x.
inline double bessel_i_scaled(int nu, double x) {
  if (x < 14.0) return std::exp(-x) * bessel_i(nu, x);
  double mu = 4.0 * nu * nu;
  double s = 1.0, term = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= -(mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * x * k);
    s += term;
  }
  return s / std::sqrt(2.0 * M_PI * x);
}

}  // namespace fbtest
