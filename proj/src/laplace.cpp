#include "floatberg/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floatberg/errors.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

namespace {

// Gap below which a group of nodes is treated as one cluster and expanded in
// series; the Newton recursion divides by at least this much.
constexpr double kClusterGap = 0.25;

// dd over a cluster of len nodes via complete homogeneous symmetric
// polynomials of the centered nodes: sum_m h_m(u) / (m + len - 1)!.
double dd_cluster(const double* th, int len) {
  double mean = 0;
  for (int i = 0; i < len; ++i) mean += th[i];
  mean /= len;
  double u[4];
  for (int i = 0; i < len; ++i) u[i] = th[i] - mean;
  double fact = 1.0;
  for (int k = 2; k < len; ++k) fact *= k;  // (len-1)!
  // h_m by dynamic programming over variables.
  constexpr int kMaxTerms = 40;
  double h[kMaxTerms + 1] = {0};
  h[0] = 1.0;
  for (int v = 0; v < len; ++v)
    for (int mdeg = 1; mdeg <= kMaxTerms; ++mdeg) h[mdeg] += u[v] * h[mdeg - 1];
  double sum = 0;
  double denom = fact;  // (m + len - 1)! running
  int small_run = 0;    // symmetric clusters zero out odd terms
  for (int mdeg = 0; mdeg <= kMaxTerms; ++mdeg) {
    double term = h[mdeg] / denom;
    sum += term;
    small_run = std::abs(term) < 1e-18 * std::abs(sum) ? small_run + 1 : 0;
    if (mdeg > 2 && small_run >= 2) break;
    denom *= (mdeg + len);
  }
  return std::exp(mean) * sum;
}

}  // namespace

double dd_exp_shifted(const double* nodes, int k) {
  // Newton table over sorted-descending nodes; entry (i,j) spans nodes i..j.
  double table[4][4];
  for (int i = 0; i < k; ++i) table[i][i] = std::exp(nodes[i]);
  for (int len = 2; len <= k; ++len) {
    for (int i = 0; i + len - 1 < k; ++i) {
      int j = i + len - 1;
      double gap = nodes[i] - nodes[j];
      if (gap < kClusterGap) {
        table[i][j] = dd_cluster(nodes + i, len);
      } else {
        table[i][j] = (table[i][j - 1] - table[i + 1][j]) / gap;
      }
    }
  }
  return std::max(table[0][k - 1], 5e-324);
}

double log_ball_laplace(int n, double s) {
  // j_n(s) = omega_{n-1} * int_{-1}^{1} e^{-2su} (1-u^2)^{(n-1)/2} du,
  // computed as e^{2s} * int e^{-2s(1+sin phi)} cos^n phi dphi.
  double vnm1 = n >= 2 ? unit_ball_volume(n - 1) : 1.0;
  auto f = [n, s](double phi) {
    return std::exp(-2.0 * s * (1.0 + std::sin(phi))) * std::pow(std::cos(phi), n);
  };
  double val = adaptive_1d(f, -std::numbers::pi / 2, std::numbers::pi / 2, 1e-13);
  return 2.0 * s + std::log(vnm1 * val);
}

LogLaplace::LogLaplace(const Body& body, double s_max_hint) : n_(body.n), kind_(body.kind) {
  switch (body.kind) {
    case BodyKind::box:
      lo_ = body.lo;
      hi_ = body.hi;
      return;
    case BodyKind::simplex: {
      Simp s;
      s.count = n_ + 1;
      for (int i = 0; i <= n_; ++i) s.v[i] = body.vertices[i];
      double f = 1;
      for (int k = 2; k <= n_; ++k) f *= k;
      s.log_scale = std::log(f * volume(body));
      simps_.push_back(s);
      return;
    }
    case BodyKind::polytope: {
      // Fan triangulation from the centroid.
      Vec c = centroid(body);
      double f = 1;
      for (int k = 2; k <= n_; ++k) f *= k;
      auto push = [&](const Vec& a, const Vec& b, const Vec& d3, bool tetra) {
        Simp s;
        s.v[0] = c;
        s.v[1] = a;
        s.v[2] = b;
        double vol;
        if (tetra) {
          s.v[3] = d3;
          s.count = 4;
          Mat e(3);
          for (int j = 0; j < 3; ++j) {
            e(0, j) = a[j] - c[j];
            e(1, j) = b[j] - c[j];
            e(2, j) = d3[j] - c[j];
          }
          vol = std::abs(det(e)) / 6.0;
        } else {
          s.count = 3;
          vol = std::abs((a[0] - c[0]) * (b[1] - c[1]) - (b[0] - c[0]) * (a[1] - c[1])) / 2.0;
        }
        if (vol <= 0) return;
        s.log_scale = std::log(f * vol);
        simps_.push_back(s);
      };
      if (n_ == 2) {
        int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i)
          push(body.vertices[i], body.vertices[(i + 1) % m], Vec(), false);
      } else {
        for (const Facet& fc : body.facets) {
          int m = static_cast<int>(fc.cycle.size());
          for (int i = 1; i + 1 < m; ++i)
            push(body.vertices[fc.cycle[0]], body.vertices[fc.cycle[i]],
                 body.vertices[fc.cycle[i + 1]], true);
        }
      }
      return;
    }
    case BodyKind::ellipsoid: {
      center_ = body.center;
      shape_t_ = transpose(body.shape);
      log_det_ = std::log(std::abs(det(body.shape)));
      if (s_max_hint > 0) {
        profile_smax_ = s_max_hint;
        int n = n_;
        profile_ = PiecewiseCheb::fit([n](double s) { return log_ball_laplace(n, s) - 2.0 * s; },
                                      0.0, profile_smax_, 24, 1e-12);
      }
      return;
    }
  }
}

double LogLaplace::log_simplex(const Simp& s, const Vec& t) const {
  double th[4];
  for (int i = 0; i < s.count; ++i) th[i] = -2.0 * dot(s.v[i], t);
  std::sort(th, th + s.count, std::greater<double>());
  double shift = th[0];
  for (int i = 0; i < s.count; ++i) th[i] -= shift;
  return shift + std::log(dd_exp_shifted(th, s.count)) + s.log_scale;
}

double LogLaplace::operator()(const Vec& t) const {
  switch (kind_) {
    case BodyKind::box: {
      // Product of 1D interval factors, each a 2-node divided difference.
      double lg = 0;
      for (int i = 0; i < n_; ++i) {
        double a = -2.0 * lo_[i] * t[i];
        double b = -2.0 * hi_[i] * t[i];
        if (a < b) std::swap(a, b);
        double nodes[2] = {0.0, b - a};
        lg += a + std::log(dd_exp_shifted(nodes, 2)) + std::log(hi_[i] - lo_[i]);
      }
      return lg;
    }
    case BodyKind::simplex:
      return log_simplex(simps_[0], t);
    case BodyKind::polytope: {
      // log-sum-exp over the triangulation.
      double lmax = -1e300;
      std::vector<double> ls(simps_.size());
      int m = static_cast<int>(simps_.size());
      for (int i = 0; i < m; ++i) {
        ls[i] = log_simplex(simps_[i], t);
        lmax = std::max(lmax, ls[i]);
      }
      double s = 0;
      for (int i = 0; i < m; ++i) s += std::exp(ls[i] - lmax);
      return lmax + std::log(s);
    }
    case BodyKind::ellipsoid: {
      Vec w = shape_t_ * t;
      double s = norm(w);
      double prof = (profile_smax_ > 0 && s <= profile_smax_)
                        ? profile_.eval(s) + 2.0 * s
                        : log_ball_laplace(n_, s);
      return log_det_ - 2.0 * dot(center_, t) + prof;
    }
  }
  throw Error("LogLaplace: unreachable");
}

double laplace(const Body& body, const Vec& t) {
  if (t.n != body.n) throw Error("laplace: dimension mismatch");
  LogLaplace lj(body);
  return std::exp(lj(t));
}

}  // namespace floatberg
