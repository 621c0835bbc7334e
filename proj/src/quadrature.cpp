#include "floatberg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace floatberg {

namespace {

struct GlRule {
  std::vector<double> x, w;
};

GlRule make_gl(int m) {
  GlRule r;
  r.x.resize(m);
  r.w.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_m(x) and P'_m(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[m - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.w[i] = w;
    r.w[m - 1 - i] = w;
  }
  return r;
}

const GlRule& gl_rule(int m) {
  static std::map<int, GlRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, make_gl(m)).first;
  return it->second;
}

}  // namespace

const std::vector<double>& gl_nodes(int m) { return gl_rule(m).x; }
const std::vector<double>& gl_weights(int m) { return gl_rule(m).w; }

double gl_integrate(const std::function<double(double)>& f, double a, double b, int m) {
  const auto& r = gl_rule(m);
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  for (int i = 0; i < m; ++i) s += r.w[i] * f(c + h * r.x[i]);
  return s * h;
}

namespace {

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double abs_tol, int depth, int max_depth) {
  double m = 0.5 * (a + b);
  double left = gl_integrate(f, a, m, 15);
  double right = gl_integrate(f, m, b, 15);
  double err = std::abs(left + right - whole);
  if (err <= abs_tol || depth >= max_depth) return left + right;
  return adapt(f, a, m, left, 0.5 * abs_tol, depth + 1, max_depth) +
         adapt(f, m, b, right, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_1d(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor, int max_depth) {
  if (a == b) return 0.0;
  double first = gl_integrate(f, a, b, 15);
  // Refine the scale estimate once so a bad first panel cannot hide mass.
  double m = 0.5 * (a + b);
  double second = gl_integrate(f, a, m, 15) + gl_integrate(f, m, b, 15);
  double scale = std::max(std::abs(first), std::abs(second));
  double abs_tol = std::max(abs_floor, rel_tol * scale);
  if (abs_tol == 0) abs_tol = 1e-300;
  return adapt(f, a, b, first, abs_tol, 0, max_depth);
}

double ChebPanel::eval(double x) const {
  // Clenshaw on the mapped variable.
  double t = (2.0 * x - (a + b)) / (b - a);
  double b1 = 0, b2 = 0;
  for (int k = static_cast<int>(coef.size()) - 1; k >= 1; --k) {
    double tmp = 2.0 * t * b1 - b2 + coef[k];
    b2 = b1;
    b1 = tmp;
  }
  return t * b1 - b2 + coef[0];
}

double PiecewiseCheb::eval(double x) const {
  int lo_i = 0, hi_i = static_cast<int>(panels.size()) - 1;
  while (lo_i < hi_i) {
    int mid = (lo_i + hi_i) / 2;
    if (x <= panels[mid].b)
      hi_i = mid;
    else
      lo_i = mid + 1;
  }
  return panels[lo_i].eval(x);
}

namespace {

ChebPanel fit_panel(const std::function<double(double)>& f, double a, double b, int m) {
  ChebPanel p;
  p.a = a;
  p.b = b;
  std::vector<double> fv(m + 1);
  for (int k = 0; k <= m; ++k) {
    double t = std::cos(std::numbers::pi * k / m);
    fv[k] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
  }
  p.coef.resize(m + 1);
  for (int j = 0; j <= m; ++j) {
    double s = 0.5 * (fv[0] + (j % 2 ? -1.0 : 1.0) * fv[m]);
    for (int k = 1; k < m; ++k) s += fv[k] * std::cos(std::numbers::pi * j * k / m);
    p.coef[j] = 2.0 * s / m;
  }
  p.coef[0] *= 0.5;
  return p;
}

void fit_rec(const std::function<double(double)>& f, double a, double b, int degree,
             double abs_tol, int depth, std::vector<ChebPanel>& out) {
  ChebPanel p = fit_panel(f, a, b, degree);
  int m = degree;
  double tail = std::abs(p.coef[m]) + std::abs(p.coef[m - 1]) + std::abs(p.coef[m - 2]);
  if (tail <= abs_tol || depth >= 40) {
    out.push_back(std::move(p));
    return;
  }
  double mid = 0.5 * (a + b);
  fit_rec(f, a, mid, degree, abs_tol, depth + 1, out);
  fit_rec(f, mid, b, degree, abs_tol, depth + 1, out);
}

}  // namespace

PiecewiseCheb PiecewiseCheb::fit(const std::function<double(double)>& f, double a, double b,
                                 int degree, double abs_tol) {
  if (!(b > a)) throw std::invalid_argument("PiecewiseCheb: empty interval");
  PiecewiseCheb pc;
  pc.lo = a;
  pc.hi = b;
  fit_rec(f, a, b, degree, abs_tol, 0, pc.panels);
  return pc;
}

double pairwise_sum(std::vector<double>& xs) {
  size_t n = xs.size();
  if (n == 0) return 0.0;
  while (n > 1) {
    size_t h = (n + 1) / 2;
    for (size_t i = 0; i < n / 2; ++i) xs[i] = xs[2 * i] + xs[2 * i + 1];
    if (n % 2) xs[n / 2] = xs[n - 1];
    n = h;
  }
  return xs[0];
}

}  // namespace floatberg
