#include "floatberg/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "floatberg/errors.hpp"
#include "floatberg/laplace.hpp"
#include "floatberg/quadrature.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

void QuadratureConfig::validate() const {
  if (!(eps_rel > 0) || !(eps_trunc > 0) || max_subdiv < 1 || base_nodes < 4)
    throw Error("QuadratureConfig: fields must be positive");
  if (!(eps_trunc < eps_rel)) throw Error("QuadratureConfig: eps_trunc must be < eps_rel");
}

namespace {

constexpr std::size_t kPanelBudget = 600000;

struct Panel {
  Vec lo, hi;
  double value = 0;
  double diff = 0;  // |I(base) - I(base/2)|
};

// Everything one evaluation point needs: the log-Laplace evaluator, the sites
// for the exponent lower bound, and the derived truncation/width geometry.
struct PointGeometry {
  int n;
  Vec x;
  double R = 0;
  Vec width;
  double diam = 0;
  double logvol = 0;
  // Exponent bound h_{x-D}(t) >= max over sites s of s.t (polytopal bodies);
  // ellipsoids add a definite term sigma_min * |t|.
  std::vector<Vec> sites;
  double sigma_min = 0;  // 0 unless ellipsoid
  Vec ell_site;          // x - center for the ellipsoid bound
};

double cell_h_lower(const PointGeometry& g, const Vec& lo, const Vec& hi) {
  double best = -1e300;
  for (const Vec& s : g.sites) {
    double m = 0;
    for (int i = 0; i < g.n; ++i) m += std::min(s[i] * lo[i], s[i] * hi[i]);
    best = std::max(best, m);
  }
  if (g.sigma_min > 0) {
    double m = 0;
    for (int i = 0; i < g.n; ++i) m += std::min(g.ell_site[i] * lo[i], g.ell_site[i] * hi[i]);
    double d2 = 0;
    for (int i = 0; i < g.n; ++i) {
      double c = std::clamp(0.0, lo[i], hi[i]);
      d2 += c * c;  // distance from 0 to the cell, per axis clamp
    }
    best = std::max(best, m + g.sigma_min * std::sqrt(d2));
  }
  return best;
}

double cell_rmax(const PointGeometry& g, const Vec& lo, const Vec& hi) {
  double r = 0;
  for (int i = 0; i < g.n; ++i) r += std::max(std::abs(lo[i]), std::abs(hi[i]));
  return r;
}

double eval_panel(const LogLaplace& logj, const PointGeometry& g, const Vec& lo, const Vec& hi,
                  int m) {
  const auto& xs = gl_nodes(m);
  const auto& ws = gl_weights(m);
  int n = g.n;
  double c0 = 0.5 * (lo[0] + hi[0]), h0 = 0.5 * (hi[0] - lo[0]);
  double total = 0;
  Vec t(n);
  if (n == 1) {
    for (int i = 0; i < m; ++i) {
      t[0] = c0 + h0 * xs[i];
      total += ws[i] * std::exp(-2.0 * (g.x[0] * t[0]) - logj(t));
    }
    return total * h0;
  }
  double c1 = 0.5 * (lo[1] + hi[1]), h1 = 0.5 * (hi[1] - lo[1]);
  if (n == 2) {
    for (int i = 0; i < m; ++i) {
      t[0] = c0 + h0 * xs[i];
      double row = 0;
      for (int j = 0; j < m; ++j) {
        t[1] = c1 + h1 * xs[j];
        row += ws[j] * std::exp(-2.0 * (g.x[0] * t[0] + g.x[1] * t[1]) - logj(t));
      }
      total += ws[i] * row;
    }
    return total * h0 * h1;
  }
  double c2 = 0.5 * (lo[2] + hi[2]), h2 = 0.5 * (hi[2] - lo[2]);
  for (int i = 0; i < m; ++i) {
    t[0] = c0 + h0 * xs[i];
    double plane = 0;
    for (int j = 0; j < m; ++j) {
      t[1] = c1 + h1 * xs[j];
      double row = 0;
      for (int k = 0; k < m; ++k) {
        t[2] = c2 + h2 * xs[k];
        row += ws[k] * std::exp(-2.0 * (g.x[0] * t[0] + g.x[1] * t[1] + g.x[2] * t[2]) - logj(t));
      }
      plane += ws[j] * row;
    }
    total += ws[i] * plane;
  }
  return total * h0 * h1 * h2;
}

void eval_both(const LogLaplace& logj, const PointGeometry& g, Panel& p, int m) {
  double hi = eval_panel(logj, g, p.lo, p.hi, m);
  double lo = eval_panel(logj, g, p.lo, p.hi, m / 2);
  p.value = hi;
  p.diff = std::abs(hi - lo);
}

// The raw integral over R^n of exp(-2 x.t - log J(t)) with error control;
// multiplied by (2 pi)^-n by the caller.
struct RawResult {
  double value = 0;
  double error = 0;
  double radius = 0;
};

RawResult integrate_point(const Body& body, const LogLaplace& logj, const Vec& x,
                          const QuadratureConfig& cfg) {
  PointGeometry g;
  g.n = body.n;
  g.x = x;
  g.diam = diameter(body);
  double vol = volume(body);
  g.logvol = std::log(vol);

  double gap = boundary_gap(body, x) * 0.9;
  if (!(gap > 0)) throw PointOutsideBody("kernel: point not interior");
  double L = -std::log(cfg.eps_trunc);
  double R = L / (2.0 * gap);
  for (int it = 0; it < 5; ++it)
    R = (L + g.n * std::log1p(2.0 * g.diam * R) + 2.0) / (2.0 * gap);
  g.R = R;

  Vec blo, bhi;
  bounding_box(body, blo, bhi);
  g.width = Vec(g.n);
  double alpha = 0.35 * cfg.base_nodes;
  for (int i = 0; i < g.n; ++i) {
    double kappa = 2.0 * std::max(bhi[i] - x[i], x[i] - blo[i]);
    g.width[i] = std::min(alpha / kappa, 2.0 * R);
  }

  switch (body.kind) {
    case BodyKind::box: {
      // Used for n=1 intervals; corners as sites.
      g.sites.push_back(x - body.lo);
      g.sites.push_back(x - body.hi);
      if (g.n >= 2)
        for (int k = 1; k + 1 < (1 << g.n); ++k) {
          Vec c(g.n);
          for (int i = 0; i < g.n; ++i) c[i] = (k >> i) & 1 ? body.hi[i] : body.lo[i];
          g.sites.push_back(x - c);
        }
      break;
    }
    case BodyKind::simplex:
    case BodyKind::polytope:
      for (const Vec& v : body.vertices) g.sites.push_back(x - v);
      break;
    case BodyKind::ellipsoid:
      g.sigma_min = min_singular_value(body.shape);
      g.ell_site = x - body.center;
      break;
  }

  // Quadtree descent: prune cells whose exponent bound is dead, emit panels at
  // the target widths. Skipped mass is accumulated as a truncation bound.
  const double skip_log = std::log(cfg.eps_trunc) + std::log(1e-2);
  double trunc_acc = 0;  // sum of cellvol * bound / vol over skipped cells
  std::vector<Panel> panels;
  struct Cell {
    Vec lo, hi;
  };
  std::vector<Cell> stack;
  {
    Cell root;
    root.lo = Vec(g.n);
    root.hi = Vec(g.n);
    for (int i = 0; i < g.n; ++i) {
      root.lo[i] = -R;
      root.hi[i] = R;
    }
    stack.push_back(root);
  }
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    double hmin = cell_h_lower(g, c.lo, c.hi);
    double bound_log = -2.0 * hmin + g.n * std::log1p(2.0 * g.diam * cell_rmax(g, c.lo, c.hi)) + 2.0;
    if (bound_log < skip_log) {
      double cellvol = 1;
      for (int i = 0; i < g.n; ++i) cellvol *= c.hi[i] - c.lo[i];
      trunc_acc += cellvol * std::exp(bound_log) / vol;
      continue;
    }
    int split_axis = -1;
    double worst = 1.0 + 1e-9;
    for (int i = 0; i < g.n; ++i) {
      double ratio = (c.hi[i] - c.lo[i]) / g.width[i];
      if (ratio > worst) {
        worst = ratio;
        split_axis = i;
      }
    }
    if (split_axis < 0) {
      Panel p;
      p.lo = c.lo;
      p.hi = c.hi;
      panels.push_back(p);
      if (panels.size() > kPanelBudget)
        throw QuadratureNotConverged("kernel: panel budget exceeded", 0.0, 1e300);
      continue;
    }
    double mid = 0.5 * (c.lo[split_axis] + c.hi[split_axis]);
    Cell a = c, b = c;
    a.hi[split_axis] = mid;
    b.lo[split_axis] = mid;
    stack.push_back(a);
    stack.push_back(b);
  }

  for (Panel& p : panels) eval_both(logj, g, p, cfg.base_nodes);

  auto total_of = [&](std::vector<Panel>& ps, double& err) {
    std::vector<double> vals(ps.size()), diffs(ps.size());
    std::sort(ps.begin(), ps.end(), [](const Panel& a, const Panel& b) {
      for (int i = 0; i < a.lo.n; ++i) {
        if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
      }
      return false;
    });
    for (std::size_t i = 0; i < ps.size(); ++i) {
      vals[i] = ps[i].value;
      diffs[i] = ps[i].diff;
    }
    err = pairwise_sum(diffs) + trunc_acc;
    return pairwise_sum(vals);
  };

  double err = 0;
  double total = total_of(panels, err);
  for (int round = 0; round < cfg.max_subdiv; ++round) {
    if (err <= cfg.eps_rel * std::abs(total)) break;
    // Split the panels carrying the top 80% of the refinement error.
    std::vector<std::size_t> order(panels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return panels[a].diff > panels[b].diff; });
    double goal = 0.8 * (err - trunc_acc);
    double got = 0;
    std::vector<Panel> next;
    std::vector<bool> splitme(panels.size(), false);
    for (std::size_t idx : order) {
      if (got >= goal || panels[idx].diff == 0) break;
      splitme[idx] = true;
      got += panels[idx].diff;
    }
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!splitme[i]) {
        next.push_back(panels[i]);
        continue;
      }
      // 2^n children.
      int kids = 1 << g.n;
      for (int k = 0; k < kids; ++k) {
        Panel ch;
        ch.lo = panels[i].lo;
        ch.hi = panels[i].hi;
        for (int ax = 0; ax < g.n; ++ax) {
          double mid = 0.5 * (panels[i].lo[ax] + panels[i].hi[ax]);
          if ((k >> ax) & 1)
            ch.lo[ax] = mid;
          else
            ch.hi[ax] = mid;
        }
        eval_both(logj, g, ch, cfg.base_nodes);
        next.push_back(ch);
      }
      if (next.size() > kPanelBudget)
        throw QuadratureNotConverged("kernel: panel budget exceeded", total,
                                     err / std::max(std::abs(total), 1e-300));
    }
    panels = std::move(next);
    total = total_of(panels, err);
  }
  if (err > cfg.eps_rel * std::abs(total)) {
    double factor = 1.0;
    for (int i = 0; i < g.n; ++i) factor /= 2.0 * std::numbers::pi;
    throw QuadratureNotConverged("kernel: tolerance not met", total * factor,
                                 err / std::max(std::abs(total), 1e-300));
  }
  RawResult r;
  r.value = total;
  r.error = err;
  r.radius = R;
  return r;
}

double solve_smax(const Body& body, const QuadratureConfig& cfg) {
  // Profile domain sized for the closest evaluable points.
  double gap_floor = 0.5 * kTol.near_boundary_gap * 0.9;
  double L = -std::log(cfg.eps_trunc);
  double diam = diameter(body);
  double R = L / (2.0 * gap_floor);
  for (int it = 0; it < 5; ++it)
    R = (L + body.n * std::log1p(2.0 * diam * R) + 2.0) / (2.0 * gap_floor);
  double frob = 0;
  for (int i = 0; i < body.n; ++i)
    for (int j = 0; j < body.n; ++j) frob += body.shape(i, j) * body.shape(i, j);
  return std::sqrt(frob) * std::sqrt(static_cast<double>(body.n)) * R * 1.01;
}

}  // namespace

KernelEvaluator::KernelEvaluator(const Body& body, const QuadratureConfig& cfg)
    : body_(body), cfg_(cfg) {
  cfg_.validate();
  if (body.n > 3) throw Error("kernel: bodies supported for n <= 3 only");
  if (body_.kind == BodyKind::box && body_.n >= 2) return;  // factorized path
  double s_hint = body_.kind == BodyKind::ellipsoid ? solve_smax(body_, cfg_) : 0.0;
  logj_ = std::make_shared<const LogLaplace>(body_, s_hint);
}

KernelValue KernelEvaluator::at(const Vec& x) const {
  if (x.n != body_.n) throw Error("kernel: dimension mismatch");
  if (!contains(body_, x)) throw PointOutsideBody("kernel: point not interior");
  KernelValue kv;
  kv.x = x;
  if (body_.kind == BodyKind::box && body_.n >= 2) {
    // The integrand factorizes: product of per-axis interval kernels.
    double value = 1.0, rel = 0.0, radius = 0.0;
    for (int i = 0; i < body_.n; ++i) {
      Body iv = Body::box(Vec{body_.lo[i]}, Vec{body_.hi[i]});
      LogLaplace lj(iv);
      RawResult r = integrate_point(iv, lj, Vec{x[i]}, cfg_);
      double axis = r.value / (2.0 * std::numbers::pi);
      value *= axis;
      rel += r.error / std::abs(r.value);
      radius = std::max(radius, r.radius);
    }
    kv.value = value;
    kv.error = std::abs(value) * rel;
    kv.trunc_radius = radius;
    return kv;
  }
  RawResult r = integrate_point(body_, *logj_, x, cfg_);
  double factor = 1.0;
  for (int i = 0; i < body_.n; ++i) factor /= 2.0 * std::numbers::pi;
  kv.value = r.value * factor;
  kv.error = r.error * factor;
  kv.trunc_radius = r.radius;
  return kv;
}

KernelValue kernel(const Body& body, const Vec& x, const QuadratureConfig& cfg) {
  return KernelEvaluator(body, cfg).at(x);
}

double kernel_square_reference(const Vec& x) {
  if (x.n != 2 || !(x[0] > 0 && x[0] < 1 && x[1] > 0 && x[1] < 1))
    throw PointOutsideBody("kernel_square_reference: point outside (0,1)^2");
  double sx = std::sin(std::numbers::pi * x[0]);
  double sy = std::sin(std::numbers::pi * x[1]);
  double p2 = std::numbers::pi * std::numbers::pi;
  return p2 / 16.0 / (sx * sx) / (sy * sy);
}

bool sublevel_member(const Body& body, const Vec& x, double M, const QuadratureConfig& cfg) {
  if (!(M > 0)) throw Error("sublevel_member: M must be positive");
  if (!contains(body, x)) return false;
  KernelValue kv = kernel(body, x, cfg);
  if (std::abs(kv.value - M) <= kv.error)
    throw IndeterminateAtTolerance("sublevel_member: error band straddles M");
  return kv.value < M;
}

namespace {

// sup{t >= 0 : x + t*dir interior}.
double line_extent(const Body& body, const Vec& x, const Vec& dir) {
  switch (body.kind) {
    case BodyKind::box: {
      double t = 1e300;
      for (int i = 0; i < body.n; ++i) {
        if (dir[i] > 0) t = std::min(t, (body.hi[i] - x[i]) / dir[i]);
        if (dir[i] < 0) t = std::min(t, (body.lo[i] - x[i]) / dir[i]);
      }
      return t;
    }
    case BodyKind::simplex:
    case BodyKind::polytope: {
      double t = 1e300;
      for (const Facet& f : body.facets) {
        double nd = dot(f.normal, dir);
        if (nd > 0) t = std::min(t, (f.offset - dot(f.normal, x)) / nd);
      }
      return t;
    }
    case BodyKind::ellipsoid: {
      Mat ai = inverse(body.shape);
      Vec u = ai * (x - body.center);
      Vec w = ai * dir;
      double a = dot(w, w), b = 2.0 * dot(u, w), c = dot(u, u) - 1.0;
      double disc = b * b - 4 * a * c;
      if (disc <= 0) return 0;
      return (-b + std::sqrt(disc)) / (2 * a);
    }
  }
  throw Error("line_extent: unreachable");
}

}  // namespace

std::pair<Vec, double> kernel_min(const Body& body, const QuadratureConfig& cfg) {
  KernelEvaluator eval(body, cfg);
  Vec x = centroid(body);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double margin = std::max(2.0 * kTol.near_boundary_gap, 1e-3 * diameter(body));
  auto logk = [&](const Vec& p) { return std::log(eval.at(p).value); };
  for (int round = 0; round < 60; ++round) {
    double moved = 0;
    for (int axis = 0; axis < body.n; ++axis) {
      Vec e(body.n);
      e[axis] = 1.0;
      double tp = line_extent(body, x, e) - margin;
      double tm = -(line_extent(body, x, -1.0 * e) - margin);
      if (tp <= tm) continue;
      double a = tm, b = tp;
      double c = b - golden * (b - a);
      double d = a + golden * (b - a);
      auto at = [&](double t) {
        Vec p = x;
        p[axis] += t;
        return logk(p);
      };
      double fc = at(c), fd = at(d);
      while (b - a > kTol.kernel_min_step) {
        if (fc < fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - golden * (b - a);
          fc = at(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + golden * (b - a);
          fd = at(d);
        }
      }
      double t = 0.5 * (a + b);
      x[axis] += t;
      moved = std::max(moved, std::abs(t));
    }
    if (moved < kTol.kernel_min_step) break;
  }
  return {x, eval.at(x).value};
}

std::vector<Vec> sublevel_boundary(const Body& body, double M, const std::vector<Direction>& rays,
                                   const QuadratureConfig& cfg) {
  auto [c, kmin] = kernel_min(body, cfg);
  if (!(M > kmin)) throw MBelowMinimum("sublevel_boundary: M at or below the kernel minimum");
  KernelEvaluator eval(body, cfg);
  std::vector<Vec> out;
  double guard = std::max(kTol.near_boundary_gap, 1e-3 * diameter(body));
  for (const Direction& ray : rays) {
    double thi = line_extent(body, c, ray.v) - guard;
    if (thi <= 0) throw Error("sublevel_boundary: no room along ray");
    auto kval = [&](double t) { return eval.at(c + t * ray.v).value; };
    if (kval(thi) < M)
      throw Error("sublevel_boundary: level set extends past the evaluable region");
    double lo = 0, hi = thi;
    while (hi - lo > kTol.sublevel_radial) {
      double mid = 0.5 * (lo + hi);
      if (kval(mid) < M)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back(c + 0.5 * (lo + hi) * ray.v);
  }
  return out;
}

}  // namespace floatberg
