#include "floatberg/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floatberg/errors.hpp"
#include "floatberg/floating_body.hpp"
#include "floatberg/oracle.hpp"
#include "floatberg/parallel.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

DimensionalConstants constants(int n) {
  if (n < 1 || n > 3) throw Error("constants: 1 <= n <= 3");
  DimensionalConstants c;
  c.n = n;
  c.l_n = std::pow(4.0, -(n + 1));
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  double wn = unit_ball_volume(n);
  double wnm1 = n >= 2 ? unit_ball_volume(n - 1) : 2.0;  // omega_0 = 2 endpoints? not used for n=1
  c.u_n = fact * std::pow(static_cast<double>(n), 2 * n) * wn * wn / std::pow(std::numbers::pi, n);
  if (n >= 2) {
    double ratio = wnm1 / (n + 1);
    c.a_n = fact * std::pow(2.0, n + 1) / std::pow(4.0 * std::numbers::pi, n) * ratio * ratio;
  } else {
    double ratio = 1.0 / 2.0;  // omega_0 = 1 (point measure), n=1 limit constant
    c.a_n = 1.0 * 4.0 / (4.0 * std::numbers::pi) * ratio * ratio;
  }
  c.theta_lower = c.l_n / c.u_n;
  return c;
}

namespace {

struct PointEval {
  double d2k = 0;
  double band = 0;  // delta^2 * error
  bool flagged = false;
};

std::vector<PointEval> eval_boundary(const KernelEvaluator& eval, const std::vector<Vec>& pts,
                                     double delta) {
  std::vector<PointEval> out(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    try {
      KernelValue kv = eval.at(pts[i]);
      out[i].d2k = delta * delta * kv.value;
      out[i].band = delta * delta * kv.error;
    } catch (const QuadratureNotConverged&) {
      out[i].flagged = true;
    } catch (const PointOutsideBody&) {
      out[i].flagged = true;
    }
  });
  return out;
}

struct PowerFit {
  double limit = 0;
  double alpha = 0;
};

// Least squares of y = a + c x^alpha on three points, alpha in [0.5, 2].
PowerFit fit_power(const double* x, const double* y) {
  auto sse = [&](double alpha, double& a_out) {
    double s1 = 3, sv = 0, svv = 0, sy = 0, svy = 0;
    for (int i = 0; i < 3; ++i) {
      double v = std::pow(x[i], alpha);
      sv += v;
      svv += v * v;
      sy += y[i];
      svy += v * y[i];
    }
    double den = s1 * svv - sv * sv;
    double a = (sy * svv - sv * svy) / den;
    double c = (s1 * svy - sv * sy) / den;
    double e = 0;
    for (int i = 0; i < 3; ++i) {
      double r = y[i] - a - c * std::pow(x[i], alpha);
      e += r * r;
    }
    a_out = a;
    return e;
  };
  double best_alpha = 0.5, best_a = 0, best_e = 1e300;
  for (int k = 0; k <= 60; ++k) {
    double alpha = 0.5 + 1.5 * k / 60.0;
    double a;
    double e = sse(alpha, a);
    if (e < best_e) {
      best_e = e;
      best_alpha = alpha;
      best_a = a;
    }
  }
  // Golden refinement around the grid winner.
  double lo = std::max(0.5, best_alpha - 0.05), hi = std::min(2.0, best_alpha + 0.05);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = hi - golden * (hi - lo), c2 = lo + golden * (hi - lo);
  double a1, a2;
  double f1 = sse(c1, a1), f2 = sse(c2, a2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - golden * (hi - lo);
      f1 = sse(c1, a1);
    } else {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + golden * (hi - lo);
      f2 = sse(c2, a2);
    }
  }
  PowerFit pf;
  pf.alpha = 0.5 * (lo + hi);
  sse(pf.alpha, pf.limit);
  return pf;
}

}  // namespace

ThetaReport theta_estimate(const Body& body, const std::vector<double>& deltas,
                           const std::vector<Direction>& directions,
                           const QuadratureConfig& cfg) {
  if (deltas.size() < 1) throw Error("theta_estimate: empty delta grid");
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1])) throw Error("theta_estimate: deltas must be descending");
  KernelEvaluator eval(body, cfg);
  ThetaReport rep;
  for (double delta : deltas) {
    std::vector<Vec> pts = boundary_points(body, delta, directions);
    std::vector<PointEval> evs = eval_boundary(eval, pts, delta);
    ThetaRow row;
    row.delta = delta;
    row.samples = static_cast<int>(evs.size());
    double lo = 1e300, hi = -1e300;
    for (const PointEval& e : evs) {
      if (e.flagged) {
        ++row.flagged;
        continue;
      }
      lo = std::min(lo, e.d2k);
      hi = std::max(hi, e.d2k);
    }
    if (row.flagged * 100 > row.samples)
      throw Error("theta_estimate: more than 1% of kernel evaluations failed");
    row.L = lo;
    row.U = hi;
    rep.rows.push_back(row);
  }
  // Running liminf/limsup over the observed tail.
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t j = k; j < rep.rows.size(); ++j) {
      lo = std::min(lo, rep.rows[j].L);
      hi = std::max(hi, rep.rows[j].U);
    }
    rep.rows[k].tail_theta = lo / hi;
  }
  const ThetaRow& last = rep.rows.back();
  rep.l_raw = last.L;
  rep.u_raw = last.U;
  rep.theta_raw = last.L / last.U;
  if (rep.rows.size() >= 3) {
    std::size_t m = rep.rows.size();
    double xs[3], yl[3], yu[3];
    for (int i = 0; i < 3; ++i) {
      const ThetaRow& r = rep.rows[m - 3 + i];
      xs[i] = r.delta;
      yl[i] = r.L;
      yu[i] = r.U;
    }
    PowerFit fl = fit_power(xs, yl);
    PowerFit fu = fit_power(xs, yu);
    rep.l_hat = fl.limit;
    rep.alpha_l = fl.alpha;
    rep.u_hat = fu.limit;
    rep.alpha_u = fu.alpha;
  } else {
    rep.l_hat = rep.l_raw;
    rep.u_hat = rep.u_raw;
    rep.alpha_l = rep.alpha_u = 0;
  }
  rep.theta_hat = rep.l_hat / rep.u_hat;
  return rep;
}

SandwichReport sandwich_check(const Body& body, double delta,
                              const std::vector<Direction>& directions,
                              const QuadratureConfig& cfg, std::int64_t samples,
                              std::uint64_t seed) {
  DimensionalConstants dc = constants(body.n);
  SandwichReport rep;
  rep.delta = delta;
  rep.l_n = dc.l_n;
  rep.u_n = dc.u_n;

  FloatingBodyApprox fba = build_floating_body(body, delta, directions);
  KernelEvaluator eval(body, cfg);
  std::vector<PointEval> evs = eval_boundary(eval, fba.barycenters, delta);
  double lo = 1e300, hi = -1e300;
  for (const PointEval& e : evs) {
    if (e.flagged) continue;
    lo = std::min(lo, e.d2k);
    hi = std::max(hi, e.d2k);
  }
  rep.L = lo;
  rep.U = hi;
  rep.margin_lower = lo - dc.l_n;
  rep.margin_upper = dc.u_n - hi;
  rep.extrema_ok = rep.margin_lower >= 0 && rep.margin_upper >= 0;

  // Sampled containment checks, skipping the near-boundary collar where the
  // quadrature is not expected to converge.
  Vec blo, bhi;
  bounding_box(body, blo, bhi);
  CounterRng rng{seed};
  std::vector<Vec> pts;
  std::uint64_t counter = 0;
  std::int64_t attempts_cap = samples * 1000;
  while (static_cast<std::int64_t>(pts.size()) < samples && attempts_cap-- > 0) {
    Vec x(body.n);
    for (int i = 0; i < body.n; ++i)
      x[i] = blo[i] + (bhi[i] - blo[i]) * rng.uniform(counter++);
    if (!contains(body, x)) continue;
    if (boundary_gap(body, x) < kTol.near_boundary_gap) {
      ++rep.skipped_near_boundary;
      continue;
    }
    pts.push_back(x);
  }
  double lthr = dc.l_n / (delta * delta);
  double uthr = dc.u_n / (delta * delta);
  std::vector<int> verdict(pts.size(), 0);  // 0 ok, 1 lower viol, 2 upper viol, 3 indeterminate
  parallel_for(pts.size(), [&](std::size_t i) {
    bool inside = member(fba, pts[i]);
    try {
      KernelValue kv = eval.at(pts[i]);
      if (kv.value + kv.error < lthr && !inside) verdict[i] = 1;
      if (inside && kv.value - kv.error > uthr) verdict[i] = 2;
    } catch (const QuadratureNotConverged&) {
      verdict[i] = 3;
    }
  });
  rep.checked = static_cast<std::int64_t>(pts.size());
  for (int v : verdict) {
    if (v == 1) ++rep.viol_lower;
    if (v == 2) ++rep.viol_upper;
    if (v == 3) ++rep.indeterminate;
  }
  return rep;
}

BlockiReport blocki_consequence_check(const Body& body, double delta,
                                      const std::vector<Direction>& directions,
                                      const QuadratureConfig& cfg) {
  BlockiReport rep;
  rep.delta = delta;
  rep.bound = std::pow(4.0, -(body.n + 1));
  std::vector<Vec> pts = boundary_points(body, delta, directions);
  KernelEvaluator eval(body, cfg);
  std::vector<PointEval> evs = eval_boundary(eval, pts, delta);
  double lo = 1e300;
  bool ok = true;
  double worst_band = 0;
  for (const PointEval& e : evs) {
    if (e.flagged) continue;
    lo = std::min(lo, e.d2k);
    worst_band = std::max(worst_band, e.band);
    if (e.d2k + e.band < rep.bound) ok = false;
  }
  rep.min_d2k = lo;
  rep.worst_band = worst_band;
  rep.ok = ok;
  return rep;
}

NazarovReport nazarov_check(const Body& body, const QuadratureConfig& cfg) {
  if (!is_origin_symmetric(body)) throw NotSymmetric("nazarov_check: body not origin-symmetric");
  NazarovReport rep;
  KernelValue kv = kernel(body, Vec(body.n), cfg);
  rep.kernel0 = kv.value;
  double fact = 1;
  for (int k = 2; k <= body.n; ++k) fact *= k;
  double vol = volume(body);
  double pvol = volume(polar(body));
  rep.bound = fact * pvol / (std::pow(std::numbers::pi, body.n) * vol);
  rep.ratio = kv.value / rep.bound;
  rep.band = kv.error / rep.bound;
  rep.ok = rep.ratio <= 1.0 + rep.band + 1e-12;
  return rep;
}

SantaloReport santalo_check(const Body& body) {
  SantaloReport rep;
  double wn = unit_ball_volume(body.n);
  rep.bound = wn * wn;
  rep.product = volume(body) * volume(polar(body));
  rep.ok = rep.product <= rep.bound * (1.0 + 1e-9);
  return rep;
}

namespace {

// Boundary point of an ellipsoid (n=2) with outward normal N, and the
// Gaussian curvature there.
void ellipse_boundary_point(const Body& body, const Vec& normal, Vec& x0, double& kappa) {
  if (body.kind != BodyKind::ellipsoid || body.n != 2)
    throw Error("limit check: requires a 2D ellipsoid");
  Vec u = normalized(transpose(body.shape) * normal);
  x0 = body.center + body.shape * u;
  Vec up{-u[1], u[0]};
  double tn = norm(body.shape * up);
  kappa = std::abs(det(body.shape)) / (tn * tn * tn);
}

}  // namespace

ScweReport scwe_limit_check(const Body& body, const Direction& normal,
                            const std::vector<double>& deltas) {
  Vec x0;
  double kappa;
  ellipse_boundary_point(body, normal.v, x0, kappa);
  int n = body.n;
  double wnm1 = unit_ball_volume(n - 1);
  double ratio = (n + 1) / wnm1;
  double target = std::pow(2.0, -(n + 1)) * ratio * ratio * kappa;
  ScweReport rep;
  rep.curvature = kappa;
  double h = support(body, normal);
  for (double d : deltas) {
    double r = cut_depth(body, normal, d);
    LimitRow row;
    row.parameter = d;
    row.value = std::pow(h - r, n + 1) / (d * d);
    row.target = target;
    row.gap = row.value / target - 1.0;
    rep.rows.push_back(row);
  }
  rep.trend_ok = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (std::abs(rep.rows[i].gap) > std::abs(rep.rows[i - 1].gap) + 1e-12) rep.trend_ok = false;
  return rep;
}

HormanderReport hormander_limit_check(const Body& body, const Direction& normal,
                                      const std::vector<double>& dists,
                                      const QuadratureConfig& cfg) {
  Vec x0;
  double kappa;
  ellipse_boundary_point(body, normal.v, x0, kappa);
  int n = body.n;
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  double target = fact / std::pow(4.0 * std::numbers::pi, n) * kappa;
  HormanderReport rep;
  rep.curvature = kappa;
  KernelEvaluator eval(body, cfg);
  for (double d : dists) {
    Vec x = x0 - d * normal.v;
    LimitRow row;
    row.parameter = d;
    row.target = target;
    try {
      KernelValue kv = eval.at(x);
      row.value = std::pow(d, n + 1) * kv.value;
      row.gap = row.value / target - 1.0;
    } catch (const QuadratureNotConverged& e) {
      row.value = std::pow(d, n + 1) * e.value_estimate;
      row.gap = row.value / target - 1.0;
    }
    rep.rows.push_back(row);
  }
  rep.trend_ok = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (std::abs(rep.rows[i].gap) > std::abs(rep.rows[i - 1].gap) + 1e-12) rep.trend_ok = false;
  return rep;
}

AffineReport affine_invariance_check(const Body& body, const Mat& A, const Vec& b, double delta,
                                     const std::vector<Direction>& directions,
                                     const QuadratureConfig& cfg) {
  double d = det(A);
  if (std::abs(d) <= 0) throw InvalidBody("affine_invariance_check: singular matrix");
  Body image = affine_image(body, A, b);
  AffineReport rep;

  // Kernel transformation law at interior samples with a comfortable gap.
  Vec blo, bhi;
  bounding_box(body, blo, bhi);
  CounterRng rng{20240901};
  std::vector<Vec> pts;
  std::uint64_t counter = 0;
  double need_gap = 0.05 * diameter(body);
  while (pts.size() < 12 && counter < 100000) {
    Vec x(body.n);
    for (int i = 0; i < body.n; ++i)
      x[i] = blo[i] + (bhi[i] - blo[i]) * rng.uniform(counter++);
    if (contains(body, x) && boundary_gap(body, x) >= need_gap) pts.push_back(x);
  }
  KernelEvaluator e1(body, cfg);
  KernelEvaluator e2(image, cfg);
  std::vector<double> errs(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) {
    double k1 = e1.at(pts[i]).value;
    double k2 = e2.at(A * pts[i] + b).value;
    errs[i] = std::abs(k2 * d * d - k1) / k1;
  });
  rep.kernel_law_rel_err = errs.empty() ? 1e300 : *std::max_element(errs.begin(), errs.end());
  rep.kernel_tol = 5.0 * cfg.eps_rel;

  // Floating-body equivariance: build the image's floating body at |det| delta
  // on the mapped direction grid and compare radially against the mapped set.
  std::vector<Direction> mapped;
  Mat AinvT = transpose(inverse(A));
  for (const Direction& dir : directions) mapped.emplace_back(normalized(AinvT * dir.v));
  FloatingBodyApprox f1 = build_floating_body(body, delta, directions);
  FloatingBodyApprox f2 = build_floating_body(image, std::abs(d) * delta, mapped);
  Mat Ainv = inverse(A);
  Vec center = A * centroid(body) + b;
  MembershipFn mapped_ref = [&](const Vec& p) { return member(f1, Ainv * (p - b)); };
  rep.float_gap = radial_gap(f2, mapped_ref, center, directions);
  rep.float_tol = 1e-5 * std::max(1.0, diameter(image));
  return rep;
}

}  // namespace floatberg
