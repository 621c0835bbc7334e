#include "floatberg/floating_body.hpp"

#include <algorithm>
#include <cmath>

#include "floatberg/errors.hpp"
#include "floatberg/parallel.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

FloatingBodyApprox build_floating_body(const Body& body, double delta,
                                       const std::vector<Direction>& directions) {
  double vol = volume(body);
  if (!(delta > 0) || delta > 0.5 * vol)
    throw DeltaOutOfRange("floating body: delta outside (0, vol/2]");
  if (directions.empty()) throw Error("floating body: no directions");
  FloatingBodyApprox fba;
  fba.body = body;
  fba.delta = delta;
  fba.cuts.resize(directions.size());
  fba.barycenters.resize(directions.size());
  parallel_for(directions.size(), [&](std::size_t k) {
    double r = cut_depth(body, directions[k], delta);
    fba.cuts[k] = CutSpec{directions[k], r};
    fba.barycenters[k] = section_barycenter(body, fba.cuts[k]);
  });
  // Probe the barycenter centroid; if even that fails every cut, the
  // approximation is empty at this delta.
  Vec probe(body.n);
  for (const Vec& b : fba.barycenters) probe = probe + b;
  probe = (1.0 / fba.barycenters.size()) * probe;
  if (!member(fba, probe))
    throw EmptyFloatingBody("floating body: no point satisfies all cuts");
  return fba;
}

bool member(const FloatingBodyApprox& fba, const Vec& x) {
  for (const CutSpec& cut : fba.cuts)
    if (!(dot(x, cut.v.v) < cut.r)) return false;
  return true;
}

bool reference_member_square(const Vec& x, double delta) {
  double u = x[0], v = x[1];
  double m = std::min(std::min(u * v, (1 - u) * v), std::min(u * (1 - v), (1 - u) * (1 - v)));
  return m > 0.5 * delta;
}

bool reference_member_triangle(const Vec& x, double delta) {
  double u = x[0], v = x[1];
  double w = 1 - u - v;
  double m = std::min(std::min(u * v, w * v), w * u);
  return m > 0.5 * delta;
}

std::vector<Vec> boundary_points(const Body& body, double delta,
                                 const std::vector<Direction>& directions) {
  return build_floating_body(body, delta, directions).barycenters;
}

namespace {

// Boundary radius along a ray: the predicate must be true at t=0 and convex
// along the ray; bisection to the configured radial tolerance.
double boundary_radius(const MembershipFn& inside, const Vec& center, const Vec& ray,
                       double t_max) {
  double lo = 0, hi = t_max;
  if (inside(center + t_max * ray)) return t_max;
  while (hi - lo > kTol.radial_bisect) {
    double mid = 0.5 * (lo + hi);
    if (inside(center + mid * ray))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double radial_gap(const FloatingBodyApprox& fba, const MembershipFn& reference,
                  const Vec& center, const std::vector<Direction>& rays) {
  if (!member(fba, center) || !reference(center))
    throw Error("radial_gap: center not interior to both sets");
  double t_max = diameter(fba.body);
  std::vector<double> gaps(rays.size());
  parallel_for(rays.size(), [&](std::size_t i) {
    const Vec& ray = rays[i].v;
    double ra = boundary_radius([&](const Vec& p) { return member(fba, p); }, center, ray, t_max);
    double rb = boundary_radius(reference, center, ray, t_max);
    gaps[i] = std::abs(ra - rb);
  });
  return *std::max_element(gaps.begin(), gaps.end());
}

McResult wet_volume(const Body& body, double delta, const FloatingBodyApprox& fba,
                    std::int64_t samples, std::uint64_t seed) {
  if (std::abs(fba.delta - delta) > 1e-15 * (1 + delta))
    throw Error("wet_volume: fba was built for a different delta");
  Vec lo, hi;
  bounding_box(body, lo, hi);
  double boxvol = 1;
  for (int i = 0; i < body.n; ++i) boxvol *= hi[i] - lo[i];
  CounterRng rng{seed};
  std::int64_t hits = 0;
  Vec x(body.n);
  for (std::int64_t k = 0; k < samples; ++k) {
    for (int i = 0; i < body.n; ++i) {
      double u = rng.uniform(static_cast<std::uint64_t>(k) * body.n + i);
      x[i] = lo[i] + (hi[i] - lo[i]) * u;
    }
    if (contains(body, x) && !member(fba, x)) ++hits;
  }
  double p = static_cast<double>(hits) / samples;
  McResult r;
  r.estimate = boxvol * p;
  r.stderr_est = boxvol * std::sqrt(std::max(0.0, p * (1 - p)) / samples);
  return r;
}

}  // namespace floatberg
