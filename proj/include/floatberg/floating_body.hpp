// Outer polyhedral approximations of the convex floating body D_delta: the
// set is represented only through its cuts; membership is the intersection of
// the open half-spaces, and the cut-section barycenters sample its boundary.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "floatberg/body.hpp"
#include "floatberg/oracle.hpp"

namespace floatberg {

struct FloatingBodyApprox {
  Body body;
  double delta = 0;
  std::vector<CutSpec> cuts;
  std::vector<Vec> barycenters;
};

FloatingBodyApprox build_floating_body(const Body& body, double delta,
                                       const std::vector<Direction>& directions);

bool member(const FloatingBodyApprox& fba, const Vec& x);

// Closed-form memberships for the unit square and the standard triangle.
bool reference_member_square(const Vec& x, double delta);
bool reference_member_triangle(const Vec& x, double delta);

std::vector<Vec> boundary_points(const Body& body, double delta,
                                 const std::vector<Direction>& directions);

using MembershipFn = std::function<bool(const Vec&)>;

// Max over rays of the boundary-radius difference between the approximation
// and a reference membership, boundaries located by bisection.
double radial_gap(const FloatingBodyApprox& fba, const MembershipFn& reference,
                  const Vec& center, const std::vector<Direction>& rays);

// Monte Carlo estimate of vol(body \ D_delta).
McResult wet_volume(const Body& body, double delta, const FloatingBodyApprox& fba,
                    std::int64_t samples, std::uint64_t seed);

}  // namespace floatberg
