// Minimum-volume enclosing ellipsoid (Khachiyan barycentric-weight iteration
// with away steps) and the Loewner-John 1/n shrinking.
#pragma once

#include <vector>

#include "floatberg/body.hpp"

namespace floatberg {

Body mvee(const std::vector<Vec>& points);
Body john_inner(const Body& ellipsoid, int n);

// Largest Mahalanobis radius of the points w.r.t. the ellipsoid (== 1 when a
// point lies exactly on the boundary); used by tests as the containment
// certificate.
double mvee_max_radius(const Body& ellipsoid, const std::vector<Vec>& points);

}  // namespace floatberg
