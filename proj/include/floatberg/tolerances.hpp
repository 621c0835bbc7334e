// Central record of the numeric tolerances used across the library, so that
// verification runs are reproducible from one place.
#pragma once

namespace floatberg {

struct Tolerances {
  double interior_margin = 1e-12;       // strict-interior containment slack
  double unit_norm = 1e-12;             // |norm(v) - 1| for directions
  double polytope_consistency = 1e-10;  // vertex/half-space cross check
  double symmetry = 1e-10;              // origin-symmetry check for polar()
  double cut_residual_rel = 1e-12;      // cap-volume residual, relative to vol
  int bisect_max_iter = 200;
  double section_quad_rel = 1e-12;      // ellipsoid section quadrature
  double mvee_gap = 1e-7;               // (1+eps) duality gap
  double mvee_slack = 1e-7;             // relative containment slack
  double barycenter_on_plane = 1e-10;
  double radial_bisect = 1e-9;          // radial_gap boundary bisection
  double sublevel_radial = 1e-8;        // sublevel boundary tracing
  double kernel_min_step = 1e-9;        // descent restart threshold
  double near_boundary_gap = 2e-3;      // sampling guard near the boundary
};

inline constexpr Tolerances kTol{};

}  // namespace floatberg
