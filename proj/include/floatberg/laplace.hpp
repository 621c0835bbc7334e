// J_D(t) = integral over D of e^{-2 x.t}, evaluated in log form so that the
// kernel integrand never overflows. Boxes factor per axis, simplices use the
// exponential divided-difference closed form, polytopes triangulate, and
// ellipsoids reduce to a 1D radial profile.
#pragma once

#include <vector>

#include "floatberg/body.hpp"
#include "floatberg/quadrature.hpp"

namespace floatberg {

// Divided difference of exp over k (2..4) nodes, which must be sorted in
// descending order with nodes[0] == 0 (pre-shifted by the maximum). Clustered
// nodes are handled by a symmetric-function series, separated ones by the
// Newton recursion; the result is strictly positive and never underflows.
double dd_exp_shifted(const double* nodes, int k);

class LogLaplace {
 public:
  // s_max_hint sizes the ellipsoid radial-profile cache; pass 0 to always
  // evaluate the profile by direct quadrature.
  explicit LogLaplace(const Body& body, double s_max_hint = 0.0);

  double operator()(const Vec& t) const;
  int dim() const { return n_; }

 private:
  struct Simp {
    std::array<Vec, 4> v;
    int count = 0;
    double log_scale = 0;  // log(n! * vol)
  };

  int n_ = 0;
  BodyKind kind_;
  Vec lo_, hi_;              // box
  std::vector<Simp> simps_;  // simplex / triangulated polytope
  Vec center_;               // ellipsoid
  Mat shape_t_;
  double log_det_ = 0;
  PiecewiseCheb profile_;  // log j_n(s) - 2s on [0, s_max]
  double profile_smax_ = 0;

  double log_simplex(const Simp& s, const Vec& t) const;
};

// log of the radial ball factor j_n(s) = \int_{B_n} e^{-2 s u_1} du.
double log_ball_laplace(int n, double s);

double laplace(const Body& body, const Vec& t);

}  // namespace floatberg
