// Bergman kernel of the tube R^n + iD on the diagonal at purely imaginary
// points: K_D(x) = (2 pi)^-n \int e^{-2 x.t} / J_D(t) dt, plus sublevel-set
// membership and boundary tracing.
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "floatberg/body.hpp"

namespace floatberg {

class LogLaplace;

struct QuadratureConfig {
  double eps_rel = 1e-8;     // relative error target
  double eps_trunc = 1e-14;  // truncation threshold, relative to the peak
  int max_subdiv = 40;       // refinement rounds before giving up
  int base_nodes = 32;       // Gauss-Legendre nodes per panel axis

  void validate() const;
};

struct KernelValue {
  Vec x;
  double value = 0;
  double error = 0;         // absolute error estimate
  double trunc_radius = 0;  // half-width of the t-space truncation box
};

// Reusable evaluator: holds the Laplace-transform machinery (including the
// ellipsoid radial-profile cache) so batches of points share the setup cost.
// Safe for concurrent at() calls.
class KernelEvaluator {
 public:
  KernelEvaluator(const Body& body, const QuadratureConfig& cfg = {});
  KernelValue at(const Vec& x) const;
  const Body& body() const { return body_; }
  const QuadratureConfig& config() const { return cfg_; }

 private:
  Body body_;
  QuadratureConfig cfg_;
  std::shared_ptr<const LogLaplace> logj_;  // unset for boxes with n >= 2
};

KernelValue kernel(const Body& body, const Vec& x, const QuadratureConfig& cfg = {});

// Closed form pi^2/16 csc^2(pi x) csc^2(pi y) on the open unit square.
double kernel_square_reference(const Vec& x);

bool sublevel_member(const Body& body, const Vec& x, double M, const QuadratureConfig& cfg = {});

std::pair<Vec, double> kernel_min(const Body& body, const QuadratureConfig& cfg = {});

std::vector<Vec> sublevel_boundary(const Body& body, double M,
                                   const std::vector<Direction>& rays,
                                   const QuadratureConfig& cfg = {});

}  // namespace floatberg
