// Gauss-Legendre rules, adaptive 1D integration, Chebyshev interpolants.
#pragma once

#include <functional>
#include <vector>

namespace floatberg {

// Nodes/weights of the m-point Gauss-Legendre rule on [-1,1]; cached.
const std::vector<double>& gl_nodes(int m);
const std::vector<double>& gl_weights(int m);

double gl_integrate(const std::function<double(double)>& f, double a, double b, int m);

// Adaptive bisection driven by the difference between a whole-interval rule
// and its two halves. Smooth integrands only.
double adaptive_1d(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor = 0.0, int max_depth = 48);

struct ChebPanel {
  double a = 0, b = 0;
  std::vector<double> coef;
  double eval(double x) const;
};

// Piecewise Chebyshev interpolant with accuracy-driven panel splitting.
struct PiecewiseCheb {
  std::vector<ChebPanel> panels;  // ordered by interval
  double lo = 0, hi = 0;
  double eval(double x) const;
  bool empty() const { return panels.empty(); }
  static PiecewiseCheb fit(const std::function<double(double)>& f, double a, double b,
                           int degree, double abs_tol);
};

// Order-insensitive summation (destroys its argument).
double pairwise_sum(std::vector<double>& xs);

}  // namespace floatberg
