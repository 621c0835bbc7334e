// The affine invariant theta_D = l_D / u_D, the Theorem-1 sandwich with its
// dimensional constants, and the strongly-convex limit checks.
#pragma once

#include <cstdint>
#include <vector>

#include "floatberg/bergman.hpp"
#include "floatberg/body.hpp"

namespace floatberg {

struct DimensionalConstants {
  int n = 0;
  double l_n = 0;          // 4^-(n+1)
  double u_n = 0;          // n! n^2n omega_n^2 / pi^n
  double a_n = 0;          // n! 2^(n+1) / (4 pi)^n * (omega_{n-1}/(n+1))^2
  double theta_lower = 0;  // l_n / u_n
};

DimensionalConstants constants(int n);

struct ThetaRow {
  double delta = 0;
  double L = 0;  // min over boundary samples of delta^2 K
  double U = 0;  // max
  int flagged = 0;
  int samples = 0;
  // Running liminf/limsup estimate over the observed tail {delta' <= delta}:
  // inf of L over the tail divided by sup of U over it.
  double tail_theta = 0;
};

struct ThetaReport {
  std::vector<ThetaRow> rows;  // deltas descending
  double l_hat = 0, u_hat = 0;
  double alpha_l = 0, alpha_u = 0;
  double l_raw = 0, u_raw = 0;  // values at the smallest delta
  double theta_hat = 0, theta_raw = 0;
};

ThetaReport theta_estimate(const Body& body, const std::vector<double>& deltas,
                           const std::vector<Direction>& directions,
                           const QuadratureConfig& cfg);

struct SandwichReport {
  double delta = 0;
  double L = 0, U = 0;
  double l_n = 0, u_n = 0;
  bool extrema_ok = false;
  std::int64_t checked = 0;
  std::int64_t viol_lower = 0;  // K below l_n/delta^2 yet outside D_delta
  std::int64_t viol_upper = 0;  // member of D_delta yet K above u_n/delta^2
  std::int64_t indeterminate = 0;
  std::int64_t skipped_near_boundary = 0;
  double margin_lower = 0;  // L - l_n
  double margin_upper = 0;  // u_n - U
  bool ok() const { return extrema_ok && viol_lower == 0 && viol_upper == 0; }
};

SandwichReport sandwich_check(const Body& body, double delta,
                              const std::vector<Direction>& directions,
                              const QuadratureConfig& cfg, std::int64_t samples,
                              std::uint64_t seed);

struct BlockiReport {
  double delta = 0;
  double min_d2k = 0;
  double bound = 0;  // 4^-(n+1)
  double worst_band = 0;
  bool ok = false;
};

BlockiReport blocki_consequence_check(const Body& body, double delta,
                                      const std::vector<Direction>& directions,
                                      const QuadratureConfig& cfg);

struct NazarovReport {
  double kernel0 = 0;
  double bound = 0;  // n! vol(E°) / (pi^n vol(E))
  double ratio = 0;
  double band = 0;
  bool ok = false;
};

NazarovReport nazarov_check(const Body& body, const QuadratureConfig& cfg);

struct SantaloReport {
  double product = 0;
  double bound = 0;  // omega_n^2
  bool ok = false;
};

SantaloReport santalo_check(const Body& body);

struct LimitRow {
  double parameter = 0;
  double value = 0;
  double target = 0;
  double gap = 0;  // value/target - 1
};

struct ScweReport {
  std::vector<LimitRow> rows;  // deltas descending
  double curvature = 0;
  bool trend_ok = false;  // |gap| non-increasing
};

// Schuett-Werner width asymptotics Delta^{n+1}/delta^2 at the boundary point
// of an ellipsoid (n=2) with outward normal N.
ScweReport scwe_limit_check(const Body& body, const Direction& normal,
                            const std::vector<double>& deltas);

struct HormanderReport {
  std::vector<LimitRow> rows;  // distances descending
  double curvature = 0;
  bool trend_ok = false;
};

HormanderReport hormander_limit_check(const Body& body, const Direction& normal,
                                      const std::vector<double>& dists,
                                      const QuadratureConfig& cfg);

struct AffineReport {
  double kernel_law_rel_err = 0;
  double kernel_tol = 0;
  double float_gap = 0;
  double float_tol = 0;
  bool ok() const { return kernel_law_rel_err <= kernel_tol && float_gap <= float_tol; }
};

AffineReport affine_invariance_check(const Body& body, const Mat& A, const Vec& b, double delta,
                                     const std::vector<Direction>& directions,
                                     const QuadratureConfig& cfg);

}  // namespace floatberg
