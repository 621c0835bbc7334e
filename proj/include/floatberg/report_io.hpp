// CSV emitters (full-precision scientific notation) and the SVG figure
// writer for 2D bodies and boundary polylines.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "floatberg/bergman.hpp"
#include "floatberg/body.hpp"
#include "floatberg/floating_body.hpp"
#include "floatberg/invariants.hpp"

namespace floatberg {

std::string fmt_full(double x);  // %.17e

void write_kernel_csv(std::ostream& os, const std::vector<KernelValue>& values);
void write_floatbody_csv(std::ostream& os, const FloatingBodyApprox& fba);
void write_theta_csv(std::ostream& os, const ThetaReport& report);
void write_sandwich_csv(std::ostream& os, const std::vector<SandwichReport>& reports);
void write_limits_csv(std::ostream& os, const std::string& name,
                      const std::vector<LimitRow>& rows);

// Body outline plus the floating-body boundary polyline (n=2 only).
void write_figure_svg(std::ostream& os, const Body& body, const FloatingBodyApprox& fba);

}  // namespace floatberg
