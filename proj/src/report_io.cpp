#include "floatberg/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "floatberg/errors.hpp"

namespace floatberg {

std::string fmt_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

namespace {

std::string fmt_vec(const Vec& v) {
  std::string s;
  for (int i = 0; i < v.n; ++i) {
    if (i) s += ';';
    s += fmt_full(v[i]);
  }
  return s;
}

}  // namespace

void write_kernel_csv(std::ostream& os, const std::vector<KernelValue>& values) {
  os << "x,K,err,radius\n";
  for (const KernelValue& kv : values)
    os << fmt_vec(kv.x) << ',' << fmt_full(kv.value) << ',' << fmt_full(kv.error) << ','
       << fmt_full(kv.trunc_radius) << '\n';
}

void write_floatbody_csv(std::ostream& os, const FloatingBodyApprox& fba) {
  os << "v,r,b\n";
  for (std::size_t i = 0; i < fba.cuts.size(); ++i)
    os << fmt_vec(fba.cuts[i].v.v) << ',' << fmt_full(fba.cuts[i].r) << ','
       << fmt_vec(fba.barycenters[i]) << '\n';
}

void write_theta_csv(std::ostream& os, const ThetaReport& report) {
  os << "delta,L,U,flagged,samples,tail_theta\n";
  for (const ThetaRow& r : report.rows)
    os << fmt_full(r.delta) << ',' << fmt_full(r.L) << ',' << fmt_full(r.U) << ',' << r.flagged
       << ',' << r.samples << ',' << fmt_full(r.tail_theta) << '\n';
  os << "summary,l_hat," << fmt_full(report.l_hat) << ",alpha_l," << fmt_full(report.alpha_l)
     << '\n';
  os << "summary,u_hat," << fmt_full(report.u_hat) << ",alpha_u," << fmt_full(report.alpha_u)
     << '\n';
  os << "summary,l_raw," << fmt_full(report.l_raw) << ",u_raw," << fmt_full(report.u_raw) << '\n';
  os << "summary,theta_hat," << fmt_full(report.theta_hat) << ",theta_raw,"
     << fmt_full(report.theta_raw) << '\n';
}

void write_sandwich_csv(std::ostream& os, const std::vector<SandwichReport>& reports) {
  os << "delta,L,U,violations_lower,violations_upper,indeterminate,checked,skipped,"
        "worst_margin\n";
  for (const SandwichReport& r : reports)
    os << fmt_full(r.delta) << ',' << fmt_full(r.L) << ',' << fmt_full(r.U) << ',' << r.viol_lower
       << ',' << r.viol_upper << ',' << r.indeterminate << ',' << r.checked << ','
       << r.skipped_near_boundary << ',' << fmt_full(std::min(r.margin_lower, r.margin_upper))
       << '\n';
}

void write_limits_csv(std::ostream& os, const std::string& name,
                      const std::vector<LimitRow>& rows) {
  os << "check,parameter,value,target,gap\n";
  for (const LimitRow& r : rows)
    os << name << ',' << fmt_full(r.parameter) << ',' << fmt_full(r.value) << ','
       << fmt_full(r.target) << ',' << fmt_full(r.gap) << '\n';
}

void write_figure_svg(std::ostream& os, const Body& body, const FloatingBodyApprox& fba) {
  if (body.n != 2) throw Error("figure: SVG output is 2D only");
  Vec lo, hi;
  bounding_box(body, lo, hi);
  double w = hi[0] - lo[0], h = hi[1] - lo[1];
  double pad = 0.08 * std::max(w, h);
  double size = 640.0;
  double sc = size / std::max(w + 2 * pad, h + 2 * pad);
  auto X = [&](double x) { return (x - lo[0] + pad) * sc; };
  auto Y = [&](double y) { return size - (y - lo[1] + pad) * sc; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";

  // Body outline.
  os << "<path d=\"";
  if (body.kind == BodyKind::ellipsoid) {
    const int steps = 256;
    for (int k = 0; k <= steps; ++k) {
      double th = 2 * std::numbers::pi * k / steps;
      Vec u{std::cos(th), std::sin(th)};
      Vec p = body.center + body.shape * u;
      os << (k == 0 ? 'M' : 'L') << X(p[0]) << ' ' << Y(p[1]);
    }
  } else {
    Body p = as_polytope(body);
    for (std::size_t k = 0; k < p.vertices.size(); ++k)
      os << (k == 0 ? 'M' : 'L') << X(p.vertices[k][0]) << ' ' << Y(p.vertices[k][1]);
    os << 'Z';
  }
  os << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

  // Floating-body boundary as a polyline through the cut barycenters, ordered
  // by cut direction angle.
  std::vector<std::size_t> order(fba.barycenters.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Vec& va = fba.cuts[a].v.v;
    const Vec& vb = fba.cuts[b].v.v;
    return std::atan2(va[1], va[0]) < std::atan2(vb[1], vb[0]);
  });
  os << "<path d=\"";
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vec& p = fba.barycenters[order[k]];
    os << (k == 0 ? 'M' : 'L') << X(p[0]) << ' ' << Y(p[1]);
  }
  os << "Z\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.2\"/>\n";
  os << "</svg>\n";
}

}  // namespace floatberg
