// floatberg CLI: kernel evaluation, floating bodies, theta estimates,
// verification suites, and SVG figures for convex bodies in R^n (n <= 3).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "floatberg/bergman.hpp"
#include "floatberg/body_json.hpp"
#include "floatberg/directions.hpp"
#include "floatberg/errors.hpp"
#include "floatberg/floating_body.hpp"
#include "floatberg/invariants.hpp"
#include "floatberg/oracle.hpp"
#include "floatberg/parallel.hpp"
#include "floatberg/report_io.hpp"

namespace {

using namespace floatberg;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  std::string body_path;
  double tol = 1e-8;
  double trunc = 1e-14;
  int nodes = 32;
  int directions = 0;  // 0 -> per-dimension default
  std::string out;
};

QuadratureConfig make_cfg(const CommonOpts& o) {
  QuadratureConfig cfg;
  cfg.eps_rel = o.tol;
  cfg.eps_trunc = o.trunc;
  cfg.base_nodes = o.nodes;
  return cfg;
}

std::vector<double> parse_deltas(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw InvalidBody("field '--deltas' has a non-numeric entry: " + item);
    }
  }
  if (out.empty()) throw InvalidBody("field '--deltas' is empty");
  return out;
}

Vec parse_point(const std::string& s) {
  std::vector<double> xs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(std::stod(item));
  if (xs.empty() || xs.size() > 3) throw InvalidBody("field '--point' must have 1..3 coordinates");
  Vec v(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<int>(i)] = xs[i];
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InvalidBody("cannot open output file: " + path);
  return f;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    std::ofstream f = open_out(path);
    f << content;
  }
}

int run_kernel(const CommonOpts& o, const std::vector<std::string>& points, int grid) {
  Body body = body_from_file(o.body_path);
  QuadratureConfig cfg = make_cfg(o);
  std::vector<Vec> xs;
  for (const std::string& p : points) xs.push_back(parse_point(p));
  if (grid > 0) {
    if (body.n != 2) throw InvalidBody("field '--grid' requires a 2D body");
    Vec lo, hi;
    bounding_box(body, lo, hi);
    for (int i = 1; i <= grid; ++i)
      for (int j = 1; j <= grid; ++j) {
        Vec x{lo[0] + (hi[0] - lo[0]) * i / (grid + 1.0),
              lo[1] + (hi[1] - lo[1]) * j / (grid + 1.0)};
        if (contains(body, x)) xs.push_back(x);
      }
  }
  if (xs.empty()) throw InvalidBody("kernel: no evaluation points (use --point or --grid)");
  KernelEvaluator eval(body, cfg);
  std::vector<KernelValue> vals(xs.size());
  bool failed = false;
  parallel_for(xs.size(), [&](std::size_t i) { vals[i] = eval.at(xs[i]); });
  std::ostringstream os;
  write_kernel_csv(os, vals);
  emit(o.out, os.str());
  return failed ? kExitViolation : kExitOk;
}

int run_floatbody(const CommonOpts& o, double delta, const std::string& format) {
  Body body = body_from_file(o.body_path);
  int nd = o.directions > 0 ? o.directions : default_direction_count(body.n);
  FloatingBodyApprox fba = build_floating_body(body, delta, direction_grid(body.n, nd));
  std::ostringstream os;
  if (format == "svg")
    write_figure_svg(os, body, fba);
  else
    write_floatbody_csv(os, fba);
  emit(o.out, os.str());
  return kExitOk;
}

int run_theta(const CommonOpts& o, const std::string& deltas_str) {
  Body body = body_from_file(o.body_path);
  std::vector<double> deltas = parse_deltas(deltas_str);
  int nd = o.directions > 0 ? o.directions : default_direction_count(body.n);
  ThetaReport rep = theta_estimate(body, deltas, direction_grid(body.n, nd), make_cfg(o));
  std::ostringstream os;
  write_theta_csv(os, rep);
  emit(o.out, os.str());
  return kExitOk;
}

int run_verify(const CommonOpts& o, const std::string& deltas_str, std::int64_t samples,
               std::uint64_t seed) {
  Body body = body_from_file(o.body_path);
  std::vector<double> deltas = parse_deltas(deltas_str);
  QuadratureConfig cfg = make_cfg(o);
  int nd = o.directions > 0 ? o.directions : default_direction_count(body.n);
  auto dirs = direction_grid(body.n, nd);
  bool all_ok = true;
  std::ostringstream os;

  std::vector<SandwichReport> sws;
  for (double d : deltas) {
    SandwichReport r = sandwich_check(body, d, dirs, cfg, samples, seed);
    all_ok = all_ok && r.ok();
    sws.push_back(r);
    std::cerr << "sandwich delta=" << d << (r.ok() ? " ok" : " VIOLATION") << " L=" << r.L
              << " U=" << r.U << " viol=" << r.viol_lower << "/" << r.viol_upper << "\n";
  }
  write_sandwich_csv(os, sws);

  {
    BlockiReport br = blocki_consequence_check(body, deltas.back(), dirs, cfg);
    all_ok = all_ok && br.ok;
    std::cerr << "blocki delta=" << br.delta << (br.ok ? " ok" : " VIOLATION")
              << " min d2K=" << br.min_d2k << " bound=" << br.bound << "\n";
    std::vector<LimitRow> rows(1);
    rows[0] = {br.delta, br.min_d2k, br.bound, br.min_d2k / br.bound - 1.0};
    write_limits_csv(os, "blocki", rows);
  }

  if (is_origin_symmetric(body)) {
    NazarovReport nr = nazarov_check(body, cfg);
    all_ok = all_ok && nr.ok;
    std::cerr << "nazarov ratio=" << nr.ratio << (nr.ok ? " ok" : " VIOLATION") << "\n";
    SantaloReport sr = santalo_check(body);
    all_ok = all_ok && sr.ok;
    std::cerr << "santalo product=" << sr.product << " bound=" << sr.bound
              << (sr.ok ? " ok" : " VIOLATION") << "\n";
    std::vector<LimitRow> rows = {{0, nr.ratio, 1.0, nr.ratio - 1.0},
                                  {0, sr.product, sr.bound, sr.product / sr.bound - 1.0}};
    write_limits_csv(os, "nazarov_santalo", rows);
  }

  {
    // Scale-2 and shear maps, as in the paper's square/triangle comparisons.
    Mat scale2 = Mat::identity(body.n);
    for (int i = 0; i < body.n; ++i) scale2(i, i) = 2.0;
    Mat shear = Mat::identity(body.n);
    shear(0, 1 % body.n) = body.n >= 2 ? 0.5 : 0.0;
    for (const Mat& A : {scale2, shear}) {
      if (body.n == 1) break;
      AffineReport ar = affine_invariance_check(body, A, Vec(body.n), deltas.back(), dirs, cfg);
      all_ok = all_ok && ar.ok();
      std::cerr << "affine law rel_err=" << ar.kernel_law_rel_err
                << " float_gap=" << ar.float_gap << (ar.ok() ? " ok" : " VIOLATION") << "\n";
    }
  }

  emit(o.out, os.str());
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floatberg: convex floating bodies vs Bergman sublevel sets"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<std::string> points;
  int grid = 0;
  double delta = 0.01;
  std::string deltas_str = "0.02,0.01,0.005";
  std::string format = "csv";
  std::int64_t samples = 10000;
  std::uint64_t seed = 20240901;

  auto add_common = [&](CLI::App* cmd, bool needs_body = true) {
    auto* opt = cmd->add_option("--body", o.body_path, "body JSON file");
    if (needs_body) opt->required();
    cmd->add_option("--tol", o.tol, "kernel relative tolerance");
    cmd->add_option("--trunc", o.trunc, "kernel truncation tolerance (relative to peak)");
    cmd->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per panel axis");
    cmd->add_option("--directions", o.directions, "direction-grid size (0 = default)");
    cmd->add_option("--out", o.out, "output path (default stdout)");
  };

  CLI::App* ck = app.add_subcommand("kernel", "evaluate K_D at points");
  add_common(ck);
  ck->add_option("--point", points, "evaluation point, comma separated");
  ck->add_option("--grid", grid, "evaluate on an interior grid of this size");

  CLI::App* cf = app.add_subcommand("floatbody", "build a floating body");
  add_common(cf);
  cf->add_option("--delta", delta, "cut volume")->required();
  cf->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

  CLI::App* ct = app.add_subcommand("theta", "estimate theta_D over a delta grid");
  add_common(ct);
  ct->add_option("--deltas", deltas_str, "descending comma-separated deltas");

  CLI::App* cv = app.add_subcommand("verify", "run the inequality suite");
  add_common(cv);
  cv->add_option("--delta", deltas_str, "delta or comma-separated deltas");
  cv->add_option("--samples", samples, "sampled containment checks");
  cv->add_option("--seed", seed, "sampler seed");

  CLI::App* cg = app.add_subcommand("figure", "SVG of the body and its floating body");
  add_common(cg);
  cg->add_option("--delta", delta, "cut volume")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ck->parsed()) return run_kernel(o, points, grid);
    if (cf->parsed()) return run_floatbody(o, delta, format);
    if (ct->parsed()) return run_theta(o, deltas_str);
    if (cv->parsed()) return run_verify(o, deltas_str, samples, seed);
    if (cg->parsed()) return run_floatbody(o, delta, "svg");
  } catch (const InvalidBody& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
