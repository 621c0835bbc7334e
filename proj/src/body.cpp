#include "floatberg/body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "floatberg/errors.hpp"
#include "floatberg/quadrature.hpp"
#include "floatberg/tolerances.hpp"

namespace floatberg {

Direction::Direction(const Vec& u) : v(u) {
  if (u.n < 1 || u.n > kMaxDim) throw InvalidBody("direction dimension out of range");
  if (std::abs(norm(u) - 1.0) > kTol.unit_norm)
    throw InvalidBody("direction is not a unit vector");
}

double unit_ball_volume(int n) {
  if (n < 1) throw Error("unit_ball_volume: n must be >= 1");
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

namespace {

double body_scale(const Body& b) {
  Vec lo, hi;
  bounding_box(b, lo, hi);
  double s = 0;
  for (int i = 0; i < b.n; ++i) s = std::max(s, std::max(std::abs(lo[i]), std::abs(hi[i])));
  return std::max(s, 1.0);
}

Vec rot90(const Vec& v) { return Vec{v[1], -v[0]}; }

double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Sorts 2D points counterclockwise around their mean.
std::vector<Vec> sort_ccw(std::vector<Vec> pts) {
  Vec c(2);
  for (const Vec& p : pts) c = c + p;
  c = (1.0 / pts.size()) * c;
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  return pts;
}

std::vector<Facet> ring_facets(const std::vector<Vec>& ring) {
  std::vector<Facet> fs;
  int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    Vec e = ring[j] - ring[i];
    Facet f;
    f.normal = normalized(Vec{e[1], -e[0]});  // outward for a CCW ring
    f.offset = dot(f.normal, ring[i]);
    f.cycle = {i, j};
    fs.push_back(std::move(f));
  }
  return fs;
}

void validate_polytope(const Body& b) {
  double scale = body_scale(b);
  double tol = kTol.polytope_consistency * scale;
  for (const Facet& f : b.facets) {
    if (std::abs(norm(f.normal) - 1.0) > 1e-9) throw InvalidBody("facet normal not unit");
    int touching = 0;
    for (const Vec& v : b.vertices) {
      double s = dot(v, f.normal) - f.offset;
      if (s > tol) throw InvalidBody("vertex violates a facet half-space");
      if (std::abs(s) <= tol) ++touching;
    }
    if (touching < b.n) throw InvalidBody("facet touched by fewer than n vertices");
  }
}

}  // namespace

Body Body::box(const Vec& lo, const Vec& hi) {
  Body b;
  b.n = lo.n;
  b.kind = BodyKind::box;
  if (b.n < 1 || b.n > kMaxDim || hi.n != b.n) throw InvalidBody("box dimension out of range");
  for (int i = 0; i < b.n; ++i)
    if (!(lo[i] < hi[i])) throw InvalidBody("box requires lo < hi componentwise");
  b.lo = lo;
  b.hi = hi;
  return b;
}

Body Body::simplex(const std::vector<Vec>& verts) {
  Body b;
  b.kind = BodyKind::simplex;
  if (verts.empty()) throw InvalidBody("simplex needs vertices");
  b.n = verts[0].n;
  if (b.n < 1 || b.n > kMaxDim) throw InvalidBody("simplex dimension out of range");
  if (static_cast<int>(verts.size()) != b.n + 1)
    throw InvalidBody("simplex needs n+1 vertices");
  b.vertices = verts;
  Mat edges(b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) edges(i, j) = verts[i + 1][j] - verts[0][j];
  double d = det(edges);
  double scale = body_scale(b);
  if (std::abs(d) <= 1e-12 * std::pow(scale, b.n))
    throw InvalidBody("simplex vertices are affinely dependent");

  if (b.n == 1) {
    Vec a = verts[0], c = verts[1];
    if (a[0] > c[0]) std::swap(a, c);
    b.vertices = {a, c};
    b.facets.push_back({Vec{-1.0}, -a[0], {0}});
    b.facets.push_back({Vec{1.0}, c[0], {1}});
  } else if (b.n == 2) {
    b.vertices = sort_ccw(b.vertices);
    b.facets = ring_facets(b.vertices);
  } else {
    // Four triangular facets, oriented outward (CCW seen from outside).
    static const int tri[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    for (int f = 0; f < 4; ++f) {
      int opp = 6 - tri[f][0] - tri[f][1] - tri[f][2];
      Vec a = b.vertices[tri[f][0]], c = b.vertices[tri[f][1]], e = b.vertices[tri[f][2]];
      Vec nrm = cross3(c - a, e - a);
      Facet fc;
      fc.cycle = {tri[f][0], tri[f][1], tri[f][2]};
      if (dot(nrm, b.vertices[opp] - a) > 0) {
        nrm = -nrm;
        std::swap(fc.cycle[1], fc.cycle[2]);
      }
      fc.normal = normalized(nrm);
      fc.offset = dot(fc.normal, a);
      b.facets.push_back(std::move(fc));
    }
  }
  validate_polytope(b);
  return b;
}

Body Body::polygon(const std::vector<Vec>& verts) {
  Body b;
  b.kind = BodyKind::polytope;
  if (verts.size() < 3) throw InvalidBody("polygon needs at least 3 vertices");
  b.n = 2;
  for (const Vec& v : verts)
    if (v.n != 2) throw InvalidBody("polygon vertices must be 2D");
  b.vertices = sort_ccw(verts);
  double scale = body_scale(b);
  int m = static_cast<int>(b.vertices.size());
  for (int i = 0; i < m; ++i) {
    Vec e1 = b.vertices[(i + 1) % m] - b.vertices[i];
    Vec e2 = b.vertices[(i + 2) % m] - b.vertices[(i + 1) % m];
    if (cross2(e1, e2) <= 1e-12 * scale * scale)
      throw InvalidBody("polygon vertices not in strictly convex position");
  }
  b.facets = ring_facets(b.vertices);
  validate_polytope(b);
  return b;
}

Body Body::polytope(const std::vector<Vec>& verts, const std::vector<Facet>& facets) {
  if (verts.empty()) throw InvalidBody("polytope needs vertices");
  if (verts[0].n == 2) return polygon(verts);
  Body b;
  b.kind = BodyKind::polytope;
  b.n = verts[0].n;
  if (b.n != 3) throw InvalidBody("explicit polytope supported for n=3 only");
  b.vertices = verts;
  b.facets = facets;
  validate_polytope(b);
  return b;
}

Body Body::ellipsoid(const Vec& center, const Mat& shape) {
  Body b;
  b.kind = BodyKind::ellipsoid;
  b.n = center.n;
  if (b.n < 1 || b.n > kMaxDim || shape.n != b.n)
    throw InvalidBody("ellipsoid dimension out of range");
  if (std::abs(det(shape)) <= 0) throw InvalidBody("ellipsoid shape matrix is singular");
  b.center = center;
  b.shape = shape;
  return b;
}

double volume(const Body& body) {
  switch (body.kind) {
    case BodyKind::box: {
      double v = 1;
      for (int i = 0; i < body.n; ++i) v *= body.hi[i] - body.lo[i];
      return v;
    }
    case BodyKind::simplex: {
      Mat edges(body.n);
      for (int i = 0; i < body.n; ++i)
        for (int j = 0; j < body.n; ++j)
          edges(i, j) = body.vertices[i + 1][j] - body.vertices[0][j];
      double f = 1;
      for (int k = 2; k <= body.n; ++k) f *= k;
      return std::abs(det(edges)) / f;
    }
    case BodyKind::polytope: {
      if (body.n == 2) {
        double s = 0;
        int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i) {
          const Vec& a = body.vertices[i];
          const Vec& b2 = body.vertices[(i + 1) % m];
          s += cross2(a, b2);
        }
        return 0.5 * std::abs(s);
      }
      // Fan triangulation from the vertex centroid.
      Vec c(3);
      for (const Vec& v : body.vertices) c = c + v;
      c = (1.0 / body.vertices.size()) * c;
      double vol = 0;
      for (const Facet& f : body.facets) {
        int m = static_cast<int>(f.cycle.size());
        for (int i = 1; i + 1 < m; ++i) {
          Vec a = body.vertices[f.cycle[0]] - c;
          Vec b2 = body.vertices[f.cycle[i]] - c;
          Vec d = body.vertices[f.cycle[i + 1]] - c;
          vol += dot(cross3(a, b2), d);
        }
      }
      return std::abs(vol) / 6.0;
    }
    case BodyKind::ellipsoid:
      return unit_ball_volume(body.n) * std::abs(det(body.shape));
  }
  throw Error("volume: unreachable");
}

double support(const Body& body, const Direction& dir) {
  const Vec& v = dir.v;
  switch (body.kind) {
    case BodyKind::box: {
      double s = 0;
      for (int i = 0; i < body.n; ++i) s += std::max(body.lo[i] * v[i], body.hi[i] * v[i]);
      return s;
    }
    case BodyKind::simplex:
    case BodyKind::polytope: {
      double s = -1e300;
      for (const Vec& p : body.vertices) s = std::max(s, dot(p, v));
      return s;
    }
    case BodyKind::ellipsoid: {
      Vec w = transpose(body.shape) * v;
      return dot(body.center, v) + norm(w);
    }
  }
  throw Error("support: unreachable");
}

bool contains(const Body& body, const Vec& x) {
  if (x.n != body.n) throw Error("contains: dimension mismatch");
  double tol = kTol.interior_margin;
  switch (body.kind) {
    case BodyKind::box:
      for (int i = 0; i < body.n; ++i)
        if (!(x[i] > body.lo[i] + tol && x[i] < body.hi[i] - tol)) return false;
      return true;
    case BodyKind::simplex:
    case BodyKind::polytope:
      for (const Facet& f : body.facets)
        if (!(dot(x, f.normal) < f.offset - tol)) return false;
      return true;
    case BodyKind::ellipsoid: {
      Vec u = inverse(body.shape) * (x - body.center);
      return norm(u) < 1.0 - tol;
    }
  }
  throw Error("contains: unreachable");
}

Body as_polytope(const Body& body) {
  switch (body.kind) {
    case BodyKind::polytope:
      return body;
    case BodyKind::simplex: {
      Body b = body;
      b.kind = BodyKind::polytope;
      return b;
    }
    case BodyKind::box: {
      if (body.n == 2) {
        return Body::polygon({Vec{body.lo[0], body.lo[1]}, Vec{body.hi[0], body.lo[1]},
                              Vec{body.hi[0], body.hi[1]}, Vec{body.lo[0], body.hi[1]}});
      }
      if (body.n != 3) throw Error("as_polytope: n=1 box has no polytope view");
      std::vector<Vec> vs;
      for (int k = 0; k < 8; ++k)
        vs.push_back(Vec{k & 1 ? body.hi[0] : body.lo[0], k & 2 ? body.hi[1] : body.lo[1],
                         k & 4 ? body.hi[2] : body.lo[2]});
      // Quad facets with outward-CCW cycles (index bit k: 1=x, 2=y, 4=z).
      std::vector<Facet> fs;
      auto add = [&](Vec nrm, double off, std::vector<int> cyc) {
        fs.push_back({nrm, off, std::move(cyc)});
      };
      add(Vec{-1, 0, 0}, -body.lo[0], {0, 4, 6, 2});
      add(Vec{1, 0, 0}, body.hi[0], {1, 3, 7, 5});
      add(Vec{0, -1, 0}, -body.lo[1], {0, 1, 5, 4});
      add(Vec{0, 1, 0}, body.hi[1], {2, 6, 7, 3});
      add(Vec{0, 0, -1}, -body.lo[2], {0, 2, 3, 1});
      add(Vec{0, 0, 1}, body.hi[2], {4, 5, 7, 6});
      return Body::polytope(vs, fs);
    }
    case BodyKind::ellipsoid:
      throw Error("as_polytope: ellipsoid has no polytope view");
  }
  throw Error("as_polytope: unreachable");
}

Body affine_image(const Body& body, const Mat& A, const Vec& b) {
  if (A.n != body.n || b.n != body.n) throw InvalidBody("affine_image: dimension mismatch");
  double d = det(A);
  if (std::abs(d) <= 1e-300) throw InvalidBody("affine_image: singular matrix");
  switch (body.kind) {
    case BodyKind::box: {
      bool diagonal = true;
      for (int i = 0; i < body.n && diagonal; ++i)
        for (int j = 0; j < body.n; ++j)
          if (i != j && A(i, j) != 0.0) {
            diagonal = false;
            break;
          }
      if (diagonal) {
        Vec lo(body.n), hi(body.n);
        for (int i = 0; i < body.n; ++i) {
          double p = A(i, i) * body.lo[i] + b[i];
          double q = A(i, i) * body.hi[i] + b[i];
          lo[i] = std::min(p, q);
          hi[i] = std::max(p, q);
        }
        return Body::box(lo, hi);
      }
      return affine_image(as_polytope(body), A, b);
    }
    case BodyKind::simplex: {
      std::vector<Vec> vs;
      for (const Vec& v : body.vertices) vs.push_back(A * v + b);
      return Body::simplex(vs);
    }
    case BodyKind::polytope: {
      std::vector<Vec> vs;
      for (const Vec& v : body.vertices) vs.push_back(A * v + b);
      if (body.n == 2) return Body::polygon(vs);
      Mat AinvT = transpose(inverse(A));
      std::vector<Facet> fs;
      for (const Facet& f : body.facets) {
        Facet g;
        g.normal = normalized(AinvT * f.normal);
        g.cycle = f.cycle;
        if (d < 0) std::reverse(g.cycle.begin(), g.cycle.end());
        g.offset = dot(g.normal, vs[g.cycle[0]]);
        fs.push_back(std::move(g));
      }
      return Body::polytope(vs, fs);
    }
    case BodyKind::ellipsoid:
      return Body::ellipsoid(A * body.center + b, A * body.shape);
  }
  throw Error("affine_image: unreachable");
}

bool is_origin_symmetric(const Body& body) {
  double tol = kTol.symmetry * body_scale(body);
  switch (body.kind) {
    case BodyKind::box:
      for (int i = 0; i < body.n; ++i)
        if (std::abs(body.lo[i] + body.hi[i]) > tol) return false;
      return true;
    case BodyKind::simplex:
    case BodyKind::polytope:
      for (const Vec& v : body.vertices) {
        bool found = false;
        for (const Vec& w : body.vertices)
          if (dist(w, -1.0 * v) <= tol) {
            found = true;
            break;
          }
        if (!found) return false;
      }
      return true;
    case BodyKind::ellipsoid:
      return norm(body.center) <= tol;
  }
  return false;
}

Body polar(const Body& body) {
  if (!is_origin_symmetric(body)) throw NotSymmetric("polar: body is not origin-symmetric");
  switch (body.kind) {
    case BodyKind::ellipsoid:
      return Body::ellipsoid(Vec(body.n), transpose(inverse(body.shape)));
    case BodyKind::box: {
      if (body.n == 1) return Body::box(Vec{1.0 / body.lo[0]}, Vec{1.0 / body.hi[0]});
      return polar(as_polytope(body));
    }
    case BodyKind::simplex:
    case BodyKind::polytope: {
      if (body.n == 1)
        return Body::box(Vec{1.0 / body.vertices[0][0]}, Vec{1.0 / body.vertices[1][0]});
      std::vector<Vec> pv;
      for (const Facet& f : body.facets) {
        if (f.offset <= 0) throw NotSymmetric("polar: origin not interior");
        pv.push_back((1.0 / f.offset) * f.normal);
      }
      if (body.n == 2) return Body::polygon(pv);
      // Dual facet per primal vertex; its ring is the set of duals of the
      // facets incident to that vertex, sorted by angle in the facet plane.
      double tol = kTol.polytope_consistency * body_scale(body);
      std::vector<Facet> pf;
      for (const Vec& v : body.vertices) {
        double vn = norm(v);
        Facet g;
        g.normal = (1.0 / vn) * v;
        g.offset = 1.0 / vn;
        std::vector<int> inc;
        for (size_t j = 0; j < body.facets.size(); ++j)
          if (std::abs(dot(body.facets[j].normal, v) - body.facets[j].offset) <= tol)
            inc.push_back(static_cast<int>(j));
        if (inc.size() < 3) throw InvalidBody("polar: vertex on fewer than 3 facets");
        Vec c(3);
        for (int j : inc) c = c + pv[j];
        c = (1.0 / inc.size()) * c;
        Vec b1 = normalized(pv[inc[0]] - c);
        Vec b2 = cross3(g.normal, b1);
        std::sort(inc.begin(), inc.end(), [&](int p, int q) {
          Vec dp = pv[p] - c, dq = pv[q] - c;
          return std::atan2(dot(dp, b2), dot(dp, b1)) < std::atan2(dot(dq, b2), dot(dq, b1));
        });
        g.cycle = inc;
        pf.push_back(std::move(g));
      }
      return Body::polytope(pv, pf);
    }
  }
  throw Error("polar: unreachable");
}

namespace {

// Cap {x.v >= r} of a 2D ring; returns the clipped ring (possibly empty).
std::vector<Vec> clip_ring_2d(const std::vector<Vec>& ring, const Vec& v, double r) {
  std::vector<Vec> out;
  int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    const Vec& a = ring[i];
    const Vec& b = ring[(i + 1) % m];
    double da = dot(a, v) - r, db = dot(b, v) - r;
    if (da >= 0) out.push_back(a);
    if ((da > 0) != (db > 0) && da != db) {
      double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

double ring_area(const std::vector<Vec>& ring) {
  double s = 0;
  int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) s += cross2(ring[i], ring[(i + 1) % m]);
  return 0.5 * std::abs(s);
}

// Volume fraction of the unit n-ball beyond offset rho (u . w >= rho), exact
// small-angle behaviour via the substitution u = sin(phi).
double ball_cap(int n, double rho) {
  if (rho >= 1.0) return 0.0;
  if (rho <= -1.0) return unit_ball_volume(n);
  double lo = std::asin(rho);
  double vnm1 = n >= 2 ? unit_ball_volume(n - 1) : 1.0;
  auto f = [n](double phi) { return std::pow(std::cos(phi), n); };
  return vnm1 * adaptive_1d(f, lo, std::numbers::pi / 2, kTol.section_quad_rel);
}

struct EllipsoidCut {
  double s = 0;    // |shape^T v|
  double rho = 0;  // ball-space offset
};

EllipsoidCut ellipsoid_cut(const Body& body, const CutSpec& cut) {
  Vec w = transpose(body.shape) * cut.v.v;
  EllipsoidCut ec;
  ec.s = norm(w);
  ec.rho = (cut.r - dot(body.center, cut.v.v)) / ec.s;
  return ec;
}

// Clips every facet ring of a 3D polytope by {x.v >= r} and appends the
// section polygon; returns outward-oriented facet rings of the cap as point
// lists (empty if the cap is empty).
std::vector<std::vector<Vec>> clip_polytope_3d(const Body& body, const Vec& v, double r) {
  std::vector<std::vector<Vec>> rings;
  std::vector<Vec> section;
  for (const Facet& f : body.facets) {
    std::vector<Vec> ring;
    for (int idx : f.cycle) ring.push_back(body.vertices[idx]);
    std::vector<Vec> clipped;
    int m = static_cast<int>(ring.size());
    for (int i = 0; i < m; ++i) {
      const Vec& a = ring[i];
      const Vec& b = ring[(i + 1) % m];
      double da = dot(a, v) - r, db = dot(b, v) - r;
      if (da >= 0) clipped.push_back(a);
      if ((da > 0) != (db > 0) && da != db) {
        Vec p = a + (da / (da - db)) * (b - a);
        clipped.push_back(p);
        section.push_back(p);
      }
    }
    if (clipped.size() >= 3) rings.push_back(std::move(clipped));
  }
  if (rings.empty()) return {};
  if (section.size() >= 3) {
    // Deduplicate and order the section ring; cap-side outward normal is -v.
    std::vector<Vec> uniq;
    for (const Vec& p : section) {
      bool dup = false;
      for (const Vec& q : uniq)
        if (dist(p, q) < 1e-12 * (1.0 + norm(p))) dup = true;
      if (!dup) uniq.push_back(p);
    }
    if (uniq.size() >= 3) {
      Vec c(3);
      for (const Vec& p : uniq) c = c + p;
      c = (1.0 / uniq.size()) * c;
      Vec b1 = normalized(uniq[0] - c);
      Vec nrm = -1.0 * v;
      Vec b2 = cross3(nrm, b1);
      std::sort(uniq.begin(), uniq.end(), [&](const Vec& p, const Vec& q) {
        Vec dp = p - c, dq = q - c;
        return std::atan2(dot(dp, b2), dot(dp, b1)) < std::atan2(dot(dq, b2), dot(dq, b1));
      });
      rings.push_back(std::move(uniq));
    }
  }
  return rings;
}

double rings_volume(const std::vector<std::vector<Vec>>& rings) {
  double vol = 0;
  for (const auto& ring : rings) {
    int m = static_cast<int>(ring.size());
    for (int i = 1; i + 1 < m; ++i)
      vol += dot(cross3(ring[0], ring[i]), ring[i + 1]);
  }
  return std::abs(vol) / 6.0;
}

}  // namespace

double cap_volume(const Body& body, const CutSpec& cut) {
  const Vec& v = cut.v.v;
  if (v.n != body.n) throw Error("cap_volume: dimension mismatch");
  double lo = -support(body, Direction(-1.0 * v));
  double hi = support(body, cut.v);
  if (cut.r >= hi) return 0.0;
  if (cut.r <= lo) return volume(body);
  switch (body.kind) {
    case BodyKind::box:
    case BodyKind::simplex:
    case BodyKind::polytope: {
      if (body.n == 1) {
        double a = body.kind == BodyKind::box ? body.lo[0] : body.vertices[0][0];
        double b = body.kind == BodyKind::box ? body.hi[0] : body.vertices[1][0];
        double pa = a * v[0], pb = b * v[0];
        double pmin = std::min(pa, pb), pmax = std::max(pa, pb);
        return std::clamp(pmax - cut.r, 0.0, pmax - pmin);
      }
      Body p = as_polytope(body);
      if (body.n == 2) return ring_area(clip_ring_2d(p.vertices, v, cut.r));
      return rings_volume(clip_polytope_3d(p, v, cut.r));
    }
    case BodyKind::ellipsoid: {
      EllipsoidCut ec = ellipsoid_cut(body, cut);
      return std::abs(det(body.shape)) * ball_cap(body.n, ec.rho);
    }
  }
  throw Error("cap_volume: unreachable");
}

double cut_depth(const Body& body, const Direction& v, double delta) {
  double vol = volume(body);
  if (!(delta > 0) || !(delta < vol)) throw DeltaOutOfRange("cut_depth: delta outside (0, vol)");
  double lo = -support(body, Direction(-1.0 * v.v));
  double hi = support(body, v);
  double tol = kTol.cut_residual_rel * vol;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < kTol.bisect_max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    double cap = cap_volume(body, {v, mid});
    if (std::abs(cap - delta) <= tol) return mid;
    if (cap > delta)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * (std::abs(lo) + std::abs(hi) + 1.0)) break;
  }
  return mid;
}

Vec section_barycenter(const Body& body, const CutSpec& cut) {
  const Vec& v = cut.v.v;
  if (v.n != body.n) throw Error("section_barycenter: dimension mismatch");
  double lo = -support(body, Direction(-1.0 * v));
  double hi = support(body, cut.v);
  double eps = 1e-14 * (std::abs(lo) + std::abs(hi) + 1.0);
  if (!(cut.r > lo + eps && cut.r < hi - eps))
    throw EmptySection("section_barycenter: hyperplane misses the interior");
  switch (body.kind) {
    case BodyKind::box:
    case BodyKind::simplex:
    case BodyKind::polytope: {
      if (body.n == 1) return Vec{cut.r * v[0]};
      Body p = as_polytope(body);
      if (body.n == 2) {
        std::vector<Vec> pts;
        int m = static_cast<int>(p.vertices.size());
        for (int i = 0; i < m; ++i) {
          const Vec& a = p.vertices[i];
          const Vec& b = p.vertices[(i + 1) % m];
          double da = dot(a, v) - cut.r, db = dot(b, v) - cut.r;
          if ((da > 0) != (db > 0) && da != db) pts.push_back(a + (da / (da - db)) * (b - a));
        }
        std::vector<Vec> uniq;
        for (const Vec& q : pts) {
          bool dup = false;
          for (const Vec& u : uniq)
            if (dist(q, u) < 1e-12 * (1.0 + norm(q))) dup = true;
          if (!dup) uniq.push_back(q);
        }
        if (uniq.size() != 2) throw EmptySection("section_barycenter: degenerate chord");
        return 0.5 * (uniq[0] + uniq[1]);
      }
      // n = 3: area centroid of the section polygon.
      auto rings = clip_polytope_3d(p, v, cut.r);
      if (rings.empty()) throw EmptySection("section_barycenter: empty section");
      const std::vector<Vec>& ring = rings.back();  // section facet appended last
      Vec c0(3);
      for (const Vec& q : ring) c0 = c0 + q;
      c0 = (1.0 / ring.size()) * c0;
      double area = 0;
      Vec acc(3);
      int m = static_cast<int>(ring.size());
      for (int i = 0; i < m; ++i) {
        const Vec& a = ring[i];
        const Vec& b = ring[(i + 1) % m];
        double tri = norm(cross3(a - c0, b - c0)) / 2.0;
        area += tri;
        acc = acc + (tri / 3.0) * (a + b + c0);
      }
      if (area <= 0) throw EmptySection("section_barycenter: degenerate section");
      return (1.0 / area) * acc;
    }
    case BodyKind::ellipsoid: {
      EllipsoidCut ec = ellipsoid_cut(body, cut);
      if (std::abs(ec.rho) >= 1.0)
        throw EmptySection("section_barycenter: hyperplane misses the ellipsoid");
      Vec w = transpose(body.shape) * v;
      Vec u0 = (ec.rho / ec.s) * w;
      return body.center + body.shape * u0;
    }
  }
  throw Error("section_barycenter: unreachable");
}

void bounding_box(const Body& body, Vec& lo, Vec& hi) {
  lo = Vec(body.n);
  hi = Vec(body.n);
  switch (body.kind) {
    case BodyKind::box:
      lo = body.lo;
      hi = body.hi;
      return;
    case BodyKind::simplex:
    case BodyKind::polytope:
      for (int i = 0; i < body.n; ++i) {
        lo[i] = 1e300;
        hi[i] = -1e300;
      }
      for (const Vec& v : body.vertices)
        for (int i = 0; i < body.n; ++i) {
          lo[i] = std::min(lo[i], v[i]);
          hi[i] = std::max(hi[i], v[i]);
        }
      return;
    case BodyKind::ellipsoid:
      // Extent along axis i is |shape^T e_i| = norm of row i of the shape.
      for (int i = 0; i < body.n; ++i) {
        double ext = 0;
        for (int j = 0; j < body.n; ++j) ext += body.shape(i, j) * body.shape(i, j);
        ext = std::sqrt(ext);
        lo[i] = body.center[i] - ext;
        hi[i] = body.center[i] + ext;
      }
      return;
  }
}

Vec centroid(const Body& body) {
  switch (body.kind) {
    case BodyKind::box:
      return 0.5 * (body.lo + body.hi);
    case BodyKind::simplex: {
      Vec c(body.n);
      for (const Vec& v : body.vertices) c = c + v;
      return (1.0 / body.vertices.size()) * c;
    }
    case BodyKind::polytope: {
      if (body.n == 2) {
        double area6 = 0;
        Vec acc(2);
        int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i) {
          const Vec& a = body.vertices[i];
          const Vec& b = body.vertices[(i + 1) % m];
          double w = cross2(a, b);
          area6 += w;
          acc = acc + w * (a + b);
        }
        return (1.0 / (3.0 * area6)) * acc;
      }
      Vec p0(3);
      for (const Vec& v : body.vertices) p0 = p0 + v;
      p0 = (1.0 / body.vertices.size()) * p0;
      double vol6 = 0;
      Vec acc(3);
      for (const Facet& f : body.facets) {
        int m = static_cast<int>(f.cycle.size());
        for (int i = 1; i + 1 < m; ++i) {
          Vec a = body.vertices[f.cycle[0]] - p0;
          Vec b = body.vertices[f.cycle[i]] - p0;
          Vec c = body.vertices[f.cycle[i + 1]] - p0;
          double w = dot(cross3(a, b), c);
          vol6 += w;
          acc = acc + (w / 4.0) * (a + b + c);  // tetra centroid offset from p0
        }
      }
      return p0 + (1.0 / vol6) * acc;
    }
    case BodyKind::ellipsoid:
      return body.center;
  }
  throw Error("centroid: unreachable");
}

double diameter(const Body& body) {
  Vec lo, hi;
  bounding_box(body, lo, hi);
  return dist(lo, hi);
}

double boundary_gap(const Body& body, const Vec& x) {
  switch (body.kind) {
    case BodyKind::box: {
      double g = 1e300;
      for (int i = 0; i < body.n; ++i) g = std::min({g, x[i] - body.lo[i], body.hi[i] - x[i]});
      return g;
    }
    case BodyKind::simplex:
    case BodyKind::polytope: {
      double g = 1e300;
      for (const Facet& f : body.facets) g = std::min(g, f.offset - dot(x, f.normal));
      return g;
    }
    case BodyKind::ellipsoid: {
      Vec u = inverse(body.shape) * (x - body.center);
      double r = norm(u);
      return min_singular_value(body.shape) * (1.0 - r);
    }
  }
  throw Error("boundary_gap: unreachable");
}

}  // namespace floatberg
