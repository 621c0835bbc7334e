// Convex bodies in R^n (n <= 3) and their exact geometric primitives:
// volumes, supports, sections, caps, cut depths, polar duals.
#pragma once

#include <vector>

#include "floatberg/linalg.hpp"

namespace floatberg {

struct Direction {
  Vec v;
  Direction() = default;
  explicit Direction(const Vec& u);  // validates |norm - 1| <= 1e-12
};

// The half-space {x : x.v >= r}; its boundary hyperplane is {x.v = r}.
struct CutSpec {
  Direction v;
  double r = 0;
};

enum class BodyKind { box, simplex, polytope, ellipsoid };

// One facet of a polytopal body: outward unit normal, offset (x.normal <=
// offset inside), and the vertex indices on it. For n=2 the cycle is the
// edge's two endpoints; for n=3 it is the facet ring, ordered counterclockwise
// when seen from outside.
struct Facet {
  Vec normal;
  double offset = 0;
  std::vector<int> cycle;
};

struct Body {
  int n = 0;
  BodyKind kind = BodyKind::box;

  Vec lo, hi;                 // box
  std::vector<Vec> vertices;  // simplex, polytope
  std::vector<Facet> facets;  // simplex, polytope
  Vec center;                 // ellipsoid
  Mat shape;                  // ellipsoid: center + shape * (unit ball)

  static Body box(const Vec& lo, const Vec& hi);
  static Body simplex(const std::vector<Vec>& verts);
  // 2D: vertices in convex position, any order (sorted angularly here).
  static Body polygon(const std::vector<Vec>& verts);
  // Explicit polytope with consistent H- and V-representations.
  static Body polytope(const std::vector<Vec>& verts, const std::vector<Facet>& facets);
  static Body ellipsoid(const Vec& center, const Mat& shape);

  static Body unit_square() { return box(Vec{0.0, 0.0}, Vec{1.0, 1.0}); }
  static Body unit_disk() { return ellipsoid(Vec{0.0, 0.0}, Mat::identity(2)); }
  static Body standard_triangle() {
    return simplex({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}});
  }
};

double unit_ball_volume(int n);

double volume(const Body& body);
double support(const Body& body, const Direction& v);
bool contains(const Body& body, const Vec& x);
Body affine_image(const Body& body, const Mat& A, const Vec& b);
Body polar(const Body& body);
Vec section_barycenter(const Body& body, const CutSpec& cut);
double cap_volume(const Body& body, const CutSpec& cut);
double cut_depth(const Body& body, const Direction& v, double delta);

// Helpers shared by the quadrature and sampling layers.
void bounding_box(const Body& body, Vec& lo, Vec& hi);
Vec centroid(const Body& body);
double diameter(const Body& body);
// Distance from an interior point to the boundary (exact for polytopal
// bodies; a safe lower bound for ellipsoids with anisotropic shape).
double boundary_gap(const Body& body, const Vec& x);
bool is_origin_symmetric(const Body& body);
// Polytopal view of a polytopal body (box/simplex pass through a conversion,
// polytope is returned as-is). Throws for ellipsoids.
Body as_polytope(const Body& body);

}  // namespace floatberg
