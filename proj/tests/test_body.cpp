#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "floatberg/body.hpp"
#include "floatberg/errors.hpp"
#include "floatberg/tolerances.hpp"
#include "test_support.hpp"

using namespace floatberg;
using std::numbers::pi;

namespace {

double hausdorff(const Body& a, const Body& b, int ndirs = 360) {
  // For convex bodies d_H = sup over directions of |h_a - h_b|.
  double d = 0;
  for (int k = 0; k < ndirs; ++k) {
    double th = 2 * pi * k / ndirs;
    Direction v(Vec{std::cos(th), std::sin(th)});
    d = std::max(d, std::abs(support(a, v) - support(b, v)));
  }
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("body");

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(unit_ball_volume(0), Error);
}

TEST_CASE("volumes") {
  CHECK(volume(Body::unit_square()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(volume(Body::standard_triangle()) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(volume(Body::unit_disk()) == doctest::Approx(pi).epsilon(1e-14));
  Body cube = Body::box(Vec{0.0, 0.0, 0.0}, Vec{2.0, 1.0, 1.0});
  CHECK(volume(cube) == doctest::Approx(2.0));
  CHECK(volume(as_polytope(cube)) == doctest::Approx(2.0).epsilon(1e-13));
  Body tet = Body::simplex({Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
                            Vec{0.0, 0.0, 1.0}});
  CHECK(volume(tet) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("support") {
  CHECK(support(Body::unit_square(), Direction(Vec{1.0, 0.0})) == doctest::Approx(1.0));
  CHECK(support(Body::unit_disk(), Direction(normalized(Vec{0.3, -0.9}))) ==
        doctest::Approx(1.0).epsilon(1e-14));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(support(Body::standard_triangle(), Direction(Vec{s, s})) ==
        doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("contains is strict interior") {
  Body sq = Body::unit_square();
  CHECK(contains(sq, Vec{0.5, 0.5}));
  CHECK_FALSE(contains(sq, Vec{1.5, 0.5}));
  CHECK_FALSE(contains(Body::unit_disk(), Vec{1.0, 0.0}));
  CHECK_FALSE(contains(sq, Vec{0.0, 0.5}));
}

TEST_CASE("affine images") {
  Body t = Body::standard_triangle();
  Body same = affine_image(t, Mat::identity(2), Vec{0.0, 0.0});
  CHECK(volume(same) == doctest::Approx(0.5));
  Mat two = Mat::identity(2);
  two(0, 0) = two(1, 1) = 2.0;
  Body tt = affine_image(t, two, Vec{0.0, 0.0});
  CHECK(volume(tt) == doctest::Approx(2.0).epsilon(1e-14));
  Mat rot(2);
  rot(0, 0) = std::cos(0.7);
  rot(0, 1) = -std::sin(0.7);
  rot(1, 0) = std::sin(0.7);
  rot(1, 1) = std::cos(0.7);
  Body disk = affine_image(Body::unit_disk(), rot, Vec{0.0, 0.0});
  CHECK(hausdorff(disk, Body::unit_disk()) < 1e-12);
  Mat sing(2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(affine_image(t, sing, Vec{0.0, 0.0}), InvalidBody);

  Body cube = Body::box(Vec{0.0, 0.0, 0.0}, Vec{1.0, 1.0, 1.0});
  Mat shear3 = Mat::identity(3);
  shear3(0, 1) = 0.5;
  Body sheared = affine_image(cube, shear3, Vec{0.0, 0.0, 0.0});
  CHECK(sheared.kind == BodyKind::polytope);
  CHECK(volume(sheared) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("polar duals") {
  Body disk = Body::unit_disk();
  CHECK(hausdorff(polar(disk), disk) < 1e-12);

  Body sq = Body::box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
  Body cross = polar(sq);
  CHECK(volume(cross) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(support(cross, Direction(Vec{1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-13));

  Mat two = Mat::identity(2);
  two(0, 0) = two(1, 1) = 2.0;
  Body big = affine_image(disk, two, Vec{0.0, 0.0});
  Body small = polar(big);
  CHECK(support(small, Direction(Vec{0.0, 1.0})) == doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(polar(Body::unit_square()), NotSymmetric);
}

TEST_CASE("bipolar round trip") {
  Body sq = Body::box(Vec{-1.0, -0.5}, Vec{1.0, 0.5});
  CHECK(hausdorff(polar(polar(sq)), as_polytope(sq)) < 1e-8);
  Mat a(2);
  a(0, 0) = 1.2;
  a(0, 1) = 0.3;
  a(1, 0) = -0.1;
  a(1, 1) = 0.8;
  Body e = affine_image(Body::unit_disk(), a, Vec{0.0, 0.0});
  CHECK(hausdorff(polar(polar(e)), e) < 1e-10);
  // 3D: cube <-> octahedron.
  Body cube = Body::box(Vec{-1.0, -1.0, -1.0}, Vec{1.0, 1.0, 1.0});
  Body oct = polar(cube);
  CHECK(volume(oct) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  Body back = polar(oct);
  CHECK(volume(back) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("section barycenters") {
  Body sq = Body::unit_square();
  Vec b = section_barycenter(sq, {Direction(Vec{0.0, 1.0}), 0.9});
  CHECK(b[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(b[1] == doctest::Approx(0.9).epsilon(1e-13));

  Vec bd = section_barycenter(Body::unit_disk(), {Direction(Vec{0.0, 1.0}), 0.5});
  CHECK(bd[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(bd[1] == doctest::Approx(0.5).epsilon(1e-13));

  Vec bt = section_barycenter(Body::standard_triangle(), {Direction(Vec{0.0, 1.0}), 0.5});
  CHECK(bt[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(bt[1] == doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(section_barycenter(sq, {Direction(Vec{0.0, 1.0}), 1.5}), EmptySection);

  // 3D section of a cube.
  Body cube = Body::box(Vec{0.0, 0.0, 0.0}, Vec{1.0, 1.0, 1.0});
  Vec n3 = normalized(Vec{1.0, 1.0, 1.0});
  Vec b3 = section_barycenter(as_polytope(cube), {Direction(n3), 0.5 * std::sqrt(3.0)});
  for (int i = 0; i < 3; ++i) CHECK(b3[i] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cap volumes") {
  Body sq = Body::unit_square();
  CHECK(cap_volume(sq, {Direction(Vec{0.0, 1.0}), 0.5}) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(cap_volume(Body::unit_disk(), {Direction(Vec{1.0, 0.0}), 0.0}) ==
        doctest::Approx(pi / 2).epsilon(1e-11));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(cap_volume(sq, {Direction(Vec{s, s}), 3.0 / (2.0 * std::sqrt(2.0))}) ==
        doctest::Approx(0.125).epsilon(1e-12));
  // Cut misses: full volume or zero.
  CHECK(cap_volume(sq, {Direction(Vec{0.0, 1.0}), -1.0}) == doctest::Approx(1.0));
  CHECK(cap_volume(sq, {Direction(Vec{0.0, 1.0}), 2.0}) == doctest::Approx(0.0));
  // 3D cap of a ball: half.
  Body ball = Body::ellipsoid(Vec{0.0, 0.0, 0.0}, Mat::identity(3));
  CHECK(cap_volume(ball, {Direction(Vec{0.0, 0.0, 1.0}), 0.0}) ==
        doctest::Approx(2.0 * pi / 3.0).epsilon(1e-11));
}

TEST_CASE("cut depth") {
  Body sq = Body::unit_square();
  CHECK(cut_depth(sq, Direction(Vec{0.0, 1.0}), 0.25) == doctest::Approx(0.75).epsilon(1e-11));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(cut_depth(sq, Direction(Vec{s, s}), 0.125) ==
        doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-11));
  CHECK(std::abs(cut_depth(Body::unit_disk(), Direction(normalized(Vec{2.0, -1.0})), pi / 2)) <
        1e-11);
  CHECK_THROWS_AS(cut_depth(sq, Direction(Vec{0.0, 1.0}), 2.0), DeltaOutOfRange);
}

TEST_CASE("cap volume round trip on random cuts") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uang(0, 2 * pi), udel(0.01, 0.9);
  for (const Body& body : {Body::unit_square(), Body::standard_triangle(), Body::unit_disk(),
                           fbtest::random_convex_polygon(rng, 7, false)}) {
    double vol = volume(body);
    for (int k = 0; k < 100; ++k) {
      double th = uang(rng);
      Direction v(Vec{std::cos(th), std::sin(th)});
      double delta = udel(rng) * vol;
      double r = cut_depth(body, v, delta);
      CHECK(std::abs(cap_volume(body, {v, r}) - delta) <= 1e-10 * vol);
    }
  }
}

TEST_CASE("cap volume is monotone and spans [0, vol]") {
  Body t = Body::standard_triangle();
  Direction v(normalized(Vec{1.0, 2.0}));
  double lo = -support(t, Direction(-1.0 * v.v));
  double hi = support(t, v);
  CHECK(cap_volume(t, {v, lo}) == doctest::Approx(volume(t)).epsilon(1e-12));
  CHECK(cap_volume(t, {v, hi}) == doctest::Approx(0.0));
  double prev = volume(t);
  for (int k = 1; k <= 50; ++k) {
    double r = lo + (hi - lo) * k / 50.0;
    double c = cap_volume(t, {v, r});
    CHECK(c <= prev + 1e-12);
    prev = c;
  }
}

TEST_CASE("blaschke-santalo products") {
  // Equality for ellipsoids.
  Mat a(2);
  a(0, 0) = 1.4;
  a(0, 1) = 0.2;
  a(1, 0) = 0.0;
  a(1, 1) = 0.7;
  Body e = affine_image(Body::unit_disk(), a, Vec{0.0, 0.0});
  double w2 = unit_ball_volume(2);
  CHECK(volume(e) * volume(polar(e)) == doctest::Approx(w2 * w2).epsilon(1e-9));
  // Inequality for symmetric polytopes.
  std::mt19937 rng(21);
  for (int k = 0; k < 20; ++k) {
    Body p = fbtest::random_convex_polygon(rng, 8 + (k % 5), true);
    CHECK(volume(p) * volume(polar(p)) <= w2 * w2 * (1 + 1e-9));
  }
}

TEST_CASE("body validation errors") {
  CHECK_THROWS_AS(Body::box(Vec{1.0, 0.0}, Vec{0.0, 1.0}), InvalidBody);
  CHECK_THROWS_AS(Body::simplex({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{2.0, 0.0}}), InvalidBody);
  Mat z(2);
  CHECK_THROWS_AS(Body::ellipsoid(Vec{0.0, 0.0}, z), InvalidBody);
  CHECK_THROWS_AS(Direction(Vec{1.0, 1.0}), InvalidBody);
}

TEST_SUITE_END();
