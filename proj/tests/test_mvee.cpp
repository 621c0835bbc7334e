#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "floatberg/errors.hpp"
#include "floatberg/mvee.hpp"
#include "floatberg/tolerances.hpp"
#include "test_support.hpp"

using namespace floatberg;
using std::numbers::pi;

TEST_SUITE_BEGIN("mvee");

TEST_CASE("square corners give the centered disk of radius sqrt(2)") {
  std::vector<Vec> pts = {Vec{-1.0, -1.0}, Vec{1.0, -1.0}, Vec{1.0, 1.0}, Vec{-1.0, 1.0}};
  Body e = mvee(pts);
  CHECK(std::abs(e.center[0]) < 1e-7);
  CHECK(std::abs(e.center[1]) < 1e-7);
  for (int k = 0; k < 8; ++k) {
    double th = 2 * pi * k / 8;
    Direction v(Vec{std::cos(th), std::sin(th)});
    CHECK(support(e, v) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
  }
  CHECK(mvee_max_radius(e, pts) <= 1.0 + kTol.mvee_slack);
}

TEST_CASE("points on a circle recover that circle") {
  std::vector<Vec> pts;
  for (int k = 0; k < 40; ++k) {
    double th = 2 * pi * k / 40;
    pts.push_back(Vec{0.3 + 1.7 * std::cos(th), -0.2 + 1.7 * std::sin(th)});
  }
  Body e = mvee(pts);
  CHECK(e.center[0] == doctest::Approx(0.3).epsilon(1e-5));
  CHECK(e.center[1] == doctest::Approx(-0.2).epsilon(1e-5));
  CHECK(volume(e) == doctest::Approx(pi * 1.7 * 1.7).epsilon(1e-5));
}

TEST_CASE("triangle vertices give the Steiner circumellipse") {
  std::vector<Vec> pts = {Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.0, 1.0}};
  Body e = mvee(pts);
  CHECK(e.center[0] == doctest::Approx(1.0 / 3).epsilon(1e-6));
  CHECK(e.center[1] == doctest::Approx(1.0 / 3).epsilon(1e-6));
  // Steiner circumellipse area = 4 pi / (3 sqrt 3) * area(T).
  CHECK(volume(e) == doctest::Approx(4 * pi / (3 * std::sqrt(3.0)) * 0.5).epsilon(1e-6));
  // Containment with the certified slack, and all three vertices near the
  // boundary (they are the support set).
  double r = mvee_max_radius(e, pts);
  CHECK(r <= 1.0 + kTol.mvee_slack);
  Mat ai = inverse(e.shape);
  for (const Vec& p : pts) CHECK(norm(ai * (p - e.center)) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("john containment on random clouds") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> pts;
    int m = 5 + trial % 9;
    for (int i = 0; i < m; ++i) pts.push_back(Vec{u(rng), 0.7 * u(rng) + 0.2 * u(rng)});
    Body e;
    try {
      e = mvee(pts);
    } catch (const DegenerateBody&) {
      continue;  // nearly collinear draw
    }
    CHECK(mvee_max_radius(e, pts) <= 1.0 + kTol.mvee_slack);
    Body inner = john_inner(e, 2);
    auto hull = fbtest::hull2d(pts);
    if (hull.size() < 3) continue;
    // Sample the inner ellipsoid boundary, shrunk by 1e-6.
    for (int k = 0; k < 64; ++k) {
      double th = 2 * pi * k / 64;
      Vec bpt = inner.center + (1.0 - 1e-6) * (inner.shape * Vec{std::cos(th), std::sin(th)});
      CHECK(fbtest::in_hull(hull, bpt, 1e-9));
    }
  }
}

TEST_CASE("john_inner") {
  Body disk = Body::unit_disk();
  Body half = john_inner(disk, 2);
  CHECK(half.shape(0, 0) == doctest::Approx(0.5));
  Mat a(2);
  a(0, 0) = 2;
  a(1, 1) = 1;
  Body e = john_inner(Body::ellipsoid(Vec{0.0, 0.0}, a), 2);
  CHECK(e.shape(0, 0) == doctest::Approx(1.0));
  CHECK(e.shape(1, 1) == doctest::Approx(0.5));
  Body same = john_inner(Body::ellipsoid(Vec{0.5}, Mat::identity(1)), 1);
  CHECK(same.shape(0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(john_inner(Body::unit_square(), 2), Error);
}

TEST_CASE("degenerate input") {
  CHECK_THROWS_AS(mvee({Vec{0.0, 0.0}, Vec{1.0, 1.0}}), DegenerateBody);
  CHECK_THROWS_AS(mvee({Vec{0.0, 0.0}, Vec{1.0, 1.0}, Vec{2.0, 2.0}, Vec{3.0, 3.0}}),
                  DegenerateBody);
}

TEST_SUITE_END();
