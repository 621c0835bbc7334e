#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "floatberg/laplace.hpp"
#include "floatberg/oracle.hpp"
#include "test_support.hpp"

using namespace floatberg;
using std::numbers::pi;

TEST_SUITE_BEGIN("laplace");

TEST_CASE("J(0) equals the volume for every variant") {
  Body bodies[] = {Body::unit_square(), Body::standard_triangle(), Body::unit_disk(),
                   Body::box(Vec{-0.5, 0.0, 1.0}, Vec{0.5, 2.0, 1.5})};
  for (const Body& b : bodies) {
    Vec zero(b.n);
    CHECK(laplace(b, zero) == doctest::Approx(volume(b)).epsilon(1e-12));
  }
}

TEST_CASE("box closed form") {
  Body sq = Body::unit_square();
  CHECK(laplace(sq, Vec{1.0, 0.0}) ==
        doctest::Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-14));
  // Small-t series limb: J((1e-9,0)) ~ vol.
  CHECK(laplace(sq, Vec{1e-9, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("square as two simplices matches the box route") {
  Body s1 = Body::simplex({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{1.0, 1.0}});
  Body s2 = Body::simplex({Vec{0.0, 0.0}, Vec{1.0, 1.0}, Vec{0.0, 1.0}});
  Body sq = Body::unit_square();
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int k = 0; k < 50; ++k) {
    Vec t{u(rng), u(rng)};
    double lhs = laplace(s1, t) + laplace(s2, t);
    double rhs = laplace(sq, t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("divided differences survive clustered exponents") {
  // Direction orthogonal to an edge makes two vertex exponents collide.
  Body t = Body::standard_triangle();
  Vec tdir{1.0, 1.0};  // exponents of (1,0) and (0,1) coincide
  double direct = laplace(t, tdir);
  Vec teps{1.0 + 1e-9, 1.0};
  CHECK(laplace(t, teps) == doctest::Approx(direct).epsilon(1e-6));
  // And a diagonal of the sheared square.
  Body tri = Body::simplex({Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.5, 1e-5}});
  CHECK(std::isfinite(std::log(laplace(tri, Vec{2.0, 3.0}))));
}

TEST_CASE("log form stays finite at extreme arguments") {
  Body t = Body::standard_triangle();
  LogLaplace lj(t);
  // |t| ~ 4000: J overflows in linear space, log J must not.
  double lg = lj(Vec{4000.0, -2500.0});
  CHECK(std::isfinite(lg));
  // exponents: max over vertices of -2 v.t = max(0, -8000, 5000) = 5000.
  CHECK(lg < 5000.0);
  CHECK(lg > 4900.0);
}

TEST_CASE("polytope triangulation agrees with the simplex route") {
  Body t = Body::standard_triangle();
  Body tp = as_polytope(t);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int k = 0; k < 30; ++k) {
    Vec tv{u(rng), u(rng)};
    CHECK(laplace(tp, tv) == doctest::Approx(laplace(t, tv)).epsilon(1e-11));
  }
}

TEST_CASE("ellipsoid route brackets against monte carlo") {
  Mat a(2);
  a(0, 0) = 1.5;
  a(0, 1) = 0.4;
  a(1, 0) = 0.0;
  a(1, 1) = 0.8;
  Body e = affine_image(Body::unit_disk(), a, Vec{0.3, -0.2});
  Vec t{1.2, -0.7};
  double closed = laplace(e, t);
  McResult r = mc_laplace(e, t, 4000000, 12);
  CHECK(std::abs(r.estimate - closed) <= 3.0 * r.stderr_est);
}

TEST_CASE("3D simplex and box") {
  Body tet = Body::simplex({Vec{0.0, 0.0, 0.0}, Vec{1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
                            Vec{0.0, 0.0, 1.0}});
  Vec t{0.7, -0.3, 1.1};
  McResult r = mc_laplace(tet, t, 2000000, 13);
  CHECK(std::abs(r.estimate - laplace(tet, t)) <= 3.0 * r.stderr_est);
  Body cube = Body::box(Vec{0.0, 0.0, 0.0}, Vec{1.0, 1.0, 1.0});
  double prod = laplace(cube, t);
  double expect = 1.0;
  for (int i = 0; i < 3; ++i)
    expect *= laplace(Body::box(Vec{0.0}, Vec{1.0}), Vec{t[i]});
  CHECK(prod == doctest::Approx(expect).epsilon(1e-13));
}

TEST_SUITE_END();
