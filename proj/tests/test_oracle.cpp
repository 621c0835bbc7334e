#include <doctest.h>

#include <cmath>
#include <numbers>

#include "floatberg/laplace.hpp"
#include "floatberg/oracle.hpp"

using namespace floatberg;
using std::numbers::pi;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("determinism under a fixed seed") {
  Body disk = Body::unit_disk();
  McResult a = mc_volume(disk, 100000, 42);
  McResult b = mc_volume(disk, 100000, 42);
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_est == b.stderr_est);
}

TEST_CASE("disjoint seeds agree within 4 joint standard errors") {
  Body t = Body::standard_triangle();
  McResult a = mc_volume(t, 400000, 1);
  McResult b = mc_volume(t, 400000, 2);
  double joint = std::hypot(a.stderr_est, b.stderr_est);
  CHECK(std::abs(a.estimate - b.estimate) <= 4.0 * joint);
}

TEST_CASE("known volumes bracketed at 3 sigma") {
  McResult d = mc_volume(Body::unit_disk(), 1000000, 7);
  CHECK(std::abs(d.estimate - pi) <= 3.0 * d.stderr_est);
  McResult t = mc_volume(Body::standard_triangle(), 1000000, 8);
  CHECK(std::abs(t.estimate - 0.5) <= 3.0 * t.stderr_est);
}

TEST_CASE("mc_laplace at t=0 equals mc_volume on the same stream") {
  Body sq = Body::unit_square();
  McResult v = mc_volume(sq, 200000, 3);
  McResult l = mc_laplace(sq, Vec{0.0, 0.0}, 200000, 3);
  CHECK(l.estimate == doctest::Approx(v.estimate).epsilon(1e-14));
}

TEST_CASE("mc_laplace brackets the box closed form") {
  Body sq = Body::unit_square();
  double exact = (1.0 - std::exp(-2.0)) / 2.0;  // 0.43233235838169365
  McResult r = mc_laplace(sq, Vec{1.0, 0.0}, 2000000, 5);
  CHECK(std::abs(r.estimate - exact) <= 3.0 * r.stderr_est);
  CHECK(laplace(sq, Vec{1.0, 0.0}) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("mc_laplace brackets the simplex closed form") {
  Body t = Body::standard_triangle();
  Vec tv{3.0, -1.0};
  double closed = laplace(t, tv);
  CHECK(closed == doctest::Approx(0.37853431352017952).epsilon(1e-12));
  McResult r = mc_laplace(t, tv, 4000000, 6);
  CHECK(std::abs(r.estimate - closed) <= 3.0 * r.stderr_est);
}

TEST_CASE("mc_cap_volume matches known caps") {
  Body sq = Body::unit_square();
  McResult a = mc_cap_volume(sq, {Direction(Vec{0.0, 1.0}), 0.5}, 400000, 9);
  CHECK(std::abs(a.estimate - 0.5) <= 3.0 * a.stderr_est);
  double s = 1.0 / std::sqrt(2.0);
  McResult b = mc_cap_volume(sq, {Direction(Vec{s, s}), 3.0 / (2.0 * std::sqrt(2.0))}, 400000, 10);
  CHECK(std::abs(b.estimate - 0.125) <= 3.0 * b.stderr_est);
  McResult c = mc_cap_volume(Body::unit_disk(), {Direction(Vec{1.0, 0.0}), 0.0}, 400000, 11);
  CHECK(std::abs(c.estimate - pi / 2) <= 3.0 * c.stderr_est);
}

TEST_SUITE_END();
