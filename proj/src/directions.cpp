#include "floatberg/directions.hpp"

#include <cmath>
#include <numbers>

#include "floatberg/errors.hpp"

namespace floatberg {

int default_direction_count(int n) {
  switch (n) {
    case 1:
      return 2;
    case 2:
      return 720;
    case 3:
      return 2000;
    default:
      throw Error("direction grid: dimension out of range");
  }
}

std::vector<Direction> direction_grid(int n, int count) {
  if (count < 1) throw Error("direction grid: count must be positive");
  std::vector<Direction> out;
  if (n == 1) {
    out.emplace_back(Vec{1.0});
    out.emplace_back(Vec{-1.0});
    return out;
  }
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      double th = 2.0 * std::numbers::pi * k / count;
      out.emplace_back(normalized(Vec{std::cos(th), std::sin(th)}));
    }
    return out;
  }
  if (n == 3) {
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      double z = 1.0 - 2.0 * (k + 0.5) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double th = ga * k;
      out.emplace_back(normalized(Vec{r * std::cos(th), r * std::sin(th), z}));
    }
    return out;
  }
  throw Error("direction grid: dimension out of range");
}

}  // namespace floatberg
