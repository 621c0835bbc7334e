// Deterministic direction grids: signs (n=1), uniform angles (n=2),
// Fibonacci sphere (n=3).
#pragma once

#include <vector>

#include "floatberg/body.hpp"

namespace floatberg {

std::vector<Direction> direction_grid(int n, int count);
int default_direction_count(int n);  // 2 / 720 / 2000

}  // namespace floatberg
