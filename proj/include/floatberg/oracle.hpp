// Seeded Monte Carlo reference integrators. A counter-based generator keeps
// streams reproducible and splittable across workers.
#pragma once

#include <cstdint>

#include "floatberg/body.hpp"

namespace floatberg {

struct McResult {
  double estimate = 0;
  double stderr_est = 0;
};

// Stateless counter-based generator: identical (seed, counter) pairs always
// produce the same draw.
struct CounterRng {
  std::uint64_t seed = 0;
  double uniform(std::uint64_t counter) const;  // [0, 1)
};

McResult mc_volume(const Body& body, std::int64_t n, std::uint64_t seed);
McResult mc_laplace(const Body& body, const Vec& t, std::int64_t n, std::uint64_t seed);
McResult mc_cap_volume(const Body& body, const CutSpec& cut, std::int64_t n, std::uint64_t seed);

}  // namespace floatberg
