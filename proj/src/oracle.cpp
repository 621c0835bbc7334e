#include "floatberg/oracle.hpp"

#include <cmath>
#include <vector>

#include "floatberg/errors.hpp"
#include "floatberg/parallel.hpp"
#include "floatberg/quadrature.hpp"

namespace floatberg {

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double CounterRng::uniform(std::uint64_t counter) const {
  std::uint64_t v = splitmix64(splitmix64(seed) ^ counter);
  return (v >> 11) * 0x1.0p-53;
}

namespace {

// Shared rejection loop: g(x) evaluated at accepted points, zero otherwise.
// Estimate is boxvol * mean(g * indicator); standard error from the sample
// variance over all draws. Partial sums are merged in fixed chunk order.
template <class G>
McResult mc_over_body(const Body& body, std::int64_t n, std::uint64_t seed, G&& g) {
  if (n < 1) throw Error("monte carlo: sample count must be >= 1");
  Vec lo, hi;
  bounding_box(body, lo, hi);
  double boxvol = 1;
  for (int i = 0; i < body.n; ++i) boxvol *= hi[i] - lo[i];
  CounterRng rng{seed};

  const std::int64_t chunk = 1 << 14;
  std::int64_t nchunks = (n + chunk - 1) / chunk;
  std::vector<double> sums(static_cast<std::size_t>(nchunks), 0.0);
  std::vector<double> sqsums(static_cast<std::size_t>(nchunks), 0.0);
  parallel_for(static_cast<std::size_t>(nchunks), [&](std::size_t ci) {
    std::int64_t begin = static_cast<std::int64_t>(ci) * chunk;
    std::int64_t end = std::min(n, begin + chunk);
    double s = 0, ss = 0;
    Vec x(body.n);
    for (std::int64_t k = begin; k < end; ++k) {
      for (int i = 0; i < body.n; ++i) {
        double u = rng.uniform(static_cast<std::uint64_t>(k) * body.n + i);
        x[i] = lo[i] + (hi[i] - lo[i]) * u;
      }
      if (contains(body, x)) {
        double v = g(x);
        s += v;
        ss += v * v;
      }
    }
    sums[ci] = s;
    sqsums[ci] = ss;
  });
  double s = pairwise_sum(sums);
  double ss = pairwise_sum(sqsums);
  double mean = s / n;
  double var = std::max(0.0, ss / n - mean * mean);
  McResult r;
  r.estimate = boxvol * mean;
  r.stderr_est = boxvol * std::sqrt(var / n);
  return r;
}

}  // namespace

McResult mc_volume(const Body& body, std::int64_t n, std::uint64_t seed) {
  return mc_over_body(body, n, seed, [](const Vec&) { return 1.0; });
}

McResult mc_laplace(const Body& body, const Vec& t, std::int64_t n, std::uint64_t seed) {
  return mc_over_body(body, n, seed, [&](const Vec& x) { return std::exp(-2.0 * dot(x, t)); });
}

McResult mc_cap_volume(const Body& body, const CutSpec& cut, std::int64_t n, std::uint64_t seed) {
  return mc_over_body(body, n, seed, [&](const Vec& x) {
    return dot(x, cut.v.v) >= cut.r ? 1.0 : 0.0;
  });
}

}  // namespace floatberg
