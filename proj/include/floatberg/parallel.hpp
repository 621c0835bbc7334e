// Fixed-size worker pool over independent index ranges. Results are written
// by index, so totals do not depend on scheduling. FLOATBERG_THREADS caps the
// pool size.
#pragma once

#include <cstddef>
#include <functional>

namespace floatberg {

int worker_count();

// Runs f(i) for i in [0, n). Falls back to serial when nested inside another
// parallel_for or when n is tiny.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace floatberg
