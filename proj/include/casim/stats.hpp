#pragma once

#include <cmath>
#include <cstdint>

namespace casim {

struct WilsonInterval {
    double lo;
    double hi;
};

/// Wilson score interval for a binomial proportion (default 95%).
inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                      double z = 1.959963984540054) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    double lo = center - half;
    double hi = center + half;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

}  // namespace casim
