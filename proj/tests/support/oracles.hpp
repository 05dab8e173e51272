#pragma once

// Independent reference computations the tests check the library against.
// Everything here goes through brute force or textbook numerics only and
// never calls the code path it is used to verify.

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace oracle {

// Inverts a strictly increasing profile by bisection on [0, hi].
inline double bisect_increasing(const std::function<double(double)>& profile, double target,
                                double hi) {
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (profile(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Truncated weighted series over explicit suprema.
inline double weighted_series(const std::vector<double>& sups) {
    double sum = 0.0;
    for (std::size_t n = 1; n <= sups.size(); ++n) {
        const double s = sups[n - 1];
        sum += std::ldexp(s / (1.0 + s), -static_cast<int>(n));
    }
    return sum;
}

// Exhaustive displacement minimum of h over a square lattice on the disk.
struct ScanResult {
    double min = 0.0;
    homeo::Complex at{0.0, 0.0};
};

inline ScanResult brute_min_displacement(const homeo::Homeo& h, const homeo::Disk& disk,
                                         double spacing) {
    ScanResult best{std::numeric_limits<double>::infinity(), disk.center};
    const int half = static_cast<int>(std::ceil(disk.radius / spacing));
    for (int j = -half; j <= half; ++j) {
        for (int i = -half; i <= half; ++i) {
            const homeo::Complex z = disk.center + homeo::Complex{i * spacing, j * spacing};
            if (std::abs(z - disk.center) > disk.radius) continue;
            const double d = std::abs(h.eval(z) - z);
            if (d < best.min) best = ScanResult{d, z};
        }
    }
    return best;
}

// Largest |h(z) - h(w)| / |z - w| over sampled pairs inside the disk.
template <typename Rng>
double max_difference_quotient(const homeo::Homeo& h, const homeo::Disk& disk, Rng& rng,
                               int pairs) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const double r1 = disk.radius * std::sqrt(unit(rng));
        const double r2 = disk.radius * std::sqrt(unit(rng));
        const double a1 = 2.0 * 3.14159265358979323846 * unit(rng);
        const double a2 = 2.0 * 3.14159265358979323846 * unit(rng);
        const homeo::Complex z = disk.center + std::polar(r1, a1);
        const homeo::Complex w = disk.center + std::polar(r2, a2);
        if (z == w) continue;
        worst = std::max(worst, std::abs(h.eval(z) - h.eval(w)) / std::abs(z - w));
    }
    return worst;
}

} // namespace oracle
