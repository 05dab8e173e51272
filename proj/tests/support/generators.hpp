#pragma once

// Seeded random generators for property tests.

#include <cmath>
#include <random>
#include <vector>

#include "homeo/compact.hpp"
#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline homeo::Complex point_in_disk(Rng& rng, homeo::Complex center, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
    return center + std::polar(r, theta);
}

inline homeo::Homeo primitive(Rng& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (kind(rng)) {
        case 0: return homeo::Homeo::identity();
        case 1: return homeo::Homeo::translation(point_in_disk(rng, {0.0, 0.0}, 2.0));
        case 2: return homeo::Homeo::rotation(2.0 * 3.14159265358979323846 * unit(rng));
        case 3: return homeo::Homeo::scaling(0.5 + 1.5 * unit(rng));
        default: return homeo::Homeo::conjugation();
    }
}

inline homeo::RadialBump bump_params(Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const homeo::Complex center = point_in_disk(rng, {0.0, 0.0}, 0.3);
    const double rho = 0.05 + 0.25 * unit(rng);
    const double room = 0.5 * (0.95 - std::abs(center) - rho);
    const double eta = std::min(0.15, room) * (0.3 + 0.7 * unit(rng));
    const double delta = eta * unit(rng);
    return homeo::RadialBump{center, rho, delta, eta};
}

// Arbitrary expression tree, including disk transports and cell bumps.
inline homeo::Homeo homeomorphism(Rng& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, 9);
    const int k = depth <= 0 ? 0 : kind(rng);
    if (k <= 4) return primitive(rng);
    if (k <= 6) return compose(homeomorphism(rng, depth - 1), homeomorphism(rng, depth - 1));
    if (k <= 7) return inverse(homeomorphism(rng, depth - 1));
    if (k <= 8) {
        const homeo::RadialBump b = bump_params(rng);
        return plane_from_disk(homeo::DiskMap::radial_bump(b.center, b.rho, b.delta, b.eta));
    }
    const homeo::RadialBump b = bump_params(rng);
    return cell_bump(homeo::make_cell(homeo::Homeo::identity(), b.center, b.rho, b.eta), b.delta);
}

// Tree built from grammar constructs only, so printing loses nothing.
inline homeo::Homeo parseable(Rng& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, 9);
    const int k = depth <= 0 ? 0 : kind(rng);
    if (k <= 4) return primitive(rng);
    if (k <= 6) return compose(parseable(rng, depth - 1), parseable(rng, depth - 1));
    if (k <= 7) {
        homeo::Homeo child = parseable(rng, depth - 1);
        return inverse(child);
    }
    const homeo::RadialBump b = bump_params(rng);
    if (k <= 8) {
        return plane_from_disk(homeo::DiskMap::radial_bump(b.center, b.rho, b.delta, b.eta));
    }
    return cell_bump(homeo::make_cell(homeo::Homeo::identity(), b.center, b.rho, b.eta), b.delta);
}

inline homeo::CompactSet cloud(Rng& rng, int n, homeo::Complex center, double radius) {
    std::vector<homeo::Complex> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(point_in_disk(rng, center, radius));
    return homeo::make_compact_set(std::move(pts));
}

} // namespace gen
