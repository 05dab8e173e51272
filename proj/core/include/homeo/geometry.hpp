#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "homeo/errors.hpp"

namespace homeo {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// A disk in the plane. `closed` distinguishes the closed disk from the
/// open one where membership matters.
struct Disk {
    Complex center{0.0, 0.0};
    double radius = 1.0;
    bool closed = true;

    bool contains(Complex z) const {
        const double d = std::abs(z - center);
        return closed ? d <= radius : d < radius;
    }
};

inline void validate(const Disk& disk) {
    if (!(disk.radius > 0.0) || !std::isfinite(disk.radius) || !std::isfinite(disk.center.real()) ||
        !std::isfinite(disk.center.imag())) {
        throw DomainError("disk requires a finite center and radius > 0");
    }
}

/// Polar angle normalized to [0, 2*pi).
inline double polar_angle(Complex z) {
    double theta = std::arg(z);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    return theta;
}

/// Radial stretch taking the open unit disk onto the whole plane,
/// z -> z / (1 - |z|). Throws EvalError at or outside the unit circle.
inline Complex disk_to_plane(Complex z) {
    const double r = std::abs(z);
    if (!(r < 1.0)) {
        throw EvalError("disk point reached modulus >= 1 during disk-to-plane transport");
    }
    return z / (1.0 - r);
}

/// Inverse of disk_to_plane, w -> w / (1 + |w|); defined on the whole plane.
inline Complex plane_to_disk(Complex w) {
    return w / (1.0 + std::abs(w));
}

} // namespace homeo
