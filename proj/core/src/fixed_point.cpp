#include "homeo/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "homeo/errors.hpp"
#include "homeo/lipschitz.hpp"

namespace homeo {

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr int kStepCap = 1 << 20;
constexpr double kTurnTol = 1e-6;

} // namespace

Displacement min_displacement(const Homeo& h, const CompactSet& k) {
    Displacement best{std::numeric_limits<double>::infinity(), Complex{0.0, 0.0}};
    for (const Complex& p : k.points) {
        const double d = std::abs(h.eval(p) - p);
        if (d < best.value) best = Displacement{d, p};
    }
    return best;
}

WindingResult winding_certificate(const Homeo& h, const Disk& disk, int initial_steps) {
    validate(disk);
    if (initial_steps < 16) throw DomainError("winding computation requires at least 16 steps");

    int refinements = 0;
    for (int steps = initial_steps; steps <= kStepCap; steps *= 2, ++refinements) {
        std::vector<Complex> displacement(steps);
        double min_disp = std::numeric_limits<double>::infinity();
        for (int k = 0; k < steps; ++k) {
            const Complex z =
                disk.center + std::polar(disk.radius, 2.0 * std::numbers::pi * k / steps);
            displacement[k] = h.eval(z) - z;
            min_disp = std::min(min_disp, std::abs(displacement[k]));
            if (std::abs(displacement[k]) < kBoundaryTol) {
                throw InconclusiveError(
                    "winding: boundary sample with displacement below tolerance");
            }
        }

        double total = 0.0;
        bool small_steps = true;
        for (int k = 0; k < steps; ++k) {
            const Complex next = displacement[(k + 1) % steps];
            const double turn = std::arg(next * std::conj(displacement[k]));
            if (std::abs(turn) >= 0.5 * std::numbers::pi) {
                small_steps = false;
                break;
            }
            total += turn;
        }
        if (!small_steps) continue;

        const long long index = std::llround(total / (2.0 * std::numbers::pi));
        if (std::abs(total - 2.0 * std::numbers::pi * static_cast<double>(index)) > kTurnTol) {
            throw InconclusiveError("winding: summed turns are not an integer multiple of 2*pi");
        }
        return WindingResult{index, min_disp, refinements, steps, total};
    }
    throw InconclusiveError("winding: refinement cap exceeded");
}

Certificate make_exists_certificate(long long winding, const Disk& boundary) {
    if (winding == 0) throw DomainError("an existence certificate needs a nonzero winding number");
    return Certificate{FixedPointExists{winding, boundary}, std::nullopt};
}

Certificate make_free_certificate(const Disk& region, double margin, Complex witness) {
    if (!(margin > 0.0)) throw DomainError("a freeness certificate needs a positive margin");
    return Certificate{FixedPointFree{region, margin}, witness};
}

Certificate make_inconclusive_certificate(std::string reason, std::optional<Complex> witness) {
    return Certificate{Inconclusive{std::move(reason)}, witness};
}

Certificate certify_fixed_point_free(const Homeo& h, const Disk& region, double spacing) {
    validate(region);
    if (!(spacing > 0.0)) throw DomainError("certification spacing must be positive");

    // Covering radius strictly below the requested spacing so that margins
    // pinned at exact thresholds stay on the right side of rounding.
    const double s = spacing * (1.0 - 1e-9);
    const double pitch = s * std::numbers::sqrt2;
    const double reach = region.radius + s; // lattice points that may cover the rim

    double lips = 0.0;
    try {
        lips = lipschitz_bound(h, Disk{region.center, reach, true});
    } catch (const NoBoundError&) {
        return make_inconclusive_certificate("no modulus of continuity");
    }

    const int half = static_cast<int>(std::ceil(reach / pitch));
    const double reach2 = reach * reach;
    const double cx = region.center.real();
    const double cy = region.center.imag();

    double best2 = std::numeric_limits<double>::infinity();
    Complex witness = region.center;
    for (int j = -half; j <= half; ++j) {
        const double y = cy + j * pitch;
        const double dy2 = (y - cy) * (y - cy);
        for (int i = -half; i <= half; ++i) {
            const double x = cx + i * pitch;
            const double dx = x - cx;
            if (dx * dx + dy2 > reach2) continue;
            const Complex z{x, y};
            const Complex w = h.eval(z);
            const double ux = w.real() - x;
            const double uy = w.imag() - y;
            const double d2 = ux * ux + uy * uy;
            if (d2 < best2) {
                best2 = d2;
                witness = z;
            }
        }
    }

    const double grid_min = std::sqrt(best2);
    const double slack = (lips + 1.0) * s;
    if (grid_min > slack) {
        return make_free_certificate(region, grid_min - slack, witness);
    }
    return make_inconclusive_certificate("grid minimum does not dominate (L+1) * covering radius",
                                         witness);
}

double separation_radius(const Homeo& h, Complex c, double max_eps) {
    if (!(max_eps > 0.0)) throw DomainError("separation radius cap must be positive");
    const double disp = std::abs(h.eval(c) - c);
    if (disp <= kBoundaryTol) {
        throw DomainError("separation radius undefined: the point is fixed within tolerance");
    }
    double eps = std::min(max_eps, disp / 3.0);
    for (int iter = 0; iter < 60; ++iter) {
        const double lips = lipschitz_bound(h, Disk{c, eps, true});
        // The image of D(c; eps) sits within lips * eps of h(c); disjointness
        // from D(c; eps) follows when |h(c) - c| exceeds (lips + 1) * eps.
        if (disp > (lips + 1.0) * eps) return eps;
        eps *= 0.5;
    }
    throw InconclusiveError("separation radius: halving cap exceeded");
}

} // namespace homeo
