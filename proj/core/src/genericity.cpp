#include "homeo/genericity.hpp"

#include <cmath>
#include <numbers>

#include "homeo/errors.hpp"
#include "homeo/fixed_point.hpp"

namespace homeo {

namespace {

constexpr int kHalvingCap = 60;

// Fixed candidate ray; rotated in small fixed steps when it lands too close
// to an obstruction, so runs are reproducible.
const Complex kRayDirection = std::polar(1.0, std::numbers::pi / 7.0);
const Complex kRayNudge = std::polar(1.0, 1.0 / 17.0);

// An offset of modulus `radius` whose distance to every obstruction is at
// least radius / 2.
Complex pick_offset(double radius, const std::vector<Complex>& obstructions) {
    Complex dir = kRayDirection;
    for (int attempt = 0; attempt < 64; ++attempt, dir *= kRayNudge) {
        const Complex a = radius * dir;
        bool clear = true;
        for (const Complex& b : obstructions) {
            if (std::abs(a - b) < 0.5 * radius) {
                clear = false;
                break;
            }
        }
        if (clear) return a;
    }
    throw Error("perturbation: no clear direction at this radius");
}

} // namespace

PerturbationReport avoid_fixed_points_on_grid(const Homeo& h, const CompactSet& grid, double eps,
                                              const MetricConfig& cfg) {
    if (!(eps > 0.0)) throw DomainError("perturbation tolerance must be positive");
    validate(cfg);

    // Offsets to avoid: a = c - h(c) would pin c as a fixed point of the
    // translated map, and a = 0 is no perturbation at all.
    std::vector<Complex> obstructions{Complex{0.0, 0.0}};
    obstructions.reserve(grid.points.size() + 1);
    for (const Complex& c : grid.points) obstructions.push_back(c - h.eval(c));

    double radius = 0.5 * eps;
    for (int halving = 0; halving < kHalvingCap; ++halving, radius *= 0.5) {
        const Complex a = pick_offset(radius, obstructions);
        const Homeo perturbed = compose(Homeo::translation(a), h);
        const double achieved = dist(perturbed, h, cfg);
        if (achieved < eps) {
            const Displacement min_disp = min_displacement(perturbed, grid);
            if (!(min_disp.value > 0.0)) {
                throw Error("perturbation: a grid point stayed fixed despite the avoidance margin");
            }
            return PerturbationReport{h, perturbed, a, achieved, min_disp.value, grid};
        }
    }
    throw Error("perturbation: metric did not shrink below eps within the halving cap");
}

EscapeReport nowhere_dense_escape(const Homeo& h, const Cell2& cell, double eps,
                                  const MetricConfig& cfg) {
    if (!(eps > 0.0)) throw DomainError("escape tolerance must be positive");
    validate(cfg);

    // Spot-check the caller's claim that h is the identity off the cell's
    // core: probe chart images between radius rho and rho + 2*eta.
    for (int i = 0; i < 16; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 16.0;
        const double r = (i % 2 == 0) ? cell.rho + 0.5 * cell.eta : cell.rho + 2.0 * cell.eta;
        const Complex q = cell.chart.eval(cell.center + std::polar(r, theta));
        if (std::abs(h.eval(q) - q) > kDefaultTolerance) {
            throw DomainError("escape: the base map moves points outside the cell core");
        }
    }

    double delta = cell.eta;
    for (int halving = 0; halving < kHalvingCap; ++halving, delta *= 0.5) {
        const Homeo composite = compose(cell_bump(cell, delta), h);
        const double achieved = dist(composite, h, cfg);
        if (achieved >= eps) continue;

        // A chart point strictly between radius rho and rho + delta: outside
        // the core, inside the expanded image, and radially moved.
        const double witness_radius = cell.rho + 0.5 * delta;
        if (!(witness_radius > cell.rho)) {
            throw Error("escape: delta shrank below radial resolution");
        }
        const Complex witness = cell.chart.eval(cell.center + Complex{witness_radius, 0.0});
        const double motion = std::abs(composite.eval(witness) - witness);
        if (!(motion > 0.0)) {
            throw Error("escape: witness was not moved by the composite");
        }
        return EscapeReport{cell, delta, composite, achieved, witness, motion};
    }
    throw Error("escape: metric did not shrink below eps within the halving cap");
}

std::vector<ImageConvergenceRow> image_convergence_table(const HomeoSequence& family,
                                                         const CompactSet& k, int n_max,
                                                         const MetricConfig& cfg) {
    if (n_max < 1) throw DomainError("convergence tables need n_max >= 1");
    validate(cfg);
    const CompactSet limit_image = image(family.limit, k);
    std::vector<ImageConvergenceRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const Homeo h_n = family.member(n);
        rows.push_back(ImageConvergenceRow{n, dist(h_n, family.limit, cfg),
                                           hausdorff(image(h_n, k), limit_image)});
    }
    return rows;
}

std::vector<CompositionConvergenceRow> composition_convergence_table(const HomeoSequence& outer,
                                                                     const HomeoSequence& inner,
                                                                     int n_max,
                                                                     const MetricConfig& cfg) {
    if (n_max < 1) throw DomainError("convergence tables need n_max >= 1");
    validate(cfg);
    const Homeo limit_composite = compose(outer.limit, inner.limit);
    std::vector<CompositionConvergenceRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const Homeo g_n = outer.member(n);
        const Homeo h_n = inner.member(n);
        rows.push_back(CompositionConvergenceRow{n, dist(g_n, outer.limit, cfg),
                                                 dist(h_n, inner.limit, cfg),
                                                 dist(compose(g_n, h_n), limit_composite, cfg)});
    }
    return rows;
}

} // namespace homeo
