#pragma once

#include <optional>
#include <string>
#include <variant>

#include "homeo/compact.hpp"
#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace homeo {

struct Displacement {
    double value = 0.0;
    Complex at{0.0, 0.0};
};

/// min over the cloud of |h(p) - p|, with an attaining point (the first one
/// in cloud order).
Displacement min_displacement(const Homeo& h, const CompactSet& k);

/// Outcome of the boundary degree computation for z -> h(z) - z.
struct WindingResult {
    long long index = 0;
    double min_boundary_displacement = 0.0;
    int refinements = 0; // step doublings performed
    int steps = 0;       // accepted sample count
    double total_turn = 0.0;
};

/// Winding number of h(z) - z along the disk boundary, by summed argument
/// increments with step doubling until every increment is below pi/2. A
/// nonzero index certifies a fixed point inside the disk. Throws
/// InconclusiveError if some boundary sample has displacement below 1e-9
/// (zero on the boundary) or the refinement cap of 2^20 steps is exceeded.
/// Requires initial_steps >= 16.
WindingResult winding_certificate(const Homeo& h, const Disk& disk, int initial_steps = 64);

struct FixedPointExists {
    long long winding = 0; // != 0
    Disk boundary;
};

struct FixedPointFree {
    Disk region;
    double margin = 0.0; // > 0: certified lower bound on inf |h(z) - z|
};

struct Inconclusive {
    std::string reason;
};

struct Certificate {
    std::variant<FixedPointExists, FixedPointFree, Inconclusive> verdict;
    std::optional<Complex> witness; // minimizing grid point, when one was seen
};

/// Validating constructors: existence demands a nonzero winding number,
/// freeness a positive margin.
Certificate make_exists_certificate(long long winding, const Disk& boundary);
Certificate make_free_certificate(const Disk& region, double margin, Complex witness);
Certificate make_inconclusive_certificate(std::string reason,
                                          std::optional<Complex> witness = std::nullopt);

/// Covers the closed region by a lattice of covering radius s <= spacing
/// and takes the grid minimum m of |h(z) - z|. If m > (L + 1) * s with L a
/// Lipschitz bound for h on the slightly enlarged region, every point z
/// satisfies |h(z) - z| >= m - L*s - s > 0, and the certificate carries the
/// margin m - (L + 1) * s. Otherwise inconclusive, with the minimizing grid
/// point as witness.
Certificate certify_fixed_point_free(const Homeo& h, const Disk& region, double spacing);

/// A radius eps <= max_eps with |h(c) - c| > eps * (L + 1), L the Lipschitz
/// bound of h on the closed disk D(c; eps): then h[D(c; eps)] lies in the
/// disk of radius L*eps about h(c), disjoint from D(c; eps). Found by
/// halving from min(max_eps, |h(c) - c| / 3). Throws DomainError when c is
/// fixed within tolerance, and propagates NoBoundError.
double separation_radius(const Homeo& h, Complex c, double max_eps);

} // namespace homeo
