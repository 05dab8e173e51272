#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace homeo {

/// Finite point cloud standing in for a compact subset of the plane.
/// `net_resolution`, when known, records how fine a net the cloud is of the
/// underlying compact; image() rescales it by a Lipschitz bound when one is
/// available and drops it otherwise.
struct CompactSet {
    std::vector<Complex> points;
    std::optional<double> net_resolution;
};

/// Validates nonemptiness, finiteness, and a positive resolution.
CompactSet make_compact_set(std::vector<Complex> points,
                            std::optional<double> net_resolution = std::nullopt);

/// sup over a of the distance to the nearest point of b.
double directed_hausdorff(const CompactSet& a, const CompactSet& b);

/// max of the two directed distances; exact on the clouds, O(|a| * |b|).
double hausdorff(const CompactSet& a, const CompactSet& b);

/// Pointwise image {h(p) : p in k}.
CompactSet image(const Homeo& h, const CompactSet& k);

/// True iff every point of k lies strictly within eps of some point of l.
bool in_neighborhood(const CompactSet& k, const CompactSet& l, double eps);

/// Finite-sequence convergence report: per-index Hausdorff distances to the
/// candidate limit plus lower/upper limit checks. "For all large n" is read
/// as "from some index through the end of the given sequence", so the
/// verdicts are approximate by construction.
struct LimitReport {
    std::vector<double> distances;
    bool liminf_ok = false;
    std::size_t liminf_from = 0; // first index from which the check holds to the end
    bool limsup_ok = false;
    std::size_t limsup_from = 0;
    bool converged = false; // final Hausdorff distance <= tolerance
    double tolerance = 0.0;
};

LimitReport limit_test(std::span<const CompactSet> sequence, const CompactSet& limit, double tol);

/// Smallest convenient disk containing the cloud (bounding-box center).
Disk enclosing_disk(const CompactSet& k);

/// Rectangular lattice cloud with nx * ny points spanning [lo, hi].
CompactSet rectangle_grid(Complex lo, Complex hi, int nx, int ny);

/// n equally spaced points of the circle |z - center| = radius.
CompactSet circle_net(Complex center, double radius, int n);

// Cloud files: one point per line, "re im" in decimal text.
CompactSet read_cloud(std::istream& in);
CompactSet read_cloud_file(const std::string& path);
void write_cloud(std::ostream& out, const CompactSet& k);
void write_cloud_file(const std::string& path, const CompactSet& k);

} // namespace homeo
