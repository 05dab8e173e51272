#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homeo/compact.hpp"
#include "homeo/map.hpp"
#include "homeo/metric.hpp"

namespace homeo {

/// A map made fixed-point-free on a finite grid by an arbitrarily small
/// translation.
struct PerturbationReport {
    Homeo original = Homeo::identity();
    Homeo perturbed = Homeo::identity();
    Complex translation{0.0, 0.0};
    double dist_achieved = 0.0;          // metric distance to the original, < requested eps
    double grid_min_displacement = 0.0;  // > 0
    CompactSet grid;
};

/// Picks a translation offset a that avoids the bad set
/// {c - h(c) : c in grid} together with 0 by margin |a| / 2 (candidates lie
/// on a fixed ray, rotated away from obstructions), then halves |a| until
/// dist(translation(a) o h, h, cfg) < eps. The returned map moves every
/// grid point. Throws DomainError for eps <= 0 and Error if 60 halvings do
/// not bring the metric below eps.
PerturbationReport avoid_fixed_points_on_grid(const Homeo& h, const CompactSet& grid, double eps,
                                              const MetricConfig& cfg);

/// A composite escaping the set of maps supported inside the cell while
/// staying eps-close to the original: witnesses that such sets have empty
/// interior.
struct EscapeReport {
    Cell2 cell;
    double delta = 0.0;
    Homeo composite = Homeo::identity();
    double dist_to_original = 0.0;
    Complex escape_witness{0.0, 0.0}; // outside the cell's core, moved by the composite
    double witness_motion = 0.0;      // > 0
};

/// Requires (spot-checked) that h is the identity off the cell's core
/// chart image. Halves the bump size delta from cell.eta until
/// dist(cell_bump(cell, delta) o h, h, cfg) < eps, then reports the
/// composite together with a chart-image point strictly between radius rho
/// and rho + delta that the composite moves.
EscapeReport nowhere_dense_escape(const Homeo& h, const Cell2& cell, double eps,
                                  const MetricConfig& cfg);

/// A parameterized sequence of homeomorphisms converging (by construction)
/// to a declared limit.
struct HomeoSequence {
    std::string name;
    std::function<Homeo(int)> member; // 1-based index
    Homeo limit = Homeo::identity();
};

struct ImageConvergenceRow {
    int index = 0;
    double map_distance = 0.0;   // dist(h_n, h)
    double image_distance = 0.0; // hausdorff(h_n[K], h[K])
};

/// Convergence experiment for images of a compact: both columns should
/// decrease to zero when the family converges.
std::vector<ImageConvergenceRow> image_convergence_table(const HomeoSequence& family,
                                                         const CompactSet& k, int n_max,
                                                         const MetricConfig& cfg);

struct CompositionConvergenceRow {
    int index = 0;
    double outer_distance = 0.0;     // dist(g_n, g)
    double inner_distance = 0.0;     // dist(h_n, h)
    double composite_distance = 0.0; // dist(g_n o h_n, g o h)
};

/// Joint-continuity experiment for composition: the composite column should
/// decrease to zero when both families converge.
std::vector<CompositionConvergenceRow> composition_convergence_table(const HomeoSequence& outer,
                                                                     const HomeoSequence& inner,
                                                                     int n_max,
                                                                     const MetricConfig& cfg);

} // namespace homeo
