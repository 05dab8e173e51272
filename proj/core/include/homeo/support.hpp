#pragma once

#include <optional>

#include "homeo/compact.hpp"
#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace homeo {

/// Samples the support of h inside `region`: the lattice points (pitch
/// `resolution`) of the closed disk that h moves by more than `tol`.
/// Returns nullopt when no sampled point moves, since a CompactSet must be
/// nonempty. The result's net_resolution is the lattice pitch.
std::optional<CompactSet> support_sample(const Homeo& h, const Disk& region, double tol,
                                         double resolution);

} // namespace homeo
