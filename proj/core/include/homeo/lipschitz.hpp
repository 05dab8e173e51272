#pragma once

#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace homeo {

/// Result of compositional bound propagation: a Lipschitz constant valid on
/// the queried disk together with a disk enclosing the image of that disk.
struct MapBound {
    double lipschitz = 1.0;
    Disk enclosure;
};

/// Bound for the forward map h on `region`. Throws NoBoundError when a node
/// cannot report one (a disk transport whose enclosure reaches the unit
/// circle). Constants multiply along compositions with disk enclosures
/// propagated node by node, so the result is sound but not tight.
MapBound map_bound(const Homeo& h, const Disk& region);

/// Bound for the inverse map h^-1 on `region`.
MapBound inverse_map_bound(const Homeo& h, const Disk& region);

/// L with |h(z) - h(w)| <= L * |z - w| for z, w in the region.
double lipschitz_bound(const Homeo& h, const Disk& region);

} // namespace homeo
