#include "homeo/lipschitz.hpp"

#include <algorithm>
#include <cmath>

#include "homeo/bump.hpp"
#include "homeo/errors.hpp"

namespace homeo {

namespace {

// Smallest disk containing both arguments.
Disk merge_disks(const Disk& a, const Disk& b) {
    const double d = std::abs(b.center - a.center);
    if (d + b.radius <= a.radius) return a;
    if (d + a.radius <= b.radius) return b;
    const double radius = 0.5 * (d + a.radius + b.radius);
    const Complex center = a.center + (b.center - a.center) * ((radius - a.radius) / d);
    return Disk{center, radius, true};
}

MapBound bound_node(const Homeo::Node& node, const Disk& disk, bool inverted);

// Bound of the radial bump (as a plane map, identity outside the active
// annulus) on the given disk. Singular values of a radial map are the
// profile slope and the chord ratio profile(r)/r, so their maximum over the
// disk's radius interval is a Lipschitz constant on the (convex) disk.
MapBound bump_bound(const Disk& disk, Complex center, double rho, double delta, bool inverted) {
    const double d = std::abs(disk.center - center);
    const double lo = std::max(0.0, d - disk.radius);
    const double hi = d + disk.radius;
    if (delta == 0.0 || lo >= rho + 2.0 * delta) return MapBound{1.0, disk};
    const double lips = bump_profile_lipschitz(lo, hi, rho, delta, inverted);
    Complex moved_center = disk.center;
    if (d > 0.0 && d < rho + 2.0 * delta) {
        const double f = inverted ? bump_profile_inverse(d, rho, delta)
                                  : bump_profile(d, rho, delta);
        moved_center = center + (f / d) * (disk.center - center);
    }
    return MapBound{lips, Disk{moved_center, lips * disk.radius, true}};
}

// ---- disk-map bounds (enclosures in unit-disk coordinates) ----

MapBound bound_disk_node(const DiskMap::Node& node, const Disk& disk, bool inverted);

struct DiskNodeBound {
    const Disk& disk;
    bool inverted;

    MapBound operator()(const DiskIdentity&) const { return MapBound{1.0, disk}; }
    MapBound operator()(const RadialBump& b) const {
        return bump_bound(disk, b.center, b.rho, b.delta, inverted);
    }
    MapBound operator()(const DiskMap::Node::Composite& c) const {
        if (inverted) {
            const MapBound first = bound_disk_node(*c.outer, disk, true);
            const MapBound second = bound_disk_node(*c.inner, first.enclosure, true);
            return MapBound{first.lipschitz * second.lipschitz, second.enclosure};
        }
        const MapBound first = bound_disk_node(*c.inner, disk, false);
        const MapBound second = bound_disk_node(*c.outer, first.enclosure, false);
        return MapBound{first.lipschitz * second.lipschitz, second.enclosure};
    }
    MapBound operator()(const DiskMap::Node::Inverted& i) const {
        return bound_disk_node(*i.child, disk, !inverted);
    }
};

MapBound bound_disk_node(const DiskMap::Node& node, const Disk& disk, bool inverted) {
    return std::visit(DiskNodeBound{disk, inverted}, node.value);
}

// Sound cap on the modulus a disk map can produce from inputs of modulus
// <= m: a radial bump never pushes a point beyond max(|z|, extent of its
// active region); identity and structure nodes keep the cap.
double disk_modulus_cap(const DiskMap::Node& node, double m, bool inverted) {
    if (const auto* b = std::get_if<RadialBump>(&node.value)) {
        return std::max(m, std::abs(b->center) + b->rho + 2.0 * b->delta);
    }
    if (const auto* c = std::get_if<DiskMap::Node::Composite>(&node.value)) {
        if (inverted) {
            return disk_modulus_cap(*c->inner, disk_modulus_cap(*c->outer, m, true), true);
        }
        return disk_modulus_cap(*c->outer, disk_modulus_cap(*c->inner, m, false), false);
    }
    if (const auto* i = std::get_if<DiskMap::Node::Inverted>(&node.value)) {
        return disk_modulus_cap(*i->child, m, !inverted);
    }
    return m;
}

// u o psi o u^-1 with u the disk-to-plane stretch. The contraction u^-1 has
// singular values 1/(1+r)^2 and 1/(1+r); the expansion u has 1/(1-r)^2 and
// 1/(1-r). Constants are taken at the extreme radii of the propagated
// enclosures.
MapBound disk_conjugate_bound(const DiskMap& map, const Disk& disk, bool inverted) {
    const double far = std::abs(disk.center) + disk.radius;
    const double near = std::max(0.0, std::abs(disk.center) - disk.radius);
    const double inner_far = far / (1.0 + far); // largest modulus after transport
    if (!(inner_far < 1.0)) {
        throw NoBoundError("disk transport enclosure reaches the unit circle");
    }

    const double l_in = 1.0 / (1.0 + near); // Lipschitz constant of the transport inward
    const Complex e0 = plane_to_disk(disk.center);
    Disk inner_disk{e0, l_in * disk.radius, true};
    if (std::abs(e0) + inner_disk.radius > inner_far) {
        inner_disk = Disk{Complex{0.0, 0.0}, inner_far, true}; // tighter enclosure about 0
    }

    const MapBound moved = inverted ? bound_disk_node(map.root(), inner_disk, true)
                                    : bound_disk_node(map.root(), inner_disk, false);
    const double cap = disk_modulus_cap(map.root(), std::abs(inner_disk.center) + inner_disk.radius,
                                        inverted);
    const double moved_far =
        std::min(std::abs(moved.enclosure.center) + moved.enclosure.radius, cap);
    if (!(moved_far < 1.0)) {
        throw NoBoundError("disk transport enclosure reaches the unit circle");
    }

    const double l_out = 1.0 / ((1.0 - moved_far) * (1.0 - moved_far));
    const Disk out{disk_to_plane(moved.enclosure.center), l_out * moved.enclosure.radius, true};
    return MapBound{l_in * moved.lipschitz * l_out, out};
}

struct PrimitiveBound {
    const Disk& disk;
    bool inverted;

    MapBound operator()(const Identity&) const { return MapBound{1.0, disk}; }
    MapBound operator()(const Translation& t) const {
        const Complex c = inverted ? disk.center - t.offset : disk.center + t.offset;
        return MapBound{1.0, Disk{c, disk.radius, true}};
    }
    MapBound operator()(const Rotation& r) const {
        const Complex c = inverted ? disk.center * std::conj(r.phase) : disk.center * r.phase;
        return MapBound{1.0, Disk{c, disk.radius, true}};
    }
    MapBound operator()(const Scaling& s) const {
        const double f = inverted ? 1.0 / s.factor : s.factor;
        return MapBound{f, Disk{disk.center * f, disk.radius * f, true}};
    }
    MapBound operator()(const Conjugation&) const {
        return MapBound{1.0, Disk{std::conj(disk.center), disk.radius, true}};
    }
};

struct NodeBound {
    const Disk& disk;
    bool inverted;

    MapBound operator()(const Primitive& p) const {
        return std::visit(PrimitiveBound{disk, inverted}, p);
    }
    MapBound operator()(const Homeo::Node::Composite& c) const {
        if (inverted) {
            const MapBound first = bound_node(*c.outer, disk, true);
            const MapBound second = bound_node(*c.inner, first.enclosure, true);
            return MapBound{first.lipschitz * second.lipschitz, second.enclosure};
        }
        const MapBound first = bound_node(*c.inner, disk, false);
        const MapBound second = bound_node(*c.outer, first.enclosure, false);
        return MapBound{first.lipschitz * second.lipschitz, second.enclosure};
    }
    MapBound operator()(const Homeo::Node::Inverted& i) const {
        return bound_node(*i.child, disk, !inverted);
    }
    MapBound operator()(const Homeo::Node::DiskConjugate& d) const {
        return disk_conjugate_bound(d.map, disk, inverted);
    }
    MapBound operator()(const Homeo::Node::CellBump& b) const {
        if (b.delta == 0.0) return MapBound{1.0, disk};
        const Cell2& cell = b.cell;
        const MapBound pulled = bound_node(cell.chart.root(), disk, true);
        const double d = std::abs(pulled.enclosure.center - cell.center);
        if (d - pulled.enclosure.radius >= cell.rho + 2.0 * b.delta) {
            return MapBound{1.0, disk}; // the disk misses the active region entirely
        }
        const MapBound bumped =
            bump_bound(pulled.enclosure, cell.center, cell.rho, b.delta, inverted);
        const MapBound pushed = bound_node(cell.chart.root(), bumped.enclosure, false);
        // Points outside the active region stay put, so the identity's
        // constant 1 competes with the chart-bump-chart chain, and the image
        // lies in the union of the disk itself and the pushed enclosure.
        const double lips =
            std::max(1.0, pulled.lipschitz * bumped.lipschitz * pushed.lipschitz);
        return MapBound{lips, merge_disks(disk, pushed.enclosure)};
    }
};

MapBound bound_node(const Homeo::Node& node, const Disk& disk, bool inverted) {
    return std::visit(NodeBound{disk, inverted}, node.value);
}

} // namespace

MapBound map_bound(const Homeo& h, const Disk& region) {
    validate(region);
    return bound_node(h.root(), region, false);
}

MapBound inverse_map_bound(const Homeo& h, const Disk& region) {
    validate(region);
    return bound_node(h.root(), region, true);
}

double lipschitz_bound(const Homeo& h, const Disk& region) {
    return map_bound(h, region).lipschitz;
}

} // namespace homeo
