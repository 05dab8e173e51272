#include "homeo/map.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "homeo/bump.hpp"
#include "homeo/errors.hpp"

namespace homeo {

namespace {

void validate_bump_params(Complex center, double rho, double delta, double eta) {
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()) || !std::isfinite(rho) ||
        !std::isfinite(delta) || !std::isfinite(eta)) {
        throw DomainError("bump parameters must be finite");
    }
    if (!(rho > 0.0)) throw DomainError("bump requires rho > 0");
    if (!(eta > 0.0)) throw DomainError("bump requires eta > 0");
    if (!(delta >= 0.0 && delta <= eta)) throw DomainError("bump requires 0 <= delta <= eta");
    if (!(std::abs(center) + rho + 2.0 * eta < 1.0)) {
        throw DomainError("bump requires |center| + rho + 2*eta < 1");
    }
}

// Radial bump about `center`: identity outside radius rho + 2*delta
// (bit-exact), profile-scaled inside. The center itself is fixed by
// convention.
Complex apply_radial_bump(Complex z, Complex center, double rho, double delta, bool inverted) {
    if (delta == 0.0) return z;
    const Complex w = z - center;
    const double r = std::abs(w);
    if (r == 0.0) return z;
    if (r >= rho + 2.0 * delta) return z;
    const double f = inverted ? bump_profile_inverse(r, rho, delta) : bump_profile(r, rho, delta);
    return center + (f / r) * w;
}

} // namespace

// ---------------------------------------------------------------------------
// DiskMap
// ---------------------------------------------------------------------------

namespace {

Complex eval_disk_node(const DiskMap::Node& node, Complex z, bool inverted);

struct DiskNodeEval {
    Complex z;
    bool inverted;

    Complex operator()(const DiskIdentity&) const { return z; }
    Complex operator()(const RadialBump& b) const {
        return apply_radial_bump(z, b.center, b.rho, b.delta, inverted);
    }
    Complex operator()(const DiskMap::Node::Composite& c) const {
        if (inverted) return eval_disk_node(*c.inner, eval_disk_node(*c.outer, z, true), true);
        return eval_disk_node(*c.outer, eval_disk_node(*c.inner, z, false), false);
    }
    Complex operator()(const DiskMap::Node::Inverted& i) const {
        return eval_disk_node(*i.child, z, !inverted);
    }
};

Complex eval_disk_node(const DiskMap::Node& node, Complex z, bool inverted) {
    return std::visit(DiskNodeEval{z, inverted}, node.value);
}

void check_in_unit_disk(Complex z) {
    if (!(std::abs(z) < 1.0)) {
        throw EvalError("disk map evaluated at a point of modulus >= 1");
    }
}

} // namespace

DiskMap DiskMap::identity() {
    return DiskMap(std::make_shared<const Node>(Node{DiskIdentity{}}));
}

DiskMap DiskMap::radial_bump(Complex center, double rho, double delta, double eta) {
    validate_bump_params(center, rho, delta, eta);
    return DiskMap(std::make_shared<const Node>(Node{RadialBump{center, rho, delta, eta}}));
}

Complex DiskMap::eval(Complex z) const {
    check_in_unit_disk(z);
    return eval_disk_node(*root_, z, false);
}

Complex DiskMap::eval_inverse(Complex w) const {
    check_in_unit_disk(w);
    return eval_disk_node(*root_, w, true);
}

DiskMap compose(const DiskMap& outer, const DiskMap& inner) {
    return DiskMap(std::make_shared<const DiskMap::Node>(
        DiskMap::Node{DiskMap::Node::Composite{outer.root_, inner.root_}}));
}

DiskMap inverse(const DiskMap& m) {
    return DiskMap(
        std::make_shared<const DiskMap::Node>(DiskMap::Node{DiskMap::Node::Inverted{m.root_}}));
}

// ---------------------------------------------------------------------------
// Homeo
// ---------------------------------------------------------------------------

namespace {

Complex eval_node(const Homeo::Node& node, Complex z, bool inverted);

struct PrimitiveEval {
    Complex z;
    bool inverted;

    Complex operator()(const Identity&) const { return z; }
    Complex operator()(const Translation& t) const {
        return inverted ? z - t.offset : z + t.offset;
    }
    Complex operator()(const Rotation& r) const {
        return inverted ? z * std::conj(r.phase) : z * r.phase;
    }
    Complex operator()(const Scaling& s) const { return inverted ? z / s.factor : z * s.factor; }
    Complex operator()(const Conjugation&) const { return std::conj(z); }
};

struct NodeEval {
    Complex z;
    bool inverted;

    Complex operator()(const Primitive& p) const { return std::visit(PrimitiveEval{z, inverted}, p); }
    Complex operator()(const Homeo::Node::Composite& c) const {
        if (inverted) return eval_node(*c.inner, eval_node(*c.outer, z, true), true);
        return eval_node(*c.outer, eval_node(*c.inner, z, false), false);
    }
    Complex operator()(const Homeo::Node::Inverted& i) const {
        return eval_node(*i.child, z, !inverted);
    }
    Complex operator()(const Homeo::Node::DiskConjugate& d) const {
        const Complex inside = plane_to_disk(z);
        check_in_unit_disk(inside);
        const Complex moved = eval_disk_node(d.map.root(), inside, inverted);
        return disk_to_plane(moved);
    }
    Complex operator()(const Homeo::Node::CellBump& b) const {
        if (b.delta == 0.0) return z;
        const Cell2& cell = b.cell;
        // Both directions pull back through the chart inverse first:
        // forward is chart o bump o chart^-1, inverse is chart o bump^-1 o chart^-1.
        const Complex pulled = eval_node(cell.chart.root(), z, true);
        const double r = std::abs(pulled - cell.center);
        // Strictly outside the active chart image the bump is the identity,
        // bit-exact; the profile is the identity at the boundary radius too,
        // so the strict test loses nothing.
        if (!(r < cell.rho + 2.0 * b.delta)) return z;
        const Complex moved = apply_radial_bump(pulled, cell.center, cell.rho, b.delta, inverted);
        return eval_node(cell.chart.root(), moved, false);
    }
};

Complex eval_node(const Homeo::Node& node, Complex z, bool inverted) {
    return std::visit(NodeEval{z, inverted}, node.value);
}

std::shared_ptr<const Homeo::Node> make_node(Homeo::Node::Value value) {
    return std::make_shared<const Homeo::Node>(Homeo::Node{std::move(value)});
}

} // namespace

Homeo Homeo::identity() { return Homeo(make_node(Primitive{Identity{}})); }

Homeo Homeo::translation(Complex offset) {
    if (!std::isfinite(offset.real()) || !std::isfinite(offset.imag())) {
        throw DomainError("translation offset must be finite");
    }
    return Homeo(make_node(Primitive{Translation{offset}}));
}

Homeo Homeo::rotation(double angle) {
    if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
    return Homeo(make_node(Primitive{Rotation{angle, std::polar(1.0, angle)}}));
}

Homeo Homeo::scaling(double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("scaling requires a finite factor > 0");
    }
    return Homeo(make_node(Primitive{Scaling{factor}}));
}

Homeo Homeo::conjugation() { return Homeo(make_node(Primitive{Conjugation{}})); }

Complex Homeo::eval(Complex z) const { return eval_node(*root_, z, false); }

Complex Homeo::eval_inverse(Complex w) const { return eval_node(*root_, w, true); }

Homeo compose(const Homeo& outer, const Homeo& inner) {
    return Homeo::from_root(
        make_node(Homeo::Node::Composite{outer.root_ptr(), inner.root_ptr()}));
}

Homeo inverse(const Homeo& h) {
    return Homeo::from_root(make_node(Homeo::Node::Inverted{h.root_ptr()}));
}

Homeo plane_from_disk(const DiskMap& psi) {
    return Homeo::from_root(make_node(Homeo::Node::DiskConjugate{psi}));
}

Cell2 make_cell(Homeo chart, Complex center, double rho, double eta) {
    validate_bump_params(center, rho, 0.0, eta);
    Cell2 cell{std::move(chart), center, rho, eta};
    // Spot-check that the chart inverse round-trips on the inflated disk.
    for (int i = 0; i < 16; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 16.0;
        const double r = (i % 2 == 0) ? rho + 2.0 * eta : 0.5 * rho;
        const Complex z = center + std::polar(r, theta);
        const Complex back = cell.chart.eval_inverse(cell.chart.eval(z));
        if (!(std::abs(back - z) <= 1e-8)) {
            throw DomainError("cell chart inverse does not round-trip on the core disk");
        }
    }
    return cell;
}

Homeo cell_bump(const Cell2& cell, double delta) {
    if (!(delta >= 0.0 && delta <= cell.eta)) {
        throw DomainError("cell bump requires 0 <= delta <= eta");
    }
    return Homeo::from_root(make_node(Homeo::Node::CellBump{cell, delta}));
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

namespace {

bool disk_nodes_equal(const DiskMap::Node& a, const DiskMap::Node& b);
bool nodes_equal(const Homeo::Node& a, const Homeo::Node& b);

bool primitives_equal(const Primitive& a, const Primitive& b) {
    if (a.index() != b.index()) return false;
    if (const auto* t = std::get_if<Translation>(&a)) {
        return t->offset == std::get<Translation>(b).offset;
    }
    if (const auto* r = std::get_if<Rotation>(&a)) {
        return r->angle == std::get<Rotation>(b).angle;
    }
    if (const auto* s = std::get_if<Scaling>(&a)) {
        return s->factor == std::get<Scaling>(b).factor;
    }
    return true; // Identity, Conjugation
}

bool bumps_equal(const RadialBump& a, const RadialBump& b) {
    return a.center == b.center && a.rho == b.rho && a.delta == b.delta && a.eta == b.eta;
}

bool disk_nodes_equal(const DiskMap::Node& a, const DiskMap::Node& b) {
    if (a.value.index() != b.value.index()) return false;
    if (const auto* bump = std::get_if<RadialBump>(&a.value)) {
        return bumps_equal(*bump, std::get<RadialBump>(b.value));
    }
    if (const auto* c = std::get_if<DiskMap::Node::Composite>(&a.value)) {
        const auto& d = std::get<DiskMap::Node::Composite>(b.value);
        return disk_nodes_equal(*c->outer, *d.outer) && disk_nodes_equal(*c->inner, *d.inner);
    }
    if (const auto* i = std::get_if<DiskMap::Node::Inverted>(&a.value)) {
        return disk_nodes_equal(*i->child, *std::get<DiskMap::Node::Inverted>(b.value).child);
    }
    return true; // DiskIdentity
}

bool cells_equal(const Cell2& a, const Cell2& b) {
    return a.center == b.center && a.rho == b.rho && a.eta == b.eta &&
           nodes_equal(a.chart.root(), b.chart.root());
}

bool nodes_equal(const Homeo::Node& a, const Homeo::Node& b) {
    if (a.value.index() != b.value.index()) return false;
    if (const auto* p = std::get_if<Primitive>(&a.value)) {
        return primitives_equal(*p, std::get<Primitive>(b.value));
    }
    if (const auto* c = std::get_if<Homeo::Node::Composite>(&a.value)) {
        const auto& d = std::get<Homeo::Node::Composite>(b.value);
        return nodes_equal(*c->outer, *d.outer) && nodes_equal(*c->inner, *d.inner);
    }
    if (const auto* i = std::get_if<Homeo::Node::Inverted>(&a.value)) {
        return nodes_equal(*i->child, *std::get<Homeo::Node::Inverted>(b.value).child);
    }
    if (const auto* d = std::get_if<Homeo::Node::DiskConjugate>(&a.value)) {
        return disk_nodes_equal(d->map.root(),
                                std::get<Homeo::Node::DiskConjugate>(b.value).map.root());
    }
    const auto& x = std::get<Homeo::Node::CellBump>(a.value);
    const auto& y = std::get<Homeo::Node::CellBump>(b.value);
    return x.delta == y.delta && cells_equal(x.cell, y.cell);
}

} // namespace

bool structural_equal(const DiskMap& a, const DiskMap& b) {
    return disk_nodes_equal(a.root(), b.root());
}

bool structural_equal(const Homeo& a, const Homeo& b) { return nodes_equal(a.root(), b.root()); }

} // namespace homeo
