#pragma once

#include <memory>
#include <variant>

#include "homeo/geometry.hpp"

namespace homeo {

// ---------------------------------------------------------------------------
// Plane primitives. Every primitive has a closed-form inverse.
// ---------------------------------------------------------------------------

struct Identity {};

struct Translation {
    Complex offset;
};

struct Rotation {
    double angle = 0.0;
    Complex phase{1.0, 0.0}; // exp(i * angle), fixed at construction
};

struct Scaling {
    double factor = 1.0; // > 0
};

/// z -> conj(z); orientation-reversing, self-inverse.
struct Conjugation {};

using Primitive = std::variant<Identity, Translation, Rotation, Scaling, Conjugation>;

// ---------------------------------------------------------------------------
// Self-maps of the open unit disk.
// ---------------------------------------------------------------------------

struct DiskIdentity {};

/// Radial expansion bump acting inside the unit disk: expands the closed
/// disk of radius rho about `center` onto radius rho + delta, compresses the
/// surrounding annulus up to rho + 2*delta, identity beyond. Requires
/// |center| + rho + 2*eta < 1 and 0 <= delta <= eta, so the whole active
/// region stays inside the unit disk with margin.
struct RadialBump {
    Complex center;
    double rho = 0.0;
    double delta = 0.0;
    double eta = 0.0;
};

/// Symbolic self-homeomorphism of the open unit disk: an expression tree of
/// disk primitives closed under composition and inversion.
class DiskMap {
public:
    struct Node;

    static DiskMap identity();
    static DiskMap radial_bump(Complex center, double rho, double delta, double eta);

    /// Applies the map; requires |z| < 1.
    Complex eval(Complex z) const;
    /// Applies the inverse map; requires |w| < 1.
    Complex eval_inverse(Complex w) const;

    const Node& root() const { return *root_; }
    std::shared_ptr<const Node> root_ptr() const { return root_; }

private:
    explicit DiskMap(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;

    friend DiskMap compose(const DiskMap& outer, const DiskMap& inner);
    friend DiskMap inverse(const DiskMap& m);
};

/// (outer o inner): inner is applied first.
DiskMap compose(const DiskMap& outer, const DiskMap& inner);
DiskMap inverse(const DiskMap& m);

bool structural_equal(const DiskMap& a, const DiskMap& b);

// ---------------------------------------------------------------------------
// Plane homeomorphisms.
// ---------------------------------------------------------------------------

/// Symbolic homeomorphism of the plane: a finite expression tree whose
/// leaves are primitives and whose internal nodes are composition,
/// inversion, disk-map transport, and cell bumps. Every tree carries an
/// exact closed-form inverse, evaluated structurally. Values are immutable
/// after construction; all operations are pure.
class Homeo {
public:
    struct Node;

    static Homeo identity();
    static Homeo translation(Complex offset);
    static Homeo rotation(double angle);
    /// Throws DomainError unless factor > 0.
    static Homeo scaling(double factor);
    static Homeo conjugation();

    Complex eval(Complex z) const;
    Complex eval_inverse(Complex w) const;

    const Node& root() const { return *root_; }
    std::shared_ptr<const Node> root_ptr() const { return root_; }

    static Homeo from_root(std::shared_ptr<const Node> root) { return Homeo(std::move(root)); }

private:
    explicit Homeo(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

/// A closed 2-cell: the image of the closed disk D(center; rho) under a
/// chart homeomorphism, with enough margin eta that the inflated disk
/// D(center; rho + 2*eta) still sits inside the unit disk.
struct Cell2 {
    Homeo chart = Homeo::identity();
    Complex center{0.0, 0.0};
    double rho = 0.0;
    double eta = 0.0;
};

/// Validates |center| + rho + 2*eta < 1 and spot-checks that the chart's
/// inverse round-trips on samples of the inflated disk.
Cell2 make_cell(Homeo chart, Complex center, double rho, double eta);

/// (outer o inner)(z) = outer(inner(z)): the right operand acts first.
Homeo compose(const Homeo& outer, const Homeo& inner);
Homeo inverse(const Homeo& h);

/// Transports a disk map to the plane through the radial stretch
/// disk_to_plane, yielding plane_map = stretch o disk_map o stretch^-1.
Homeo plane_from_disk(const DiskMap& psi);

/// The bump homeomorphism of the cell: applies chart o bump o chart^-1 on
/// the chart image of D(center; rho + 2*delta) and is the identity
/// elsewhere (bit-exact outside). Requires 0 <= delta <= cell.eta.
Homeo cell_bump(const Cell2& cell, double delta);

bool structural_equal(const Homeo& a, const Homeo& b);

// ---------------------------------------------------------------------------
// Node layouts (public so that printers and bound propagation can walk trees).
// ---------------------------------------------------------------------------

struct DiskMap::Node {
    struct Composite {
        std::shared_ptr<const Node> outer;
        std::shared_ptr<const Node> inner;
    };
    struct Inverted {
        std::shared_ptr<const Node> child;
    };
    using Value = std::variant<DiskIdentity, RadialBump, Composite, Inverted>;
    Value value;
};

struct Homeo::Node {
    struct Composite {
        std::shared_ptr<const Node> outer;
        std::shared_ptr<const Node> inner;
    };
    struct Inverted {
        std::shared_ptr<const Node> child;
    };
    struct DiskConjugate {
        DiskMap map;
    };
    struct CellBump {
        Cell2 cell;
        double delta = 0.0;
    };
    using Value = std::variant<Primitive, Composite, Inverted, DiskConjugate, CellBump>;
    Value value;
};

} // namespace homeo
