#include "homeo/bump.hpp"

#include <algorithm>
#include <array>

namespace homeo {

// Branch order below matters for the degenerate case delta = 0, where the
// middle piece collapses to the single radius rho: test r < rho first, then
// r < rho + 2*delta, then fall through to the identity.

double bump_profile(double r, double rho, double delta) {
    if (delta == 0.0) return r;
    if (r < rho) return (rho + delta) / rho * r;
    if (r < rho + 2.0 * delta) return 0.5 * (r - rho) + rho + delta;
    return r;
}

double bump_profile_inverse(double r, double rho, double delta) {
    if (delta == 0.0) return r;
    if (r < rho + delta) return rho * r / (rho + delta);
    if (r < rho + 2.0 * delta) return 2.0 * (r - rho - delta) + rho;
    return r;
}

namespace {

struct Piece {
    double lo;
    double hi;
    double slope;
};

// Chord ratio profile(r)/r extended by its limit (the first slope) at 0.
double chord_ratio(double r, double rho, double delta, bool inverse) {
    const double f = inverse ? bump_profile_inverse(r, rho, delta) : bump_profile(r, rho, delta);
    if (r == 0.0) return inverse ? rho / (rho + delta) : (rho + delta) / rho;
    return f / r;
}

} // namespace

double bump_profile_lipschitz(double lo, double hi, double rho, double delta, bool inverse) {
    lo = std::max(lo, 0.0);
    hi = std::max(hi, lo);
    if (delta == 0.0) return 1.0;

    const std::array<Piece, 3> pieces =
        inverse ? std::array<Piece, 3>{Piece{0.0, rho + delta, rho / (rho + delta)},
                                       Piece{rho + delta, rho + 2.0 * delta, 2.0},
                                       Piece{rho + 2.0 * delta, hi, 1.0}}
                : std::array<Piece, 3>{Piece{0.0, rho, (rho + delta) / rho},
                                       Piece{rho, rho + 2.0 * delta, 0.5},
                                       Piece{rho + 2.0 * delta, hi, 1.0}};

    // The chord ratio is monotone on each piece, so slopes plus ratios at
    // clipped piece endpoints cover the maximum. A piece met only at a
    // single radius contributes its ratio there but not its slope, which is
    // never traversed.
    double bound = 0.0;
    for (const Piece& p : pieces) {
        const double a = std::max(lo, p.lo);
        const double b = std::min(hi, p.hi);
        if (a > b) continue;
        if (b > a) bound = std::max(bound, p.slope);
        bound = std::max(bound, chord_ratio(a, rho, delta, inverse));
        bound = std::max(bound, chord_ratio(b, rho, delta, inverse));
    }
    return bound;
}

} // namespace homeo
