#pragma once

namespace homeo {

/// Piecewise-linear radial profile of the expanding bump with parameters
/// (rho, delta): fixes 0, stretches [0, rho] onto [0, rho + delta] by the
/// factor (rho + delta) / rho, compresses [rho, rho + 2*delta] onto
/// [rho + delta, rho + 2*delta] with slope 1/2, and is the identity beyond
/// rho + 2*delta. Strictly increasing for every delta >= 0.
double bump_profile(double r, double rho, double delta);

/// Exact inverse of bump_profile: r' -> rho * r' / (rho + delta) on
/// [0, rho + delta], r' -> 2 * (r' - rho - delta) + rho on
/// [rho + delta, rho + 2*delta], identity beyond.
double bump_profile_inverse(double r, double rho, double delta);

/// Largest stretch factor attained by the (forward or inverse) profile on
/// the radius interval [lo, hi]: the maximum of the piece slopes and of the
/// chord ratios profile(r)/r over the interval. This is a Lipschitz
/// constant for the induced radial map on any region whose radii relative
/// to the bump center stay inside [lo, hi].
double bump_profile_lipschitz(double lo, double hi, double rho, double delta, bool inverse);

} // namespace homeo
