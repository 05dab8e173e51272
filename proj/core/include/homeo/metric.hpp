#pragma once

#include "homeo/geometry.hpp"
#include "homeo/map.hpp"

namespace homeo {

/// Controls the approximation of the uniform-convergence metric: where the
/// weighted series is truncated, how finely each disk is sampled, and
/// whether sampled suprema are inflated by Lipschitz slack into certified
/// upper bounds.
struct MetricConfig {
    int truncation = 40;      // series cut N; tail below 2^-N
    int radial_samples = 256; // per disk, >= 8
    int angular_samples = 256;
    bool rigorous = false; // add (L_f + L_g) * mesh to sampled suprema
};

/// Throws DomainError unless truncation >= 1 and both sample counts >= 8.
void validate(const MetricConfig& cfg);

/// Estimate of sup_{|z| <= n} |f(z) - g(z)| over a polar grid. A certified
/// lower bound by default; with cfg.rigorous, grid max plus
/// (L_f + L_g) * mesh, a certified upper bound (throws NoBoundError when a
/// Lipschitz bound is unavailable for either map).
double sup_on_disk(const Homeo& f, const Homeo& g, int n, const MetricConfig& cfg);

/// Truncated weighted series sum_{n=1}^{N} 2^-n * s_n / (1 + s_n) with
/// s_n = sup_on_disk(f, g, n, cfg); within truncation_error_bound(cfg) of
/// the full series over the same suprema. Terms with s_n above 1e15 are
/// clamped to 2^-n, their exact limit.
double du(const Homeo& f, const Homeo& g, const MetricConfig& cfg);

/// The group metric du(f, g) + du(f^-1, g^-1).
double dist(const Homeo& f, const Homeo& g, const MetricConfig& cfg);

/// 2^-N: every term of the tail is below 2^-n, so the tail sum is below
/// 2^-N, attained in the limit of unbounded suprema.
double truncation_error_bound(const MetricConfig& cfg);

} // namespace homeo
