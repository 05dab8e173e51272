#include "homeo/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "homeo/errors.hpp"
#include "homeo/lipschitz.hpp"

namespace homeo {

void validate(const MetricConfig& cfg) {
    if (cfg.truncation < 1) throw DomainError("metric truncation must be >= 1");
    if (cfg.radial_samples < 8 || cfg.angular_samples < 8) {
        throw DomainError("metric sampling requires at least 8 radial and angular samples");
    }
}

namespace {

// s / (1 + s) with the overflow clamp: far beyond 1e15 the quotient is 1 to
// machine precision, and the clamp makes the worst-case tail exact.
double weigh(double s) {
    if (s > 1e15) return 1.0;
    return s / (1.0 + s);
}

} // namespace

double sup_on_disk(const Homeo& f, const Homeo& g, int n, const MetricConfig& cfg) {
    validate(cfg);
    if (n < 1) throw DomainError("sup_on_disk requires n >= 1");

    const double radius = static_cast<double>(n);
    const int nr = cfg.radial_samples;
    const int na = cfg.angular_samples;
    const double dr = radius / (nr - 1);
    const double dtheta = 2.0 * std::numbers::pi / na;

    double best = std::abs(f.eval(Complex{0.0, 0.0}) - g.eval(Complex{0.0, 0.0}));
    for (int i = 1; i < nr; ++i) {
        const double r = radius * i / (nr - 1);
        for (int j = 0; j < na; ++j) {
            const Complex z = std::polar(r, dtheta * j);
            best = std::max(best, std::abs(f.eval(z) - g.eval(z)));
        }
    }
    if (std::isnan(best)) throw EvalError("sup_on_disk: a map produced NaN");

    if (cfg.rigorous) {
        // Any disk point is within mesh of a grid point, so the grid max
        // plus (L_f + L_g) * mesh dominates the true supremum.
        const Disk whole{Complex{0.0, 0.0}, radius, true};
        const double lf = lipschitz_bound(f, whole);
        const double lg = lipschitz_bound(g, whole);
        const double mesh = std::hypot(0.5 * dr, 0.5 * radius * dtheta);
        return best + (lf + lg) * mesh;
    }
    return best;
}

double du(const Homeo& f, const Homeo& g, const MetricConfig& cfg) {
    validate(cfg);
    double sum = 0.0;
    for (int n = 1; n <= cfg.truncation; ++n) {
        const double s = sup_on_disk(f, g, n, cfg);
        sum += std::ldexp(weigh(s), -n);
    }
    return sum;
}

double dist(const Homeo& f, const Homeo& g, const MetricConfig& cfg) {
    return du(f, g, cfg) + du(inverse(f), inverse(g), cfg);
}

double truncation_error_bound(const MetricConfig& cfg) {
    validate(cfg);
    return std::ldexp(1.0, -cfg.truncation);
}

} // namespace homeo
