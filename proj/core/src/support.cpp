#include "homeo/support.hpp"

#include <cmath>

#include "homeo/errors.hpp"

namespace homeo {

std::optional<CompactSet> support_sample(const Homeo& h, const Disk& region, double tol,
                                         double resolution) {
    validate(region);
    if (!(tol > 0.0)) throw DomainError("support sampling tolerance must be positive");
    if (!(resolution > 0.0)) throw DomainError("support sampling resolution must be positive");

    const double r = region.radius;
    const Complex c = region.center;
    const int half = static_cast<int>(std::ceil(r / resolution));

    std::vector<Complex> moving;
    for (int j = -half; j <= half; ++j) {
        for (int i = -half; i <= half; ++i) {
            const Complex z = c + Complex{i * resolution, j * resolution};
            if (!region.contains(z)) continue;
            if (std::abs(h.eval(z) - z) > tol) moving.push_back(z);
        }
    }
    if (moving.empty()) return std::nullopt;
    return make_compact_set(std::move(moving), resolution);
}

} // namespace homeo
