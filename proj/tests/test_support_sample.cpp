#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "homeo/errors.hpp"
#include "homeo/support.hpp"

using namespace homeo;

TEST_CASE("the identity has empty sampled support") {
    const auto sample =
        support_sample(Homeo::identity(), Disk{Complex{0.0, 0.0}, 2.0, true}, 1e-12, 0.1);
    CHECK_FALSE(sample.has_value());
}

TEST_CASE("a translation moves every sampled point") {
    const Disk region{Complex{0.0, 0.0}, 2.0, true};
    const auto sample =
        support_sample(Homeo::translation(Complex{1.0, 0.0}), region, 1e-12, 0.1);
    REQUIRE(sample.has_value());
    CHECK(sample->net_resolution == 0.1);

    // Every lattice point of the region must be present.
    int expected = 0;
    for (int j = -20; j <= 20; ++j) {
        for (int i = -20; i <= 20; ++i) {
            if (std::hypot(i * 0.1, j * 0.1) <= 2.0) ++expected;
        }
    }
    CHECK(static_cast<int>(sample->points.size()) == expected);
}

TEST_CASE("bump support stays inside the active chart image") {
    const Cell2 cell = make_cell(Homeo::identity(), Complex{0.1, 0.0}, 0.25, 0.1);
    const double delta = 0.08;
    const Homeo h = cell_bump(cell, delta);
    const auto sample = support_sample(h, Disk{Complex{0.0, 0.0}, 3.0, true}, 1e-9, 0.01);
    REQUIRE(sample.has_value());
    for (const Complex& z : sample->points) {
        const Complex pulled = cell.chart.eval_inverse(z);
        CHECK(std::abs(pulled - cell.center) <= cell.rho + 2.0 * delta + 1e-9);
    }
}

TEST_CASE("parameter validation") {
    const Disk region{Complex{0.0, 0.0}, 1.0, true};
    CHECK_THROWS_AS(support_sample(Homeo::identity(), region, 0.0, 0.1), DomainError);
    CHECK_THROWS_AS(support_sample(Homeo::identity(), region, 1e-9, 0.0), DomainError);
    CHECK_THROWS_AS(
        support_sample(Homeo::identity(), Disk{Complex{0.0, 0.0}, -1.0, true}, 1e-9, 0.1),
        DomainError);
}
