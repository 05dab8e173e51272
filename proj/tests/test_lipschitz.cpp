#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "homeo/bump.hpp"
#include "homeo/errors.hpp"
#include "homeo/lipschitz.hpp"
#include "homeo/map.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace homeo;
using doctest::Approx;

TEST_CASE("primitive bounds are exact") {
    const Disk anywhere{Complex{3.0, -1.0}, 7.0, true};
    CHECK(lipschitz_bound(Homeo::translation(Complex{5.0, 5.0}), anywhere) == 1.0);
    CHECK(lipschitz_bound(Homeo::rotation(1.2), anywhere) == 1.0);
    CHECK(lipschitz_bound(Homeo::conjugation(), anywhere) == 1.0);
    CHECK(lipschitz_bound(Homeo::scaling(2.0), anywhere) == 2.0);
    CHECK(lipschitz_bound(inverse(Homeo::scaling(2.0)), anywhere) == 0.5);
    CHECK(lipschitz_bound(Homeo::identity(), anywhere) == 1.0);
}

TEST_CASE("enclosures follow the map") {
    const Disk start{Complex{1.0, 0.0}, 2.0, true};
    const MapBound moved = map_bound(Homeo::translation(Complex{0.0, 3.0}), start);
    CHECK(moved.enclosure.center == Complex{1.0, 3.0});
    CHECK(moved.enclosure.radius == 2.0);

    const MapBound scaled = map_bound(Homeo::scaling(3.0), start);
    CHECK(scaled.enclosure.center == Complex{3.0, 0.0});
    CHECK(scaled.enclosure.radius == 6.0);

    const MapBound back = inverse_map_bound(Homeo::scaling(2.0), start);
    CHECK(back.enclosure.center == Complex{0.5, 0.0});
    CHECK(back.enclosure.radius == 1.0);
    CHECK(back.lipschitz == 0.5);
}

TEST_CASE("bump bound on its core disk is the dilation factor") {
    const double rho = 0.25, delta = 0.06, eta = 0.1;
    const Complex alpha{0.05, 0.1};
    const Homeo bump = cell_bump(make_cell(Homeo::identity(), alpha, rho, eta), delta);

    const double bound = lipschitz_bound(bump, Disk{alpha, rho, true});
    CHECK(bound == Approx((rho + delta) / rho).epsilon(1e-14));

    // Dense difference quotients never exceed the bound and come close to it.
    gen::Rng rng(2718);
    const double observed =
        oracle::max_difference_quotient(bump, Disk{alpha, rho, true}, rng, 20000);
    CHECK(observed <= bound * (1.0 + 1e-12));
    CHECK(observed >= 0.9 * bound);
}

TEST_CASE("profile stretch factors by interval") {
    const double rho = 0.2, delta = 0.05;
    // Entirely inside the core: the dilation factor.
    CHECK(bump_profile_lipschitz(0.0, rho, rho, delta, false) ==
          Approx((rho + delta) / rho).epsilon(1e-14));
    // Entirely beyond the active annulus: the identity.
    CHECK(bump_profile_lipschitz(rho + 2.0 * delta, 1.0, rho, delta, false) == 1.0);
    // The inverse compresses the expanded core by rho / (rho + delta).
    CHECK(bump_profile_lipschitz(0.0, rho + delta, rho, delta, true) ==
          Approx(rho / (rho + delta)).epsilon(1e-14));
    // The inverse middle piece has slope 2.
    CHECK(bump_profile_lipschitz(rho + delta, rho + 2.0 * delta, rho, delta, true) ==
          Approx(2.0).epsilon(1e-14));
    CHECK(bump_profile_lipschitz(0.0, 1.0, rho, 0.0, false) == 1.0);
}

TEST_CASE("bounds are sound for random trees") {
    gen::Rng rng(161803);
    for (int trial = 0; trial < 25; ++trial) {
        const Homeo h = gen::homeomorphism(rng, 2);
        const Disk region{gen::point_in_disk(rng, {0.0, 0.0}, 2.0), 2.0, true};
        const double bound = lipschitz_bound(h, region);
        const double observed = oracle::max_difference_quotient(h, region, rng, 500);
        CHECK(observed <= bound * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("inverse bounds are sound for random trees") {
    gen::Rng rng(271828);
    for (int trial = 0; trial < 25; ++trial) {
        const Homeo h = inverse(gen::homeomorphism(rng, 2));
        const Disk region{gen::point_in_disk(rng, {0.0, 0.0}, 2.0), 1.0, true};
        const double bound = lipschitz_bound(h, region);
        const double observed = oracle::max_difference_quotient(h, region, rng, 500);
        CHECK(observed <= bound * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("cell bump away from its cell reports the identity bound") {
    const Homeo bump =
        cell_bump(make_cell(Homeo::identity(), Complex{0.0, 0.0}, 0.25, 0.1), 0.05);
    const Disk far{Complex{10.0, 0.0}, 1.0, true};
    const MapBound b = map_bound(bump, far);
    CHECK(b.lipschitz == 1.0);
    CHECK(b.enclosure.center == far.center);
    CHECK(b.enclosure.radius == far.radius);
}

TEST_CASE("disk transports refuse unbounded regions") {
    const Homeo lifted =
        plane_from_disk(DiskMap::radial_bump(Complex{0.1, 0.0}, 0.2, 0.05, 0.1));
    CHECK_THROWS_AS(lipschitz_bound(lifted, Disk{Complex{0.0, 0.0}, 1e300, true}), NoBoundError);
    // Modest regions are fine and sound.
    gen::Rng rng(55);
    const Disk region{Complex{0.5, 0.0}, 1.5, true};
    const double bound = lipschitz_bound(lifted, region);
    const double observed = oracle::max_difference_quotient(lifted, region, rng, 4000);
    CHECK(observed <= bound * (1.0 + 1e-9));
}
