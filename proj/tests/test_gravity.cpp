#include <doctest.h>

#include <cmath>
#include <random>

#include "catwig/constants.hpp"
#include "catwig/gravity.hpp"
#include "catwig/params.hpp"

using namespace catwig;

namespace {
const double pi = constants::pi;
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

GravityModel nuclear(double a, double dx) {
    GravityModel g;
    g.total_mass_kg = 1e-12;
    g.constituent_mass_kg = silicon_nuclear_mass_kg;
    g.sphere_radius_m = a;
    g.separation_m = dx;
    return g;
}

} // namespace

TEST_CASE("nuclear-sphere self-energy for the ideal device") {
    const double x0 = ground_state_size(1e-12, 2.0 * pi * 1000.0);
    auto g = nuclear(1e-15, std::sqrt(8.0) * inv_sqrt2 * x0);
    const double de = delta_E_nuclei(g);
    CHECK(de == doctest::Approx(7.504397e-33).epsilon(1e-6));
    const double tau = collapse_time(de);
    CHECK(tau == doctest::Approx(1.405272e-2).epsilon(1e-6));
    CHECK(tau > 1e-3);
    CHECK(tau < 100e-3);
}

TEST_CASE("nuclear-sphere limits") {
    const double a = 1e-15;
    const double gm = constants::G * 1e-12 * silicon_nuclear_mass_kg;

    SUBCASE("contact separation") {
        CHECK(delta_E_nuclei(nuclear(a, 2.0 * a)) ==
              doctest::Approx(7.0 / 5.0 * gm / a).epsilon(1e-12));
    }
    SUBCASE("large separation saturates") {
        CHECK(delta_E_nuclei(nuclear(a, 1e6 * a)) ==
              doctest::Approx(12.0 / 5.0 * gm / a).epsilon(1e-5));
    }
    SUBCASE("below contact is out of the model's domain") {
        CHECK_THROWS_AS(delta_E_nuclei(nuclear(a, 1.9 * a)), DomainError);
    }
    SUBCASE("monotone in separation") {
        double prev = 0.0;
        for (double dx = 2.0 * a; dx < 20.0 * a; dx += a) {
            const double de = delta_E_nuclei(nuclear(a, dx));
            CHECK(de > prev);
            prev = de;
        }
    }
}

TEST_CASE("wavepacket-sized spheres for the ideal device") {
    const double x0 = ground_state_size(1e-12, 2.0 * pi * 1000.0);
    const double de = delta_E_wavepacket(1e-12, silicon_nuclear_mass_kg, x0, inv_sqrt2);
    const double tau = collapse_time(de);
    CHECK(tau == doctest::Approx(1.146139).epsilon(1e-6));
    CHECK(tau > 0.1);
    CHECK(tau < 10.0);

    // bracket is 24/5 - 1 at kappa = 1/sqrt(2)
    const double gm = constants::G * 1e-12 * silicon_nuclear_mass_kg;
    CHECK(de == doctest::Approx(gm / x0 * (24.0 / 5.0 - 1.0)).epsilon(1e-12));

    // saturation at large coupling
    CHECK(delta_E_wavepacket(1e-12, silicon_nuclear_mass_kg, x0, 1e9) ==
          doctest::Approx(24.0 / 5.0 * gm / x0).epsilon(1e-8));

    // separation below sphere contact
    CHECK_THROWS_AS(delta_E_wavepacket(1e-12, silicon_nuclear_mass_kg, x0, 0.1),
                    DomainError);
}

TEST_CASE("nuclear-sphere form reduces to the wavepacket form") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> mass(1e-14, 1e-10);
    std::uniform_real_distribution<double> freq(100.0, 1e5);
    std::uniform_real_distribution<double> coupling(0.5, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double m = mass(rng);
        const double x0 = ground_state_size(m, freq(rng));
        const double kappa = coupling(rng);

        GravityModel g;
        g.total_mass_kg = m;
        g.constituent_mass_kg = silicon_nuclear_mass_kg;
        g.sphere_radius_m = x0 / 2.0;
        g.separation_m = std::sqrt(8.0) * kappa * x0;
        const double via_spheres = delta_E_nuclei(g);
        const double direct =
            delta_E_wavepacket(m, silicon_nuclear_mass_kg, x0, kappa);
        CHECK(std::abs(via_spheres - direct) / direct < 1e-12);
    }
}

TEST_CASE("self-energy is linear in both masses") {
    auto g = nuclear(1e-15, 1e-13);
    const double base = delta_E_nuclei(g);
    auto heavier = g;
    heavier.total_mass_kg *= 2.0;
    CHECK(delta_E_nuclei(heavier) == doctest::Approx(2.0 * base).epsilon(1e-15));
    auto denser = g;
    denser.constituent_mass_kg *= 2.0;
    CHECK(delta_E_nuclei(denser) == doctest::Approx(2.0 * base).epsilon(1e-15));
}

TEST_CASE("collapse time") {
    CHECK(collapse_time(constants::hbar) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(collapse_time(0.0), DomainError);
    CHECK_THROWS_AS(collapse_time(-1e-33), DomainError);
}

TEST_CASE("model validation") {
    auto g = nuclear(1e-15, 1e-13);
    g.constituent_mass_kg = 2.0 * g.total_mass_kg; // m1 > m
    CHECK_THROWS_AS(g.validate(), ValidationError);
    g = nuclear(0.0, 1e-13);
    CHECK_THROWS_AS(g.validate(), ValidationError);
}
