#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oscidec/model.hpp"

using namespace oscidec;

TEST_CASE("Compact time round-trips with physical time")
{
    const BathParams bath(0.7, 2.0);
    for (double t : {0.0, 0.01, 0.5, 3.0, 11.0}) {
        const auto u = compact_time(t, bath);
        CHECK(physical_time(u, bath) == Catch::Approx(t).margin(1e-12));
    }
    for (double uv : {0.0, 0.2, 0.77, 0.999}) {
        const double t = physical_time(CompactTime(uv), bath);
        CHECK(compact_time(t, bath).value == Catch::Approx(uv).margin(1e-12));
    }
}

TEST_CASE("Compact time and bath parameters are validated")
{
    CHECK_THROWS_AS(CompactTime(-0.1), std::domain_error);
    CHECK_THROWS_AS(CompactTime(1.0), std::domain_error);
    CHECK_THROWS_AS(CompactTime(1.5), std::domain_error);
    CHECK_THROWS_AS(BathParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(BathParams(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(BathParams(1.0, -0.5), std::domain_error);
    const BathParams bath(1.0, 0.0);
    CHECK_THROWS_AS(compact_time(-1e-9, bath), std::domain_error);
}

TEST_CASE("The purity factor takes its closed values")
{
    CHECK(xi_nu(CompactTime(0.0), 5.0) == 1.0);
    CHECK(xi_nu(CompactTime(0.5), 3.0) == Catch::Approx(0.25).epsilon(1e-15));
    CHECK(xi_nu(CompactTime(0.999), 0.0) == 1.0);
}

TEST_CASE("State validation rejects malformed members of each family")
{
    CHECK_THROWS_AS(validate(InitialState(CoherentState{-1.0, 0.0})), std::domain_error);
    CHECK_THROWS_AS(validate(InitialState(FockState{-2})), std::domain_error);
    // odd cat at a = 0 is the zero vector
    CHECK_THROWS_AS(validate(InitialState(CatState{0.0, M_PI})), std::domain_error);
    CHECK_NOTHROW(validate(InitialState(CatState{0.0, 0.0})));
    CHECK_NOTHROW(validate(InitialState(SqueezedState{0.0, 0.0, 2.0})));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(InitialState(CoherentState{1.0, inf})), std::domain_error);
}

TEST_CASE("Fluctuation energy of the closed families")
{
    CHECK(fluctuation_energy(CoherentState{3.0, 0.4}).sigma_a == 0.0);
    CHECK(fluctuation_energy(CoherentState{3.0, 0.4}).e0 == 0.5);
    const double sh = std::sinh(1.3);
    CHECK(fluctuation_energy(SqueezedState{2.0, 0.1, 1.3}).sigma_a ==
          Catch::Approx(sh * sh).epsilon(1e-14));
    CHECK(fluctuation_energy(FockState{7}).sigma_a == 7.0);
}

TEST_CASE("Cat fluctuation energy matches the analytic overlap formulas")
{
    // <n> = a (1 - cos phi e^{-2a}) / (1 + cos phi e^{-2a}),
    // |<a>|^2 = a e^{-4a} sin^2 phi / (1 + cos phi e^{-2a})^2
    for (double a : {0.5, 2.0, 20.0}) {
        for (double phi : {0.0, M_PI / 2, M_PI}) {
            const double e = std::exp(-2.0 * a);
            const double den = 1.0 + std::cos(phi) * e;
            const double nbar = a * (1.0 - std::cos(phi) * e) / den;
            const double amean2 = a * e * e * std::sin(phi) * std::sin(phi) / (den * den);
            const double got = fluctuation_energy(CatState{a, phi}).sigma_a;
            CHECK(got == Catch::Approx(nbar - amean2).epsilon(1e-10));
        }
    }
}

TEST_CASE("Squeeze factor identities")
{
    CHECK(squeeze_factor(0.0, 1.23) == 1.0);
    CHECK(squeeze_factor(1.1, M_PI / 2) == Catch::Approx(std::exp(2.2)).epsilon(1e-12));
    CHECK(squeeze_factor(1.1, 0.0) == Catch::Approx(std::exp(-2.2)).epsilon(1e-12));
    CHECK(squeeze_factor(0.8, 0.3) ==
          Catch::Approx(squeeze_factor(0.8, 0.3 + M_PI)).epsilon(1e-12));
}

TEST_CASE("Classical energy is the mean-field energy of the Gaussian families")
{
    CHECK(classical_energy(CoherentState{2.5, 1.0}) == 2.5);
    const double r = squeeze_factor(2.0, M_PI / 2);
    CHECK(classical_energy(SqueezedState{1.5, M_PI / 2, 2.0}) ==
          Catch::Approx(1.5 * r).epsilon(1e-14));
    CHECK_THROWS_AS(classical_energy(InitialState(CatState{2.0, 0.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(classical_energy(InitialState(FockState{3})), std::invalid_argument);
}

TEST_CASE("Initial Gaussian moments are minimum-uncertainty")
{
    const auto vac = initial_gaussian(CoherentState{0.0, 0.0});
    CHECK(vac.sigma_q == 0.5);
    CHECK(vac.sigma_p == 0.5);
    CHECK(vac.det2() == 0.25);

    const auto g = initial_gaussian(SqueezedState{2.0, M_PI / 2, 1.5});
    CHECK(g.qbar == Catch::Approx(0.0).margin(1e-15));
    CHECK(g.pbar == Catch::Approx(2.0 * std::exp(1.5)).epsilon(1e-14));
    CHECK(g.sigma_q == Catch::Approx(0.5 * std::exp(-3.0)).epsilon(1e-14));
    CHECK(g.det2() == Catch::Approx(0.25).epsilon(1e-14));
    CHECK_NOTHROW(validate(g));
    CHECK_THROWS_AS(initial_gaussian(InitialState(FockState{1})), std::invalid_argument);
}

TEST_CASE("Gaussian validation enforces the uncertainty bound")
{
    CHECK_THROWS_AS(validate(GaussianState{0, 0, 0.4, 0.4, 0.0}), std::domain_error);
    CHECK_THROWS_AS(validate(GaussianState{0, 0, -1.0, 1.0, 0.0}), std::domain_error);
    CHECK_NOTHROW(validate(GaussianState{1, 2, 0.5, 0.5, 0.0}));
    CHECK_NOTHROW(validate(GaussianState{0, 0, 2.0, 2.0, 1.0}));
}
