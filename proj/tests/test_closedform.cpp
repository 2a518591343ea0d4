#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "oscidec/closedform.hpp"
#include "oscidec/oracle.hpp"
#include "oscidec/propagator.hpp"
#include "oscidec/specfun.hpp"

using namespace oscidec;
using cf::complexd;

// ---------------------------------------------------------------------------
// Coherent family
// ---------------------------------------------------------------------------

TEST_CASE("Coherent photon distribution is normalized and non-negative")
{
    const BathParams bath(1.0, 1.5);
    const CompactTime u(0.3);
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
        const double p = cf::coherent_pn(n, 2.0, u, bath.nu);
        CHECK(p >= 0.0);
        sum += p;
    }
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(cf::coherent_pn(0, 2.0, u, bath.nu) ==
          Catch::Approx(cf::coherent_p0(2.0, u, bath.nu)).epsilon(1e-14));
}

TEST_CASE("Coherent photon distribution is Poisson in a zero-temperature bath")
{
    const CompactTime u(0.6);
    const double y = 2.5 * (1.0 - u.value);
    double logfact = 0.0;
    for (int n = 0; n < 40; ++n) {
        if (n > 0) logfact += std::log(static_cast<double>(n));
        const double poisson = std::exp(-y + n * std::log(y) - logfact);
        CHECK(cf::coherent_pn(n, 2.5, u, 0.0) == Catch::Approx(poisson).epsilon(1e-12));
    }
}

TEST_CASE("Coherent photon distribution matches the Laguerre representation")
{
    // p_n = s^n/(1+s)^{n+1} e^{-y} L_n(-a(1-u)/(s(1+s))), s = u nu, y = a(1-u)/(1+s)
    const double a = 1.0, u = 0.5, nu = 1.0;
    const double s = u * nu;
    const double x = -a * (1.0 - u) / (s * (1.0 + s));
    const double y = a * (1.0 - u) / (1.0 + s);
    for (int n = 0; n < 30; ++n) {
        const double ref = std::exp(n * std::log(s) - (n + 1) * std::log1p(s) - y) *
                           specfun::laguerre(n, x);
        CHECK(cf::coherent_pn(n, a, CompactTime(u), nu) ==
              Catch::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("Coherent diagonal purity equals the summed squared distribution")
{
    const BathParams bath(1.0, 2.0);
    for (double uv : {0.05, 0.4, 0.9}) {
        const CompactTime u(uv);
        double acc = 0.0;
        for (int n = 0; n < 400; ++n) {
            const double p = cf::coherent_pn(n, 3.0, u, bath.nu);
            acc += p * p;
        }
        CHECK(cf::coherent_lambda(3.0, u, bath) == Catch::Approx(acc).epsilon(1e-10));
    }
}

TEST_CASE("Coherent diagonal purity agrees with the generating-function route")
{
    const double a = 2.0;
    auto g0 = [a](complexd z) { return std::exp(a * (z - 1.0)); };
    for (double nu : {0.0, 1.3}) {
        for (double uv : {0.2, 0.7}) {
            const BathParams bath(1.0, nu);
            const CompactTime u(uv);
            const double via_gf = cf::lambda_from_gf(
                [&](complexd z) { return cf::evolve_diag_gf(g0, u, nu, z); });
            CHECK(via_gf == Catch::Approx(cf::coherent_lambda(a, u, bath)).margin(2e-10));
        }
    }
}

TEST_CASE("Generating-function evolution conserves total probability")
{
    auto g0 = [](complexd z) { return std::exp(1.7 * (z - 1.0)); };
    for (double nu : {0.0, 0.4, 6.0})
        for (double uv : {0.1, 0.5, 0.95}) {
            const complexd v = cf::evolve_diag_gf(g0, CompactTime(uv), nu, complexd(1.0));
            CHECK(v.real() == Catch::Approx(1.0).epsilon(1e-14));
            CHECK(v.imag() == Catch::Approx(0.0).margin(1e-14));
        }
}

TEST_CASE("Coherent measures at the endpoints")
{
    const BathParams bath(1.0, 1.0);
    const auto rec0 = cf::coherent_measures(1.0, 0.0, CompactTime(0.0), bath);
    CHECK(rec0.mu == 1.0);
    REQUIRE(rec0.C.has_value());
    CHECK(*rec0.C == 1.0);
    CHECK(rec0.s == 0.0);
    REQUIRE(rec0.D.has_value());
    CHECK(*rec0.D == Catch::Approx(0.0).margin(1e-14));

    const auto rec1 = cf::coherent_measures(1.0, 0.0, CompactTime(1.0 - 1e-12), bath);
    CHECK(rec1.mu == Catch::Approx(1.0 / 3.0).epsilon(1e-11));
    REQUIRE(rec1.D.has_value());
    CHECK(*rec1.D == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("Weak coherent states lose coherence on the relaxation timescale")
{
    // for a -> 0 the coherence reduces to mu^2 e^{-2 gamma t} = mu^2 (1 - u)
    const BathParams bath(1.0, 2.0);
    const double a = 0.001;
    for (double uv : {0.1, 0.5, 0.9}) {
        const auto rec = cf::coherent_measures(a, 0.0, CompactTime(uv), bath);
        REQUIRE(rec.C.has_value());
        CHECK(*rec.C == Catch::Approx(rec.mu * rec.mu * (1.0 - uv)).epsilon(0.01));
    }
}

TEST_CASE("Coherent Wigner function is a normalized spiraling Gaussian")
{
    // mass normalization is to 2 pi; purity is the L2 mass over 2 pi
    const BathParams bath(1.0, 0.5);
    const CompactTime u(0.3);
    const auto grid = prop::make_grid(10.0, 401);
    const auto w = prop::sample(grid, [&](double q, double p) {
        return cf::coherent_wigner(q, p, 1.0, 0.7, u, bath);
    });
    CHECK(prop::grid_mass(grid, w) / (2.0 * M_PI) == Catch::Approx(1.0).margin(1e-8));
    const double mu = prop::grid_l2sq(grid, w) / (2.0 * M_PI);
    CHECK(mu == Catch::Approx(cf::coherent_measures(1.0, 0.7, u, bath).mu).margin(1e-8));
}

// ---------------------------------------------------------------------------
// Cat family
// ---------------------------------------------------------------------------

TEST_CASE("Cat photon distribution starts at the exact initial populations")
{
    const double a = 3.0;
    for (double phi : {0.0, M_PI / 2, M_PI}) {
        const auto c = oscidec::detail::cat_amplitudes(a, phi, 40);
        for (int n = 0; n < 40; ++n)
            CHECK(cf::cat_pn(n, a, phi, CompactTime(0.0), 1.0) ==
                  Catch::Approx(std::norm(c[n])).margin(1e-12));
    }
}

TEST_CASE("Cat photon distribution is normalized with the squared sum matching lambda")
{
    const double a = 2.0, phi = M_PI;
    const BathParams bath(1.0, 0.7);
    const CompactTime u(0.4);
    double sum = 0.0, sq = 0.0;
    for (int n = 0; n < 300; ++n) {
        const double p = cf::cat_pn(n, a, phi, u, bath.nu);
        CHECK(p >= -1e-15);
        sum += p;
        sq += p * p;
    }
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
    const auto rec = cf::cat_measures(a, phi, u, bath);
    CHECK(rec.lambda == Catch::Approx(sq).epsilon(1e-9));
    CHECK(rec.p0 == Catch::Approx(cf::cat_pn(0, a, phi, u, bath.nu)).epsilon(1e-13));
}

TEST_CASE("Cat diagonal purity agrees with the generating-function route")
{
    const double a = 2.0, phi = 0.0, nu = 1.3;
    const BathParams bath(1.0, nu);
    const CompactTime u(0.35);
    std::vector<double> pn0(60);
    for (int n = 0; n < 60; ++n) pn0[n] = cf::cat_pn(n, a, phi, CompactTime(0.0), nu);
    auto g0 = [&](complexd z) {
        complexd acc = 0.0;
        for (int n = 59; n >= 0; --n) acc = acc * z + pn0[n];
        return acc;
    };
    const double via_gf = cf::lambda_from_gf(
        [&](complexd z) { return cf::evolve_diag_gf(g0, u, nu, z); });
    CHECK(via_gf == Catch::Approx(cf::cat_measures(a, phi, u, bath).lambda).margin(2e-10));
}

TEST_CASE("Cat measures are exactly normalized at u = 0")
{
    for (double phi : {0.0, M_PI / 2, M_PI}) {
        const BathParams bath(1.0, 4.0);
        const auto rec = cf::cat_measures(1.5, phi, CompactTime(0.0), bath);
        CHECK(rec.mu == Catch::Approx(1.0).epsilon(1e-13));
        REQUIRE(rec.C.has_value());
        CHECK(*rec.C == Catch::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Cat Wigner function is normalized and reproduces the total purity")
{
    const double a = 2.0, phi = M_PI / 2;
    const BathParams bath(1.0, 1.0);
    const CompactTime u(0.4);
    const auto grid = prop::make_grid(12.0, 481);
    const auto w = prop::sample(grid, [&](double q, double p) {
        return cf::cat_wigner(q, p, a, phi, u, bath);
    });
    CHECK(prop::grid_mass(grid, w) / (2.0 * M_PI) == Catch::Approx(1.0).margin(1e-7));
    const double mu = prop::grid_l2sq(grid, w) / (2.0 * M_PI);
    CHECK(mu == Catch::Approx(cf::cat_measures(a, phi, u, bath).mu).margin(1e-7));

    const auto wm = prop::sample(grid, [&](double q, double p) {
        return cf::mixture_wigner(q, p, a, u, bath);
    });
    CHECK(prop::grid_mass(grid, wm) / (2.0 * M_PI) == Catch::Approx(1.0).margin(1e-7));
}

TEST_CASE("Accompanying coherence starts at one and decays")
{
    const BathParams bath(1.0, 2.0);
    for (double phi : {0.0, M_PI}) {
        const double f0 = cf::accompanying_coherence(3.0, phi, CompactTime(0.0), bath);
        CHECK(f0 == Catch::Approx(1.0).epsilon(1e-12));
        const double f1 = cf::accompanying_coherence(3.0, phi, CompactTime(0.3), bath);
        const double f2 = cf::accompanying_coherence(3.0, phi, CompactTime(0.7), bath);
        CHECK(f1 < f0);
        CHECK(f2 < f1);
        CHECK(f2 > 0.0);
    }
    CHECK_THROWS_AS(cf::accompanying_coherence(0.0, 0.0, CompactTime(0.2), bath),
                    std::domain_error);
}

// ---------------------------------------------------------------------------
// Gaussian generating functions
// ---------------------------------------------------------------------------

TEST_CASE("Vacuum and thermal diagonal generating functions take closed values")
{
    const GaussianState vac{0.0, 0.0, 0.5, 0.5, 0.0};
    for (double zr : {0.0, 0.3, 1.0})
        for (double zi : {0.0, 0.4}) {
            const complexd g = cf::gaussian_diag_gf(vac, complexd(zr, zi));
            CHECK(std::abs(g - complexd(1.0)) < 1e-13);
        }
    const double nu = 2.0;
    const GaussianState th{0.0, 0.0, nu + 0.5, nu + 0.5, 0.0};
    for (double zr : {0.0, 0.5, 1.0}) {
        const complexd g = cf::gaussian_diag_gf(th, complexd(zr, 0.2));
        const complexd ref = 1.0 / (1.0 + nu * (1.0 - complexd(zr, 0.2)));
        CHECK(std::abs(g - ref) < 1e-12);
    }
}

TEST_CASE("Displaced Gaussian generating function reduces to the Poisson form")
{
    const double a = 1.8, phi = 0.9;
    const auto g0 = initial_gaussian(CoherentState{a, phi});
    for (double zr : {0.0, 0.6, 1.0})
        for (double zi : {-0.5, 0.0, 0.3}) {
            const complexd z(zr, zi);
            const complexd got = cf::gaussian_diag_gf(g0, z);
            const complexd ref = std::exp(a * (z - 1.0));
            CHECK(std::abs(got - ref) < 1e-12);
        }
}

TEST_CASE("Gaussian generating-function coefficients satisfy their sum rules")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> qs(-3.0, 3.0), ss(0.5, 4.0), cs(-0.4, 0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const GaussianState g{qs(rng), qs(rng), ss(rng), ss(rng), cs(rng)};
        const auto par = cf::gaussian_gf_params(g);
        CHECK(par.c0 + par.c1 + par.c2 == Catch::Approx(1.0).epsilon(1e-12));
        // normalization G(1) = 1 requires g1 - g2 = g0
        CHECK(par.g1 - par.g2 == Catch::Approx(par.g0).margin(1e-10));
        const complexd g1v = cf::gaussian_diag_gf(g, complexd(1.0));
        CHECK(std::abs(g1v - complexd(1.0)) < 1e-12);
    }
}

// ---------------------------------------------------------------------------
// Squeezed family
// ---------------------------------------------------------------------------

TEST_CASE("Squeezed generating-function coefficients obey the exact identities")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> us(0.0, 0.999), nus(0.0, 10.0), rs(0.0, 3.0),
        ps(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 100; ++trial) {
        const double u = us(rng), nu = nus(rng), rho = rs(rng), phi = ps(rng);
        const auto k = cf::squeezed_gf_coeffs(1.0, phi, rho, CompactTime(u), nu);
        const double scale = std::abs(k.f) + std::abs(k.b) + std::abs(k.c) + 1.0;
        CHECK(std::abs(k.f - k.b + k.c - 1.0) < 1e-11 * scale);
        const double scale2 = std::abs(k.F_) + std::abs(k.B_) + std::abs(k.C_) + 1.0;
        CHECK(std::abs(k.F_ - k.B_ + k.C_) < 1e-12 * scale2);
    }
}

TEST_CASE("Squeezed generating function equals the evolved Gaussian route")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> zs(0.0, 1.0);
    for (double rho : {0.5, 1.5}) {
        for (double a : {0.0, 1.0}) {
            const double phi = M_PI / 2;
            const auto g0state = initial_gaussian(SqueezedState{a, phi, rho});
            for (double nu : {0.0, 2.0}) {
                const CompactTime u(0.45);
                auto g0 = [&](complexd z) { return cf::gaussian_diag_gf(g0state, z); };
                for (int trial = 0; trial < 20; ++trial) {
                    const complexd z(zs(rng), 0.0);
                    const complexd via_map = cf::evolve_diag_gf(g0, u, nu, z);
                    const complexd direct = cf::squeezed_gf(a, phi, rho, u, nu, z);
                    CHECK(std::abs(via_map - direct) < 1e-10);
                }
                const complexd at_one = cf::squeezed_gf(a, phi, rho, u, nu, complexd(1.0));
                CHECK(std::abs(at_one - complexd(1.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("Squeezed diagonal purity agrees with its generating function")
{
    const double a = 1.0, phi = M_PI / 2, rho = 1.5, nu = 0.8;
    const BathParams bath(1.0, nu);
    for (double uv : {0.0, 0.35, 0.8}) {
        const CompactTime u(uv);
        const double direct = cf::squeezed_lambda(a, phi, rho, u, bath);
        const double via_gf = cf::lambda_from_gf(
            [&](complexd z) { return cf::squeezed_gf(a, phi, rho, u, nu, z); });
        CHECK(direct == Catch::Approx(via_gf).margin(2e-9));
    }
}

TEST_CASE("Squeezed initial diagonal matches the amplitude construction")
{
    const double a = 1.0, phi = M_PI / 2, rho = 1.5;
    const BathParams bath(1.0, 0.6);
    const auto diag = oracle::state_diagonal(SqueezedState{a, phi, rho}, 320);
    double lam0 = 0.0;
    for (double p : diag) lam0 += p * p;
    // the amplitude recursion itself carries a few 1e-9 of noise at this depth
    CHECK(cf::squeezed_lambda(a, phi, rho, CompactTime(0.0), bath) ==
          Catch::Approx(lam0).epsilon(1e-8));
    CHECK(cf::squeezed_p0(a, phi, rho, CompactTime(0.0), bath) ==
          Catch::Approx(diag[0]).epsilon(1e-8));
}

TEST_CASE("Squeezed total purity closed form behaves at the ends")
{
    const BathParams bath(1.0, 2.0);
    CHECK(cf::squeezed_mu(1.3, CompactTime(0.0), bath) == 1.0);
    CHECK(cf::squeezed_mu(1.3, CompactTime(1.0 - 1e-12), bath) ==
          Catch::Approx(0.2).epsilon(1e-9));
    // purity dips below the coherent value at intermediate times
    CHECK(cf::squeezed_mu(1.3, CompactTime(0.5), bath) <
          xi_nu(CompactTime(0.5), bath.nu));
}

TEST_CASE("Squeezed quadrature result is insensitive to the requested tolerance")
{
    const BathParams bath(1.0, 1.0);
    const double v1 = cf::squeezed_lambda(1.0, M_PI / 2, 2.0, CompactTime(0.3), bath, 1e-9);
    const double v2 = cf::squeezed_lambda(1.0, M_PI / 2, 2.0, CompactTime(0.3), bath, 1e-12);
    CHECK(v1 == Catch::Approx(v2).margin(5e-9));
}

// ---------------------------------------------------------------------------
// Fock family
// ---------------------------------------------------------------------------

TEST_CASE("Fock ground-state population takes its closed values")
{
    const BathParams bath(1.0, 1.5);
    CHECK(cf::fock_p0(0, CompactTime(0.0), bath) == 1.0);
    CHECK(cf::fock_p0(3, CompactTime(0.0), bath) == 0.0);
    const double u = 0.4, s = u * 1.5;
    CHECK(cf::fock_p0(0, CompactTime(u), bath) == Catch::Approx(1.0 / (1.0 + s)));
    const double ref = std::pow(u * 2.5, 2) / std::pow(1.0 + s, 3);
    CHECK(cf::fock_p0(2, CompactTime(u), bath) == Catch::Approx(ref).epsilon(1e-13));
}

TEST_CASE("Fock Legendre and quadrature purities agree away from the degenerate ray")
{
    for (int m : {1, 5, 20}) {
        for (double nu : {0.0, 1.0, 10.0}) {
            const BathParams bath(1.0, nu);
            for (double uv : {0.05, 0.3, 0.65, 0.95}) {
                const CompactTime u(uv);
                const double closed = cf::fock_lambda(m, u, bath);
                const double quad = cf::fock_lambda_quadrature(m, u, bath);
                CHECK(closed == Catch::Approx(quad).margin(1e-12));
            }
        }
    }
}

TEST_CASE("Fock purity crosses the degenerate ray smoothly")
{
    const double nu = 0.3;
    const BathParams bath(1.0, nu);
    const double ustar = 0.5 / (1.0 + nu);
    const int m = 6;
    const double at = cf::fock_lambda(m, CompactTime(ustar), bath);
    const double below = cf::fock_lambda(m, CompactTime(ustar - 5e-7), bath);
    const double above = cf::fock_lambda(m, CompactTime(ustar + 5e-7), bath);
    CHECK(std::abs(at - below) < 1e-5);
    CHECK(std::abs(at - above) < 1e-5);
    CHECK(at == Catch::Approx(cf::fock_lambda_quadrature(m, CompactTime(ustar), bath))
                    .margin(1e-13));
}

TEST_CASE("Evolved vacuum is the thermal family")
{
    const BathParams bath(1.0, 2.0);
    for (double uv : {0.2, 0.8}) {
        const auto rec = cf::fock_measures(0, CompactTime(uv), bath);
        CHECK(rec.mu == Catch::Approx(xi_nu(CompactTime(uv), bath.nu)).epsilon(1e-14));
        CHECK_FALSE(rec.C.has_value());
        REQUIRE(rec.D.has_value());
        CHECK(*rec.D == Catch::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("Fock measures have no coherence and identical purities")
{
    const BathParams bath(1.0, 1.0);
    const auto rec = cf::fock_measures(4, CompactTime(0.3), bath);
    CHECK_FALSE(rec.C.has_value());
    CHECK(rec.mu == rec.lambda);
    CHECK(rec.s == 1.0 - rec.mu);
}

// ---------------------------------------------------------------------------
// Dispatch and global properties
// ---------------------------------------------------------------------------

TEST_CASE("Family dispatch routes to the per-family measures")
{
    // compared through Approx: constant folding may differ from libm by an ulp
    const BathParams bath(1.0, 0.5);
    const CompactTime u(0.25);
    CHECK(cf::measures(CoherentState{2.0, 0.3}, u, bath).lambda ==
          Catch::Approx(cf::coherent_measures(2.0, 0.3, u, bath).lambda).epsilon(1e-14));
    CHECK(cf::measures(CatState{2.0, M_PI}, u, bath).mu ==
          Catch::Approx(cf::cat_measures(2.0, M_PI, u, bath).mu).epsilon(1e-14));
    CHECK(cf::measures(SqueezedState{1.0, 0.2, 0.7}, u, bath).p0 ==
          Catch::Approx(cf::squeezed_measures(1.0, 0.2, 0.7, u, bath).p0).epsilon(1e-14));
    CHECK(cf::measures(FockState{3}, u, bath).mu ==
          Catch::Approx(cf::fock_measures(3, u, bath).mu).epsilon(1e-14));
}

TEST_CASE("Thermalization stays within its physical bounds on every family")
{
    const std::vector<InitialState> states = {
        CoherentState{1.0, 0.0}, CoherentState{20.0, 0.0}, CatState{5.0, M_PI},
        CatState{2.0, 0.0},      SqueezedState{1.0, M_PI / 2, 2.0},
        SqueezedState{0.0, 0.0, 1.0}, FockState{1}, FockState{12}};
    for (const auto& state : states) {
        for (double nu : {0.01, 1.0, 8.0}) {
            const BathParams bath(1.0, nu);
            for (int k = 1; k < 40; ++k) {
                const auto rec = cf::measures(state, CompactTime(k / 40.0), bath);
                if (rec.D) {
                    CHECK(*rec.D >= 0.0);
                    CHECK(*rec.D <= 1.0 + 1e-10);
                }
                CHECK(rec.mu > 0.0);
                CHECK(rec.mu <= 1.0 + 1e-12);
                CHECK(rec.lambda <= rec.mu + 1e-12);
            }
        }
    }
}
