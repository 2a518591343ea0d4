#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oscidec/quadrature.hpp"
#include "oscidec/specfun.hpp"

using namespace oscidec;

namespace {

// Reference J0 and e^{-x} I0 from the defining power series in long double.
// Only trustworthy for small arguments, which is all the tests need.
long double j0_reference(long double x)
{
    const long double q = 0.25L * x * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 60; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
    }
    return sum;
}

long double i0e_reference(long double x)
{
    const long double q = 0.25L * x * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
    }
    return std::exp(-std::abs(x)) * sum;
}

} // namespace

TEST_CASE("Laguerre polynomials match explicit low orders")
{
    CHECK(specfun::laguerre(0, 0.7) == 1.0);
    CHECK(specfun::laguerre(1, 0.7) == Catch::Approx(0.3).epsilon(1e-15));
    const double x = 0.3;
    const double l5 = (-std::pow(x, 5) + 25 * std::pow(x, 4) - 200 * std::pow(x, 3) +
                       600 * x * x - 600 * x + 120) / 120.0;
    CHECK(specfun::laguerre(5, x) == Catch::Approx(l5).epsilon(1e-13));
}

TEST_CASE("Laguerre recurrence residual vanishes at random points")
{
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> xs(-20.0, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = xs(rng);
        const int k = 1 + static_cast<int>(rng() % 49);
        const double lm = specfun::laguerre(k - 1, x);
        const double l = specfun::laguerre(k, x);
        const double lp = specfun::laguerre(k + 1, x);
        const double resid = (k + 1.0) * lp - (2.0 * k + 1.0 - x) * l + k * lm;
        const double scale = std::abs(lp) + std::abs(l) + std::abs(lm) + 1.0;
        CHECK(std::abs(resid) < 1e-12 * scale);
    }
}

TEST_CASE("Legendre polynomials match explicit low orders and endpoint values")
{
    const double x = 1.3;
    const double p4 = (35 * std::pow(x, 4) - 30 * x * x + 3) / 8.0;
    CHECK(specfun::legendre(4, x) == Catch::Approx(p4).epsilon(1e-13));
    for (int n = 0; n <= 12; ++n)
        CHECK(specfun::legendre(n, 1.0) == Catch::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Legendre values stay within [-1, 1] on the unit interval")
{
    for (int n : {2, 7, 15, 40})
        for (int i = 0; i <= 50; ++i) {
            const double x = -1.0 + 2.0 * i / 50.0;
            CHECK(std::abs(specfun::legendre(n, x)) <= 1.0 + 1e-14);
        }
}

TEST_CASE("Scaled Bessel I0 agrees with the series reference")
{
    CHECK(specfun::bessel_i0_scaled(0.0) == 1.0);
    for (double x : {0.1, 1.0, 2.0, 7.5, 14.9}) {
        const double ref = static_cast<double>(i0e_reference(x));
        CHECK(specfun::bessel_i0_scaled(x) == Catch::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("Scaled Bessel I0 is even, bounded, and decays at large argument")
{
    for (double x : {0.5, 3.0, 12.0, 40.0, 700.0}) {
        const double v = specfun::bessel_i0_scaled(x);
        CHECK(specfun::bessel_i0_scaled(-x) == v);
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(specfun::bessel_i0_scaled(700.0) < specfun::bessel_i0_scaled(40.0));
}

TEST_CASE("Bessel branches overlap at the seam")
{
    const double s = specfun::detail::kBesselSeam;
    CHECK(specfun::detail::i0e_series(s) ==
          Catch::Approx(specfun::detail::i0e_asymptotic(s)).epsilon(1e-11));
    CHECK(specfun::detail::j0_series(s) ==
          Catch::Approx(specfun::detail::j0_asymptotic(s)).margin(1e-12));
}

TEST_CASE("Bessel J0 agrees with the series reference at small argument")
{
    CHECK(specfun::bessel_j0(0.0) == 1.0);
    for (double x : {0.3, 1.5, 4.0, 9.2, 14.5}) {
        const double ref = static_cast<double>(j0_reference(x));
        CHECK(specfun::bessel_j0(x) == Catch::Approx(ref).margin(1e-13));
        CHECK(specfun::bessel_j0(-x) == specfun::bessel_j0(x));
    }
}

TEST_CASE("Bessel J0 agrees with its integral representation at large argument")
{
    // J0(x) = (2/pi) Int_0^{pi/2} cos(x sin t) dt
    for (double x : {15.0, 20.0, 57.3, 101.0, 999.0}) {
        const double ref =
            (2.0 / M_PI) *
            quad::gauss_legendre([x](double t) { return std::cos(x * std::sin(t)); },
                                 0.0, 0.5 * M_PI, 1e-13);
        CHECK(specfun::bessel_j0(x) == Catch::Approx(ref).margin(1e-12));
    }
}

TEST_CASE("Bessel J0 first root sits between 2.40 and 2.41")
{
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (specfun::bessel_j0(mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK(lo > 2.40);
    CHECK(lo < 2.41);
    CHECK(std::abs(static_cast<double>(j0_reference(lo))) < 1e-12);
}

TEST_CASE("Special functions reject invalid input")
{
    CHECK_THROWS_AS(specfun::laguerre(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(specfun::legendre(-2, 0.0), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(specfun::laguerre(3, inf), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_i0_scaled(inf), std::domain_error);
    CHECK_THROWS_AS(specfun::bessel_j0(std::nan("")), std::domain_error);
}
