#pragma once

// Minimal special-function kernel: exactly what the closed-form measures
// need, nothing more. Laguerre and Legendre go through upward three-term
// recurrences (stable on the argument ranges that occur here, where the
// terms grow monotonically). I0 is evaluated in exponentially scaled form
// so that callers can pair it with their own exponents without overflow.
// J0 uses the power series below |x| = 15 and the Hankel asymptotic
// expansion above; the two branches overlap to ~1e-12 at the seam.

#include <cmath>
#include <stdexcept>

namespace oscidec::specfun {

namespace detail {

inline constexpr double kBesselSeam = 15.0;

/// Power-series evaluation of exp(-|x|) * I0(x). Intended for |x| <= seam.
inline double i0e_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return std::exp(-std::abs(x)) * sum;
}

/// Asymptotic evaluation of exp(-|x|) * I0(x) for large |x|.
inline double i0e_asymptotic(double x)
{
    const double ax = std::abs(x);
    double term = 1.0;
    double sum = 1.0;
    double prev = HUGE_VAL;
    for (int k = 1; k < 30; ++k) {
        const double f = (2.0 * k - 1.0);
        term *= f * f / (8.0 * k * ax);
        if (term >= prev) break; // divergent tail reached
        sum += term;
        prev = term;
        if (term < 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * M_PI * ax);
}

/// Alternating power series for J0, compensated summation. |x| <= seam.
inline double j0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double carry = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

/// Hankel asymptotic expansion for J0, valid for |x| >= seam.
inline double j0_asymptotic(double x)
{
    const double ax = std::abs(x);
    // J0(x) = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)) with
    // P and Q built from c_m = ((2m-1)!!)^2 / (m! 8^m x^m); the sign of
    // the m-th term cycles +,-,-,+ over m mod 4.
    double term = 1.0;
    double p = 1.0;
    double q = 0.0;
    double prev = HUGE_VAL;
    for (int m = 1; m < 40; ++m) {
        const double f = 2.0 * m - 1.0;
        term *= f * f / (8.0 * m * ax);
        if (term >= prev) break; // smallest term of the divergent series
        prev = term;
        const bool even = (m % 2 == 0);
        double sign;
        if (even) sign = (m % 4 == 0) ? 1.0 : -1.0;
        else      sign = ((m + 1) % 4 == 0) ? 1.0 : -1.0;
        if (even) p += sign * term;
        else      q += sign * term;
        if (term < 1e-17) break;
    }
    const double chi = ax - 0.25 * M_PI;
    return std::sqrt(2.0 / (M_PI * ax)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace detail

/// Laguerre polynomial L_n(x) by upward recurrence.
inline double laguerre(int n, double x)
{
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    if (!std::isfinite(x)) throw std::domain_error("laguerre: non-finite argument");
    if (n == 0) return 1.0;
    double lm = 1.0;
    double l = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double ln = ((2.0 * k + 1.0 - x) * l - k * lm) / (k + 1.0);
        lm = l;
        l = ln;
    }
    return l;
}

/// Legendre polynomial P_n(x) by upward recurrence. The argument may lie
/// outside [-1, 1]; values then grow like x^n and the caller is responsible
/// for overflow handling.
inline double legendre(int n, double x)
{
    if (n < 0) throw std::invalid_argument("legendre: negative degree");
    if (!std::isfinite(x)) throw std::domain_error("legendre: non-finite argument");
    if (n == 0) return 1.0;
    double pm = 1.0;
    double p = x;
    for (int k = 1; k < n; ++k) {
        const double pn = ((2.0 * k + 1.0) * x * p - k * pm) / (k + 1.0);
        pm = p;
        p = pn;
    }
    return p;
}

/// Exponentially scaled modified Bessel function exp(-|x|) I0(x).
inline double bessel_i0_scaled(double x)
{
    if (!std::isfinite(x)) throw std::domain_error("bessel_i0_scaled: non-finite argument");
    const double ax = std::abs(x);
    return ax <= detail::kBesselSeam ? detail::i0e_series(ax)
                                     : detail::i0e_asymptotic(ax);
}

/// Bessel function of the first kind J0(x).
inline double bessel_j0(double x)
{
    if (!std::isfinite(x)) throw std::domain_error("bessel_j0: non-finite argument");
    const double ax = std::abs(x);
    return ax <= detail::kBesselSeam ? detail::j0_series(ax)
                                     : detail::j0_asymptotic(ax);
}

} // namespace oscidec::specfun
