#pragma once

// Adaptive Dormand-Prince 5(4) integrator with the first-same-as-last
// optimization. Works on std::vector<double> and std::vector<complex>.
// The right-hand side is any callable rhs(t, y, dydt).

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "oscidec/errors.hpp"

namespace oscidec::ode {

struct Options {
    double rtol = 1e-10;
    double atol = 1e-13;
    double h_init = 0.0;          // 0 selects an automatic starting step
    double h_min_factor = 1e-14;  // minimum step as a fraction of the interval
    long max_steps = 100000000;
};

namespace detail {

inline double mag(double x) { return std::abs(x); }
inline double mag(const std::complex<double>& x) { return std::abs(x); }

template <class S>
double error_norm(const std::vector<S>& y0, const std::vector<S>& y1,
                  const std::vector<S>& err, double atol, double rtol)
{
    double acc = 0.0;
    const std::size_t n = y0.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = atol + rtol * std::max(mag(y0[i]), mag(y1[i]));
        const double r = mag(err[i]) / sc;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(n ? n : 1));
}

} // namespace detail

/// Integrate y' = rhs(t, y) from t0 to t1 in place. Throws StiffnessError
/// if the controller drives the step below h_min_factor * (t1 - t0).
template <class S, class RHS>
void integrate(RHS&& rhs, std::vector<S>& y, double t0, double t1,
               const Options& opt = {})
{
    if (t1 == t0) return;
    if (t1 < t0) throw std::invalid_argument("ode::integrate: t1 < t0");

    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                     a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // difference between 5th and embedded 4th order weights
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600;
    constexpr double e3 = 500.0 / 1113 - 7571.0 / 16695;
    constexpr double e4 = 125.0 / 192 - 393.0 / 640;
    constexpr double e5 = -2187.0 / 6784 + 92097.0 / 339200;
    constexpr double e6 = 11.0 / 84 - 187.0 / 2100;
    constexpr double e7 = -1.0 / 40;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    const std::size_t n = y.size();
    std::vector<S> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<S> ytmp(n), ynew(n), err(n);

    double t = t0;
    rhs(t, y, k1);

    double h = opt.h_init;
    if (h <= 0.0) {
        // starting step from the scale of y and y' (Hairer-style, one stage)
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ny = std::max(ny, detail::mag(y[i]));
            nf = std::max(nf, detail::mag(k1[i]));
        }
        h = (nf > 1e-12 && ny > 1e-12) ? 0.01 * ny / nf : (t1 - t0) * 1e-6;
        h = std::min(h, t1 - t0);
    }
    const double h_min = (t1 - t0) * opt.h_min_factor;

    for (long step = 0; step < opt.max_steps; ++step) {
        if (t >= t1) return;
        h = std::min(h, t1 - t);
        if (h < h_min)
            throw StiffnessError("ode::integrate: step size underflow at t = " +
                                     std::to_string(t), t);

        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a21 * k1[i]);
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);
        for (std::size_t i = 0; i < n; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);

        const double en = detail::error_norm(y, ynew, err, opt.atol, opt.rtol);
        if (en <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7); // first-same-as-last
            const double grow = en > 0.0 ? 0.9 * std::pow(en, -0.2) : 5.0;
            h *= std::min(5.0, std::max(0.2, grow));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(en, -0.2));
        }
    }
    throw StiffnessError("ode::integrate: step budget exhausted at t = " +
                             std::to_string(t), t);
}

} // namespace oscidec::ode
