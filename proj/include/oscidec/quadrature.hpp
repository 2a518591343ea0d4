#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "oscidec/errors.hpp"

namespace oscidec::quad {

namespace detail {

// 16-point Gauss-Legendre rule on [-1, 1], positive half (rule is symmetric).
inline constexpr double kNodes16[8] = {
    0.09501250983763744019,
    0.28160355077925891323,
    0.45801677765722738634,
    0.61787624440264374845,
    0.75540440835500303390,
    0.86563120238783174388,
    0.94457502307323257608,
    0.98940093499164993260,
};

inline constexpr double kWeights16[8] = {
    0.18945061045506849629,
    0.18260341504492358887,
    0.16915651939500253819,
    0.14959598881657673208,
    0.12462897125553387205,
    0.09515851168249278481,
    0.06225352393864789286,
    0.02715245941175409485,
};

} // namespace detail

/// Single 16-node Gauss-Legendre panel over [a, b].
template <class F>
double gl16(F&& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double d = h * detail::kNodes16[i];
        sum += detail::kWeights16[i] * (f(c - d) + f(c + d));
    }
    return h * sum;
}

/// Composite Gauss-Legendre integration of f over [a, b]. The panel count
/// starts at `panels0` and doubles until two successive composite estimates
/// agree to `rel_tol` (relative, with an absolute floor for near-zero
/// integrals). Throws QuadratureError when the cap is reached first.
template <class F>
double gauss_legendre(F&& f, double a, double b, double rel_tol = 1e-10,
                      int panels0 = 4, int max_panels = 4096)
{
    auto composite = [&](int n) {
        const double w = (b - a) / n;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += gl16(f, a + i * w, a + (i + 1) * w);
        return sum;
    };
    double prev = composite(panels0);
    for (int n = 2 * panels0; n <= max_panels; n *= 2) {
        const double cur = composite(n);
        if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300))
            return cur;
        prev = cur;
    }
    throw QuadratureError("gauss_legendre: panel cap reached without convergence", prev);
}

/// Mean of a 2*pi-periodic function over one period, by the uniform
/// trapezoid rule (spectrally accurate for smooth periodic integrands).
/// The node count starts at n0 and doubles, reusing previous evaluations,
/// until successive estimates differ by less than `tol * (1 + |mean|)`.
template <class F>
double periodic_mean(F&& f, double tol = 1e-11, int n0 = 512,
                     int max_nodes = 1 << 21)
{
    const double two_pi = 2.0 * M_PI;
    int n = n0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f(two_pi * i / n);
    double mean = sum / n;
    while (n < max_nodes) {
        // nodes of the doubled rule that are new: odd multiples of pi/n
        double add = 0.0;
        for (int i = 0; i < n; ++i) add += f(two_pi * (i + 0.5) / n);
        const double refined = 0.5 * (mean + add / n);
        n *= 2;
        if (std::abs(refined - mean) < tol * (1.0 + std::abs(refined)))
            return refined;
        mean = refined;
    }
    throw QuadratureError("periodic_mean: node cap reached without convergence", mean);
}

} // namespace oscidec::quad
