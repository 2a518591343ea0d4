#pragma once

// Fock-basis amplitude construction for the four state families. Shared by
// the model layer (expectation values) and the oracle (density matrices).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace oscidec::detail {

/// Coherent-state amplitudes c_n = e^{-a/2} alpha^n / sqrt(n!) with
/// alpha = sqrt(a) e^{i phi}. Carries the exact (infinite-basis)
/// normalization, so 1 - sum |c_n|^2 is the truncation tail.
inline std::vector<std::complex<double>> coherent_amplitudes(double a, double phi, int dim)
{
    std::vector<std::complex<double>> c(dim);
    if (a == 0.0) {
        c[0] = 1.0;
        return c;
    }
    const double log_alpha = 0.5 * std::log(a);
    double log_fact = 0.0; // log n!
    for (int n = 0; n < dim; ++n) {
        if (n > 0) log_fact += std::log(static_cast<double>(n));
        const double mag = std::exp(-0.5 * a + n * log_alpha - 0.5 * log_fact);
        c[n] = std::polar(mag, n * phi);
    }
    return c;
}

/// Cat-state amplitudes: N (|alpha> + e^{i phi_cat} |-alpha>) with alpha =
/// sqrt(a) real. Exact normalization N^2 = 1/(2 [1 + cos(phi_cat) e^{-2a}]).
inline std::vector<std::complex<double>> cat_amplitudes(double a, double phi_cat, int dim)
{
    const double denom = 1.0 + std::cos(phi_cat) * std::exp(-2.0 * a);
    if (denom < 1e-12)
        throw std::domain_error("cat_amplitudes: normalization diverges (odd cat at a = 0)");
    const double norm = 1.0 / std::sqrt(2.0 * denom);
    auto c = coherent_amplitudes(a, 0.0, dim);
    const std::complex<double> phase = std::polar(1.0, phi_cat);
    for (int n = 0; n < dim; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        c[n] *= norm * (1.0 + phase * sign);
    }
    return c;
}

/// Squeezed-state amplitudes from the eigenvalue recursion
///   cosh(rho) sqrt(n+1) c_{n+1} + sinh(rho) sqrt(n) c_{n-1} = alpha c_n,
/// alpha = sqrt(a) e^{i phi}, seeded at c_0 = 1 and normalized over dim.
/// Both solutions of the recursion decay (ratio ~ tanh rho), so the upward
/// sweep is stable.
inline std::vector<std::complex<double>> squeezed_amplitudes(double a, double phi,
                                                             double rho, int dim)
{
    std::vector<std::complex<double>> c(dim);
    c[0] = 1.0;
    const std::complex<double> alpha = std::polar(std::sqrt(a), phi);
    const double ch = std::cosh(rho);
    const double sh = std::sinh(rho);
    for (int n = 0; n + 1 < dim; ++n) {
        const std::complex<double> prev = (n >= 1) ? c[n - 1] : 0.0;
        c[n + 1] = (alpha * c[n] - sh * std::sqrt(static_cast<double>(n)) * prev) /
                   (ch * std::sqrt(n + 1.0));
    }
    double norm2 = 0.0;
    for (const auto& v : c) norm2 += std::norm(v);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : c) v *= inv;
    return c;
}

inline std::vector<std::complex<double>> fock_amplitudes(int m, int dim)
{
    if (m >= dim) throw std::invalid_argument("fock_amplitudes: dim must exceed m");
    std::vector<std::complex<double>> c(dim);
    c[m] = 1.0;
    return c;
}

/// Mean photon number, mean lowering operator, and fluctuation number
/// sigma_a = <n> - |<a>|^2 of an amplitude vector.
struct AmplitudeMoments {
    double nbar;
    std::complex<double> amean;
    double sigma_a;
};

inline AmplitudeMoments amplitude_moments(const std::vector<std::complex<double>>& c)
{
    double nbar = 0.0;
    std::complex<double> am = 0.0;
    const int dim = static_cast<int>(c.size());
    for (int n = 0; n < dim; ++n) {
        nbar += n * std::norm(c[n]);
        if (n + 1 < dim) am += std::conj(c[n]) * std::sqrt(n + 1.0) * c[n + 1];
    }
    return {nbar, am, nbar - std::norm(am)};
}

} // namespace oscidec::detail
