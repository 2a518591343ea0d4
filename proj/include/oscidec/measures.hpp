#pragma once

// State-independent assembly of the coherence measure C, the thermalization
// measure D, and the linear entropy s from (mu, lambda, p0, pf), plus the
// equidistant-spectrum equilibrium formulas used as an exact D = 1 check.

#include <cmath>
#include <optional>
#include <stdexcept>

namespace oscidec {

/// One time point of every computed measure. C and D are absent where the
/// definitions degenerate (diagonal initial state; exact ground state).
struct MeasureRecord {
    double u = 0.0;
    double mu = 1.0;
    double lambda = 1.0;
    std::optional<double> C;
    std::optional<double> D;
    double p0 = 0.0;
    double s = 0.0;
};

/// C = (mu(t) - lambda(t)) / (mu(0) - lambda(0)). Absent (undefined) when
/// the initial state is diagonal, i.e. mu0 - lambda0 below tolerance.
inline std::optional<double> coherence(double mu_t, double lambda_t, double mu_0,
                                       double lambda_0, double tol = 1e-12)
{
    const double denom = mu_0 - lambda_0;
    if (!(denom > tol)) return std::nullopt;
    return (mu_t - lambda_t) / denom;
}

/// D = (1 - mu) / sqrt[(1 + mu - 2 p0)(1 + mu - 2 pf)]. The radicand factors
/// are Hilbert-Schmidt distances to the ground and top states; tiny negative
/// values from roundoff are clamped, genuinely negative ones rejected.
inline std::optional<double> thermalization(double mu, double p0, double pf = 0.0)
{
    double lo = 1.0 + mu - 2.0 * p0;
    double hi = 1.0 + mu - 2.0 * pf;
    if (lo < -1e-12 || hi < -1e-12)
        throw std::domain_error("thermalization: negative Hilbert-Schmidt distance (inconsistent inputs)");
    lo = std::max(lo, 0.0);
    hi = std::max(hi, 0.0);
    const double denom = std::sqrt(lo * hi);
    if (!(denom > 1e-12)) return std::nullopt; // exact ground state
    return (1.0 - mu) / denom;
}

inline double linear_entropy(double mu) { return 1.0 - mu; }

/// M-level system with Boltzmann factor xi = e^{-dE/T} in (0, 1).
struct EquidistantSpectrum {
    EquidistantSpectrum(double xi_, int m_) : xi(xi_), m(m_)
    {
        if (!(xi > 0.0 && xi < 1.0))
            throw std::domain_error("EquidistantSpectrum: xi must lie in (0, 1)");
        if (m < 2) throw std::domain_error("EquidistantSpectrum: need at least 2 levels");
    }
    double xi;
    int m;
};

struct EquilibriumSummary {
    double mu;
    double p0;
    double pf;
};

/// Equilibrium purity and edge populations of the truncated geometric
/// distribution p_n = xi^n (1 - xi)/(1 - xi^M).
inline EquilibriumSummary equidistant_equilibrium(const EquidistantSpectrum& spec)
{
    const double xi = spec.xi;
    const double xim = std::pow(xi, spec.m);
    const double p0 = (1.0 - xi) / (1.0 - xim);
    const double pf = std::pow(xi, spec.m - 1) * p0;
    const double mu = (1.0 - xi) * (1.0 + xim) / ((1.0 + xi) * (1.0 - xim));
    return {mu, p0, pf};
}

} // namespace oscidec
