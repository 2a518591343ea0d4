#pragma once

// Domain types: bath parameters, compact time, the four initial-state
// families, Gaussian phase-space states, and the elementary energy
// functionals of the initial state. Units: hbar = omega = 1.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <variant>

#include "oscidec/detail/amplitudes.hpp"

namespace oscidec {

/// Damping rate gamma (in units of omega) and mean thermal photon number nu.
struct BathParams {
    BathParams(double gamma_, double nu_) : gamma(gamma_), nu(nu_)
    {
        if (!std::isfinite(gamma) || gamma <= 0.0)
            throw std::domain_error("BathParams: gamma must be positive and finite");
        if (!std::isfinite(nu) || nu < 0.0)
            throw std::domain_error("BathParams: nu must be non-negative and finite");
    }
    double gamma;
    double nu;
};

/// Dimensionless time u = 1 - e^{-2 gamma t}, in [0, 1).
struct CompactTime {
    explicit CompactTime(double u) : value(u)
    {
        if (!(u >= 0.0 && u < 1.0))
            throw std::domain_error("CompactTime: u must lie in [0, 1)");
    }
    double value;
};

inline CompactTime compact_time(double t, const BathParams& bath)
{
    if (!(t >= 0.0)) throw std::domain_error("compact_time: t must be >= 0");
    return CompactTime(-std::expm1(-2.0 * bath.gamma * t));
}

inline double physical_time(CompactTime u, const BathParams& bath)
{
    return -std::log1p(-u.value) / (2.0 * bath.gamma);
}

/// The factor xi_nu(u) = (1 + 2 u nu)^{-1}; equals the total purity of any
/// evolved coherent state and the equilibrium purity at u -> 1.
inline double xi_nu(CompactTime u, double nu)
{
    if (!(nu >= 0.0)) throw std::domain_error("xi_nu: nu must be >= 0");
    return 1.0 / (1.0 + 2.0 * u.value * nu);
}

struct CoherentState {
    double a;   // |alpha|^2
    double phi; // phase of alpha
};

struct CatState {
    double a;       // |alpha|^2 of each branch (alpha taken real)
    double phi_cat; // superposition phase: 0 even, pi odd, pi/2 Yurke-Stoler
};

struct SqueezedState {
    double a;   // |alpha|^2 of the eigenvalue alpha = sqrt(a) e^{i phi}
    double phi;
    double rho; // squeezing parameter
};

struct FockState {
    int m;
};

using InitialState = std::variant<CoherentState, CatState, SqueezedState, FockState>;

inline void validate(const InitialState& state)
{
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FockState>) {
                if (s.m < 0) throw std::domain_error("FockState: m must be >= 0");
            } else {
                if (!std::isfinite(s.a) || s.a < 0.0)
                    throw std::domain_error("InitialState: a must be >= 0 and finite");
                if constexpr (std::is_same_v<T, CatState>) {
                    if (!std::isfinite(s.phi_cat))
                        throw std::domain_error("CatState: phase must be finite");
                    if (1.0 + std::cos(s.phi_cat) * std::exp(-2.0 * s.a) < 1e-12)
                        throw std::domain_error(
                            "CatState: degenerate superposition (normalization diverges)");
                } else if constexpr (std::is_same_v<T, SqueezedState>) {
                    if (!std::isfinite(s.phi) || !std::isfinite(s.rho))
                        throw std::domain_error("SqueezedState: parameters must be finite");
                } else {
                    if (!std::isfinite(s.phi))
                        throw std::domain_error("CoherentState: phase must be finite");
                }
            }
        },
        state);
}

/// First and second moments of a Gaussian Wigner function.
struct GaussianState {
    double qbar;
    double pbar;
    double sigma_q;
    double sigma_p;
    double sigma_qp;

    double det2() const { return sigma_q * sigma_p - sigma_qp * sigma_qp; }
};

inline void validate(const GaussianState& g)
{
    if (!(g.sigma_q > 0.0) || !(g.sigma_p > 0.0))
        throw std::domain_error("GaussianState: variances must be positive");
    if (g.det2() < 0.25 - 1e-12)
        throw std::domain_error("GaussianState: uncertainty bound d >= 1/4 violated");
}

/// sigma_a = <n> - |<a>|^2 of the initial pure state, and the total
/// fluctuation energy e0 = sigma_a + 1/2.
struct FluctuationEnergy {
    double sigma_a;
    double e0;
};

namespace detail {

inline double cat_sigma_a(double a, double phi_cat)
{
    int dim = 64;
    for (;;) {
        const auto c = cat_amplitudes(a, phi_cat, dim);
        double mass = 0.0;
        for (const auto& v : c) mass += std::norm(v);
        if (1.0 - mass < 1e-13 || dim >= (1 << 21))
            return amplitude_moments(c).sigma_a / mass;
        dim *= 2;
    }
}

} // namespace detail

inline FluctuationEnergy fluctuation_energy(const InitialState& state)
{
    validate(state);
    const double sigma_a = std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentState>) return 0.0;
            else if constexpr (std::is_same_v<T, SqueezedState>) {
                const double sh = std::sinh(s.rho);
                return sh * sh;
            }
            else if constexpr (std::is_same_v<T, FockState>) return static_cast<double>(s.m);
            else return detail::cat_sigma_a(s.a, s.phi_cat);
        },
        state);
    return {sigma_a, sigma_a + 0.5};
}

/// The squeezing-frame energy factor R = cosh(2 rho) - sinh(2 rho) cos(2 phi).
inline double squeeze_factor(double rho, double phi)
{
    return std::cosh(2.0 * rho) - std::sinh(2.0 * rho) * std::cos(2.0 * phi);
}

/// Classical energy (qbar^2 + pbar^2)/2 = a R of the mean field. Defined for
/// the Gaussian families only; cat and Fock states have zero mean field.
inline double classical_energy(const InitialState& state)
{
    validate(state);
    if (const auto* c = std::get_if<CoherentState>(&state)) return c->a;
    if (const auto* s = std::get_if<SqueezedState>(&state))
        return s->a * squeeze_factor(s->rho, s->phi);
    throw std::invalid_argument("classical_energy: defined for coherent and squeezed states only");
}

/// Initial Gaussian moments of the coherent/squeezed families:
/// qbar = sqrt(2a) e^{-rho} cos phi, pbar = sqrt(2a) e^{rho} sin phi,
/// sigma_q = e^{-2 rho}/2, sigma_p = e^{2 rho}/2, sigma_qp = 0.
inline GaussianState initial_gaussian(const InitialState& state)
{
    validate(state);
    double a, phi, rho;
    if (const auto* c = std::get_if<CoherentState>(&state)) {
        a = c->a; phi = c->phi; rho = 0.0;
    } else if (const auto* s = std::get_if<SqueezedState>(&state)) {
        a = s->a; phi = s->phi; rho = s->rho;
    } else {
        throw std::invalid_argument("initial_gaussian: state is not Gaussian");
    }
    const double r2a = std::sqrt(2.0 * a);
    return {r2a * std::exp(-rho) * std::cos(phi), r2a * std::exp(rho) * std::sin(phi),
            0.5 * std::exp(-2.0 * rho), 0.5 * std::exp(2.0 * rho), 0.0};
}

} // namespace oscidec
