#pragma once

// Brute-force reference evolution in a truncated number basis. Nothing in
// here uses the closed-form results: states are built from their
// amplitudes, the master equation is integrated band by band with an
// adaptive Runge-Kutta scheme, and the measures are read off the density
// matrix. The closed forms are validated against this module.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "oscidec/detail/amplitudes.hpp"
#include "oscidec/errors.hpp"
#include "oscidec/measures.hpp"
#include "oscidec/model.hpp"
#include "oscidec/ode.hpp"

namespace oscidec::oracle {

using complexd = std::complex<double>;

class DensityMatrix {
public:
    explicit DensityMatrix(int dim)
        : dim_(dim), data_(static_cast<std::size_t>(dim) * dim)
    {
        if (dim < 1) throw std::invalid_argument("DensityMatrix: dim must be >= 1");
    }

    int dim() const noexcept { return dim_; }

    complexd& at(int m, int n) { return data_[static_cast<std::size_t>(m) * dim_ + n]; }
    const complexd& at(int m, int n) const
    {
        return data_[static_cast<std::size_t>(m) * dim_ + n];
    }

    double trace() const
    {
        double acc = 0.0;
        for (int n = 0; n < dim_; ++n) acc += at(n, n).real();
        return acc;
    }

    double purity() const
    {
        double acc = 0.0;
        for (const auto& v : data_) acc += std::norm(v);
        return acc;
    }

    double diag_purity() const
    {
        double acc = 0.0;
        for (int n = 0; n < dim_; ++n) acc += at(n, n).real() * at(n, n).real();
        return acc;
    }

    double pn(int n) const { return at(n, n).real(); }
    double p0() const { return at(0, 0).real(); }

    double hermiticity_error() const
    {
        double worst = 0.0;
        for (int m = 0; m < dim_; ++m)
            for (int n = m; n < dim_; ++n)
                worst = std::max(worst, std::abs(at(m, n) - std::conj(at(n, m))));
        return worst;
    }

private:
    int dim_;
    std::vector<complexd> data_;
};

inline std::vector<complexd> state_amplitudes(const InitialState& state, int dim)
{
    return std::visit(
        [dim](const auto& s) -> std::vector<complexd> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentState>)
                return detail::coherent_amplitudes(s.a, s.phi, dim);
            else if constexpr (std::is_same_v<T, CatState>)
                return detail::cat_amplitudes(s.a, s.phi_cat, dim);
            else if constexpr (std::is_same_v<T, SqueezedState>)
                return detail::squeezed_amplitudes(s.a, s.phi, s.rho, dim);
            else
                return detail::fock_amplitudes(s.m, dim);
        },
        state);
}

inline std::vector<double> state_diagonal(const InitialState& state, int dim)
{
    const auto c = state_amplitudes(state, dim);
    std::vector<double> p(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) p[n] = std::norm(c[n]);
    return p;
}

/// Pure-state density matrix in a basis of the given dimension. Throws if
/// more than 1e-12 of the state mass lies beyond the truncation.
inline DensityMatrix build_state(const InitialState& state, int dim)
{
    const int probe = 2 * dim;
    const auto cext = state_amplitudes(state, probe);
    double tail = 0.0;
    for (int n = probe - 1; n >= dim; --n) tail += std::norm(cext[n]);
    if (tail > 1e-12) {
        double run = 0.0;
        int need = probe;
        for (int n = probe - 1; n >= 0; --n) {
            run += std::norm(cext[n]);
            if (run > 1e-12) {
                need = n + 2;
                break;
            }
        }
        throw TruncationError("build_state: initial state mass beyond basis cutoff", need);
    }
    const auto c = state_amplitudes(state, dim);
    DensityMatrix rho(dim);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) rho.at(m, n) = c[m] * std::conj(c[n]);
    return rho;
}

/// Smallest basis dimension for which both the initial state and the
/// asymptotic thermal distribution carry less than 1e-12 combined mass
/// beyond the cutoff.
inline int default_dim(const InitialState& state, const BathParams& bath)
{
    const double log_thermal_ratio =
        bath.nu > 0.0 ? std::log(bath.nu / (1.0 + bath.nu)) : -std::numeric_limits<double>::infinity();
    int probe = 64;
    for (;;) {
        const auto c = state_amplitudes(state, probe);
        std::vector<double> suffix(probe + 1, 0.0);
        for (int n = probe - 1; n >= 0; --n) suffix[n] = suffix[n + 1] + std::norm(c[n]);
        for (int n = 1; n <= probe / 2; ++n) {
            const double thermal_tail =
                bath.nu > 0.0 ? std::exp(n * log_thermal_ratio) : 0.0;
            if (suffix[n] + thermal_tail < 1e-12) return n;
        }
        if (probe >= (1 << 15))
            throw TruncationError("default_dim: no adequate truncation found", 2 * probe);
        probe *= 2;
    }
}

namespace detail {

struct BandCoefficients {
    std::vector<double> up, down, diag;
    double phase;  // coefficient of the i*x oscillator term; 0 in the rotating frame

    BandCoefficients(int band_len, int k, const BathParams& bath, bool interaction_picture)
        : up(band_len), down(band_len), diag(band_len),
          phase(interaction_picture ? 0.0 : static_cast<double>(k))
    {
        const double g = bath.gamma, nu = bath.nu;
        for (int n = 0; n < band_len; ++n) {
            up[n] = 2.0 * g * (1.0 + nu) *
                    std::sqrt(static_cast<double>(n + 1) * (n + 1 + k));
            down[n] = 2.0 * g * nu * std::sqrt(static_cast<double>(n) * (n + k));
            diag[n] = -g * ((1.0 + nu) * (2.0 * n + k) + nu * (2.0 * n + k + 2.0));
        }
    }

    void operator()(double, const std::vector<complexd>& x, std::vector<complexd>& dx) const
    {
        const int len = static_cast<int>(x.size());
        for (int n = 0; n < len; ++n) {
            complexd v = diag[n] * x[n];
            if (n + 1 < len) v += up[n] * x[n + 1];
            if (n > 0) v += down[n] * x[n - 1];
            if (phase != 0.0) v += complexd(0.0, phase) * x[n];
            dx[n] = v;
        }
    }
};

} // namespace detail

/// Evolve a density matrix for a time step t under the damping master
/// equation. Each diagonal band rho_{n, n+k} closes on itself and is
/// integrated independently (in parallel); bands with negligible initial
/// weight stay negligible and are skipped. In the rotating frame the free
/// oscillation is absent; with interaction_picture = false the band picks
/// up the rigid phase rotation as well.
inline DensityMatrix evolve_master(const DensityMatrix& rho0, double t,
                                   const BathParams& bath,
                                   bool interaction_picture = true,
                                   const ode::Options& opt = {})
{
    if (t < 0.0) throw std::domain_error("evolve_master: requires t >= 0");
    const int dim = rho0.dim();
    DensityMatrix rho(dim);
    if (t == 0.0) {
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) rho.at(m, n) = rho0.at(m, n);
        return rho;
    }

    const int chunks = 16;
    auto worker = [&](int chunk) {
        std::vector<complexd> x;
        for (int k = chunk; k < dim; k += chunks) {
            const int len = dim - k;
            x.assign(static_cast<std::size_t>(len), complexd(0.0, 0.0));
            double weight = 0.0;
            for (int n = 0; n < len; ++n) {
                x[n] = rho0.at(n, n + k);
                weight += std::norm(x[n]);
            }
            if (k > 0 && weight < 1e-24) {
                for (int n = 0; n < len; ++n) {
                    rho.at(n, n + k) = 0.0;
                    rho.at(n + k, n) = 0.0;
                }
                continue;
            }
            detail::BandCoefficients rhs(len, k, bath, interaction_picture);
            ode::integrate(rhs, x, 0.0, t, opt);
            for (int n = 0; n < len; ++n) {
                rho.at(n, n + k) = x[n];
                rho.at(n + k, n) = std::conj(x[n]);
            }
        }
    };
    std::vector<std::future<void>> futs;
    futs.reserve(chunks);
    for (int c = 0; c < chunks; ++c)
        futs.push_back(std::async(std::launch::async, worker, c));
    for (auto& f : futs) f.get();

    const double drift = std::abs(rho.trace() - rho0.trace());
    if (drift > 1e-8)
        throw IntegrationQualityError("evolve_master: trace drift beyond tolerance (basis too small?)",
                                      drift);
    return rho;
}

/// Evolve a bare number distribution through the thermal birth-death chain
/// (the diagonal of the master equation, valid for any initial diagonal
/// state). Much cheaper than the full matrix for large bases.
inline std::vector<double> evolve_diagonal(std::vector<double> p, double t,
                                           const BathParams& bath,
                                           const ode::Options& opt = {})
{
    if (t < 0.0) throw std::domain_error("evolve_diagonal: requires t >= 0");
    if (t == 0.0) return p;
    const double start = std::accumulate(p.begin(), p.end(), 0.0);
    const double g = bath.gamma, nu = bath.nu;
    auto rhs = [g, nu](double, const std::vector<double>& v, std::vector<double>& dv) {
        const int len = static_cast<int>(v.size());
        for (int n = 0; n < len; ++n) {
            double acc = -2.0 * g * ((1.0 + nu) * n + nu * (n + 1.0)) * v[n];
            if (n + 1 < len) acc += 2.0 * g * (1.0 + nu) * (n + 1.0) * v[n + 1];
            if (n > 0) acc += 2.0 * g * nu * n * v[n - 1];
            dv[n] = acc;
        }
    };
    ode::integrate(rhs, p, 0.0, t, opt);
    const double drift = std::abs(std::accumulate(p.begin(), p.end(), 0.0) - start);
    if (drift > 1e-8)
        throw IntegrationQualityError("evolve_diagonal: probability drift beyond tolerance",
                                      drift);
    return p;
}

/// Read the measures off an evolved density matrix, normalizing the
/// coherence against the initial matrix. The compact-time field is not
/// known here and is left NaN for the caller to fill.
inline MeasureRecord measures_from_rho(const DensityMatrix& rho, const DensityMatrix& rho0)
{
    MeasureRecord rec;
    rec.u = std::numeric_limits<double>::quiet_NaN();
    rec.mu = rho.purity();
    rec.lambda = rho.diag_purity();
    rec.p0 = rho.p0();
    rec.C = coherence(rec.mu, rec.lambda, rho0.purity(), rho0.diag_purity());
    rec.D = thermalization(rec.mu, rec.p0);
    rec.s = linear_entropy(rec.mu);
    return rec;
}

} // namespace oscidec::oracle
