#pragma once

// Phase-space (Wigner) propagation layer. The damped oscillator induces a
// linear Fokker-Planck flow whose Green function is a Gaussian kernel:
// an exponentially contracting rotation of the mean plus isotropic
// diffusion saturating at nu + 1/2. Both the closed kernel and a numeric
// route through the drift/covariance ODEs are provided, together with a
// sampled-grid transport used for cross checks against analytic Wigner
// functions.

#include <array>
#include <cmath>
#include <cstddef>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oscidec/errors.hpp"
#include "oscidec/model.hpp"
#include "oscidec/ode.hpp"

namespace oscidec::prop {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Vec2 = std::array<double, 2>;

struct FokkerPlanckModel {
    Mat2 A;  // drift matrix
    Vec2 K;  // constant drive
    Mat2 D;  // diffusion matrix (symmetric)
};

inline FokkerPlanckModel oscillator_model(const BathParams& bath)
{
    const double g = bath.gamma;
    FokkerPlanckModel m;
    m.A = {{{-g, 1.0}, {-1.0, -g}}};
    m.K = {0.0, 0.0};
    const double d = g * (bath.nu + 0.5);
    m.D = {{{d, 0.0}, {0.0, d}}};
    return m;
}

struct PositivityReport {
    bool positive;
    double margin;  // det D - (tr A)^2 / 16
};

/// Necessary-and-sufficient condition for the Gaussian Green function of the
/// flow to be a positive kernel: det D >= (tr A)^2 / 16.
inline PositivityReport positivity_check(const FokkerPlanckModel& m)
{
    const double tr = m.A[0][0] + m.A[1][1];
    const double det_d = m.D[0][0] * m.D[1][1] - m.D[0][1] * m.D[1][0];
    const double margin = det_d - tr * tr / 16.0;
    return {margin >= 0.0, margin};
}

struct PropagatorKernel {
    Mat2 map;     // linear part of the mean map
    Vec2 offset;  // affine part of the mean map
    Mat2 cov;     // covariance acquired over the interval

    /// Transition density K(q, p | q0, p0).
    double density(double q, double p, double q0, double p0) const
    {
        const double cq = map[0][0] * q0 + map[0][1] * p0 + offset[0];
        const double cp = map[1][0] * q0 + map[1][1] * p0 + offset[1];
        const double dq = q - cq;
        const double dp = p - cp;
        const double det = cov[0][0] * cov[1][1] - cov[0][1] * cov[1][0];
        if (det <= 0.0)
            throw std::domain_error("PropagatorKernel::density: singular covariance");
        const double quad = (cov[1][1] * dq * dq - 2.0 * cov[0][1] * dq * dp +
                             cov[0][0] * dp * dp) / det;
        return std::exp(-0.5 * quad) / (2.0 * M_PI * std::sqrt(det));
    }
};

/// Closed-form propagator kernel over an interval t > 0. The mean map is a
/// damped clockwise rotation, the noise is isotropic with variance
/// (nu + 1/2)(1 - e^{-2 gamma t}).
inline PropagatorKernel kernel(double t, const BathParams& bath)
{
    if (!(t > 0.0)) throw std::domain_error("kernel: requires t > 0");
    const double e = std::exp(-bath.gamma * t);
    const double c = std::cos(t), s = std::sin(t);
    const double var = (bath.nu + 0.5) * (-std::expm1(-2.0 * bath.gamma * t));
    PropagatorKernel k;
    k.map = {{{e * c, e * s}, {-e * s, e * c}}};
    k.offset = {0.0, 0.0};
    k.cov = {{{var, 0.0}, {0.0, var}}};
    return k;
}

/// Kernel through the matrix ODEs Phi' = A Phi, M' = A M + M A^T + 2D,
/// k' = A k + K, integrated adaptively. Agrees with kernel() for the
/// oscillator model; accepts any linear Fokker-Planck model.
inline PropagatorKernel kernel_numeric(const FokkerPlanckModel& m, double t,
                                       double rtol = 1e-11)
{
    if (!(t > 0.0)) throw std::domain_error("kernel_numeric: requires t > 0");
    // y = [Phi00, Phi01, Phi10, Phi11, Mqq, Mqp, Mpp, kq, kp]
    std::vector<double> y = {1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    auto rhs = [&m](double, const std::vector<double>& v, std::vector<double>& dv) {
        const auto& A = m.A;
        dv[0] = A[0][0] * v[0] + A[0][1] * v[2];
        dv[1] = A[0][0] * v[1] + A[0][1] * v[3];
        dv[2] = A[1][0] * v[0] + A[1][1] * v[2];
        dv[3] = A[1][0] * v[1] + A[1][1] * v[3];
        const double mqq = v[4], mqp = v[5], mpp = v[6];
        dv[4] = 2.0 * (A[0][0] * mqq + A[0][1] * mqp) + 2.0 * m.D[0][0];
        dv[5] = A[1][0] * mqq + A[1][1] * mqp + A[0][0] * mqp + A[0][1] * mpp +
                2.0 * m.D[0][1];
        dv[6] = 2.0 * (A[1][0] * mqp + A[1][1] * mpp) + 2.0 * m.D[1][1];
        dv[7] = A[0][0] * v[7] + A[0][1] * v[8] + m.K[0];
        dv[8] = A[1][0] * v[7] + A[1][1] * v[8] + m.K[1];
    };
    ode::Options opt;
    opt.rtol = rtol;
    opt.atol = 1e-14;
    ode::integrate(rhs, y, 0.0, t, opt);
    PropagatorKernel k;
    k.map = {{{y[0], y[1]}, {y[2], y[3]}}};
    k.cov = {{{y[4], y[5]}, {y[5], y[6]}}};
    k.offset = {y[7], y[8]};
    return k;
}

/// Composition law: applying `earlier` over [0, s] then `later` over [s, t]
/// equals the kernel over [0, t].
inline PropagatorKernel compose(const PropagatorKernel& later, const PropagatorKernel& earlier)
{
    PropagatorKernel k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.map[i][j] = later.map[i][0] * earlier.map[0][j] +
                          later.map[i][1] * earlier.map[1][j];
    for (int i = 0; i < 2; ++i)
        k.offset[i] = later.map[i][0] * earlier.offset[0] +
                      later.map[i][1] * earlier.offset[1] + later.offset[i];
    // cov = later.map earlier.cov later.map^T + later.cov
    Mat2 tmp{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            tmp[i][j] = later.map[i][0] * earlier.cov[0][j] +
                        later.map[i][1] * earlier.cov[1][j];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k.cov[i][j] = tmp[i][0] * later.map[j][0] + tmp[i][1] * later.map[j][1] +
                          later.cov[i][j];
    return k;
}

/// Closed-form evolution of Gaussian first and second moments; valid for
/// all t >= 0.
inline GaussianState evolve_gaussian(const GaussianState& g0, double t,
                                     const BathParams& bath)
{
    if (t < 0.0) throw std::domain_error("evolve_gaussian: requires t >= 0");
    const double e = std::exp(-bath.gamma * t);
    const double e2 = e * e;
    const double c = std::cos(t), s = std::sin(t);
    const double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
    const double sat = (bath.nu + 0.5) * (-std::expm1(-2.0 * bath.gamma * t));
    GaussianState g;
    g.qbar = e * (g0.qbar * c + g0.pbar * s);
    g.pbar = e * (g0.pbar * c - g0.qbar * s);
    g.sigma_q = sat + e2 * (g0.sigma_q * c * c + g0.sigma_p * s * s + g0.sigma_qp * s2);
    g.sigma_p = sat + e2 * (g0.sigma_p * c * c + g0.sigma_q * s * s - g0.sigma_qp * s2);
    g.sigma_qp = e2 * (g0.sigma_qp * c2 - 0.5 * (g0.sigma_q - g0.sigma_p) * s2);
    return g;
}

/// Moment evolution by direct integration of the drift/covariance ODEs.
inline GaussianState evolve_gaussian_numeric(const GaussianState& g0, double t,
                                             const FokkerPlanckModel& m,
                                             double rtol = 1e-11)
{
    if (t < 0.0) throw std::domain_error("evolve_gaussian_numeric: requires t >= 0");
    if (t == 0.0) return g0;
    std::vector<double> y = {g0.qbar, g0.pbar, g0.sigma_q, g0.sigma_qp, g0.sigma_p};
    auto rhs = [&m](double, const std::vector<double>& v, std::vector<double>& dv) {
        const auto& A = m.A;
        dv[0] = A[0][0] * v[0] + A[0][1] * v[1] + m.K[0];
        dv[1] = A[1][0] * v[0] + A[1][1] * v[1] + m.K[1];
        const double sq = v[2], sqp = v[3], sp = v[4];
        dv[2] = 2.0 * (A[0][0] * sq + A[0][1] * sqp) + 2.0 * m.D[0][0];
        dv[3] = A[1][0] * sq + A[1][1] * sqp + A[0][0] * sqp + A[0][1] * sp +
                2.0 * m.D[0][1];
        dv[4] = 2.0 * (A[1][0] * sqp + A[1][1] * sp) + 2.0 * m.D[1][1];
    };
    ode::Options opt;
    opt.rtol = rtol;
    opt.atol = 1e-14;
    ode::integrate(rhs, y, 0.0, t, opt);
    return GaussianState{y[0], y[1], y[2], y[4], y[3]};
}

/// Purity of a Gaussian state, 1 / (2 sqrt(det Sigma)).
inline double purity(const GaussianState& g)
{
    validate(g);
    return 0.5 / std::sqrt(g.det2());
}

// ---------------------------------------------------------------------------
// Sampled phase-space grids
// ---------------------------------------------------------------------------

struct PhaseSpaceGrid {
    double half_width;
    int n;

    double step() const { return 2.0 * half_width / (n - 1); }
    double coord(int i) const { return -half_width + step() * i; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
};

inline PhaseSpaceGrid make_grid(double half_width, int n = 256)
{
    if (!(half_width > 0.0) || n < 2)
        throw std::invalid_argument("make_grid: need half_width > 0 and n >= 2");
    return {half_width, n};
}

/// Grid half-width covering a state of mean excitation a with room for
/// diffusion tails.
inline double default_half_width(double a)
{
    return std::max(6.0, std::sqrt(2.0 * a) + 6.0);
}

/// Row-major samples w[i * n + j] = f(q_i, p_j).
template <class F>
std::vector<double> sample(const PhaseSpaceGrid& g, F&& f)
{
    std::vector<double> w(g.size());
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            w[static_cast<std::size_t>(i) * g.n + j] = f(g.coord(i), g.coord(j));
    return w;
}

inline double grid_mass(const PhaseSpaceGrid& g, const std::vector<double>& w)
{
    double acc = 0.0;
    for (double v : w) acc += v;
    return acc * g.step() * g.step();
}

inline double grid_l2sq(const PhaseSpaceGrid& g, const std::vector<double>& w)
{
    double acc = 0.0;
    for (double v : w) acc += v * v;
    return acc * g.step() * g.step();
}

/// Transport sampled Wigner data through the closed kernel over time t > 0.
/// Scatter formulation: each source cell deposits a separable Gaussian
/// window (cut off at 8.6 standard deviations, tail mass < 1e-16) onto the
/// target grid. Work is split into fixed chunks so results do not depend on
/// the thread count. If the propagated distribution presses against the
/// grid edge the grid was too small for this evolution.
inline std::vector<double> propagate_grid(const PhaseSpaceGrid& g,
                                          const std::vector<double>& w0, double t,
                                          const BathParams& bath)
{
    if (w0.size() != g.size())
        throw std::invalid_argument("propagate_grid: sample size does not match grid");
    const PropagatorKernel k = kernel(t, bath);
    const double var = k.cov[0][0];
    const double sigma = std::sqrt(var);
    const double cutoff = 8.6 * sigma;
    const double h = g.step();
    const int n = g.n;
    const double norm = h * h / (2.0 * M_PI * var);

    const int chunks = 16;
    auto worker = [&](int chunk) {
        std::vector<double> acc(g.size(), 0.0);
        std::vector<double> gq, gp;
        for (int i = chunk; i < n; i += chunks) {
            const double q0 = g.coord(i);
            for (int j = 0; j < n; ++j) {
                const double amp = w0[static_cast<std::size_t>(i) * n + j] * norm;
                if (amp == 0.0) continue;
                const double p0 = g.coord(j);
                const double cq = k.map[0][0] * q0 + k.map[0][1] * p0;
                const double cp = k.map[1][0] * q0 + k.map[1][1] * p0;
                const int ia = std::max(0, static_cast<int>(std::ceil((cq - cutoff + g.half_width) / h)));
                const int ib = std::min(n - 1, static_cast<int>(std::floor((cq + cutoff + g.half_width) / h)));
                const int ja = std::max(0, static_cast<int>(std::ceil((cp - cutoff + g.half_width) / h)));
                const int jb = std::min(n - 1, static_cast<int>(std::floor((cp + cutoff + g.half_width) / h)));
                if (ia > ib || ja > jb) continue;
                gq.resize(ib - ia + 1);
                gp.resize(jb - ja + 1);
                for (int ii = ia; ii <= ib; ++ii) {
                    const double d = g.coord(ii) - cq;
                    gq[ii - ia] = std::exp(-0.5 * d * d / var);
                }
                for (int jj = ja; jj <= jb; ++jj) {
                    const double d = g.coord(jj) - cp;
                    gp[jj - ja] = std::exp(-0.5 * d * d / var);
                }
                for (int ii = ia; ii <= ib; ++ii) {
                    const double row = amp * gq[ii - ia];
                    double* out = acc.data() + static_cast<std::size_t>(ii) * n + ja;
                    for (int jj = 0; jj <= jb - ja; ++jj) out[jj] += row * gp[jj];
                }
            }
        }
        return acc;
    };

    std::vector<std::future<std::vector<double>>> futs;
    futs.reserve(chunks);
    for (int c = 0; c < chunks; ++c)
        futs.push_back(std::async(std::launch::async, worker, c));
    std::vector<double> out(g.size(), 0.0);
    for (auto& f : futs) {
        const auto part = f.get();
        for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] += part[idx];
    }

    double edge = 0.0;
    for (int i = 0; i < n; ++i) {
        edge += std::abs(out[static_cast<std::size_t>(i) * n]) +
                std::abs(out[static_cast<std::size_t>(i) * n + n - 1]);
        if (i != 0 && i != n - 1) {
            edge += std::abs(out[static_cast<std::size_t>(0) * n + i]) +
                    std::abs(out[static_cast<std::size_t>(n - 1) * n + i]);
        }
    }
    edge *= h * h;
    if (edge > 1e-8)
        throw TruncationError("propagate_grid: distribution reached the grid boundary",
                              2 * n);
    return out;
}

} // namespace oscidec::prop
