#pragma once

// Closed-form results for the damped oscillator: photon statistics,
// purities, diagonal generating functions, Wigner functions, ground-state
// populations, and the accompanying coherence of cat states. Everything
// here is analytic except the squeezed-state diagonal purity (a smooth
// quadrature) and the Fock fallback quadrature near its removable
// degeneracy.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "oscidec/errors.hpp"
#include "oscidec/measures.hpp"
#include "oscidec/model.hpp"
#include "oscidec/quadrature.hpp"
#include "oscidec/specfun.hpp"

namespace oscidec::cf {

using complexd = std::complex<double>;

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

/// Exact evolution map of the diagonal generating function G(z, u):
/// G(z, u) = G0( [z + u(1+nu)(1-z)] / [1 + nu u (1-z)] ) / [1 + nu u (1-z)].
template <class G0>
complexd evolve_diag_gf(G0&& g0, CompactTime u, double nu, complexd z)
{
    const complexd den = 1.0 + nu * u.value * (1.0 - z);
    const complexd arg = (z + u.value * (1.0 + nu) * (1.0 - z)) / den;
    return g0(arg) / den;
}

/// Coefficients of the generic Gaussian diagonal generating function
/// G(z) = Gq(z)^{-1/2} exp{ [ (z g1 - z^2 g2)/Gq(z) - g0 ] / D }
/// with Gq(z) = c0 + c1 z + c2 z^2.
struct GaussianDiagGFParams {
    double c0, c1, c2; // Gq coefficients; c0 + c1 + c2 = 1
    double D_norm;
    double g0, g1, g2;

    complexd gq(complexd z) const { return c0 + z * (c1 + z * c2); }
};

inline GaussianDiagGFParams gaussian_gf_params(const GaussianState& g)
{
    validate(g);
    const double d = g.det2();
    const double S = g.sigma_q + g.sigma_p;
    const double qb = g.qbar, pb = g.pbar;
    const double sq = g.sigma_q, sp = g.sigma_p, spq = g.sigma_qp;
    GaussianDiagGFParams out;
    out.c0 = 0.25 * (1.0 + 4.0 * d + 2.0 * S);
    out.c1 = 0.5 * (1.0 - 4.0 * d);
    out.c2 = 0.25 * (1.0 + 4.0 * d - 2.0 * S);
    out.D_norm = 1.0 + 2.0 * S + 4.0 * d;
    out.g0 = pb * pb * (2.0 * sq + 1.0) + qb * qb * (2.0 * sp + 1.0) - 4.0 * pb * qb * spq;
    out.g1 = 2.0 * pb * pb * (sq * sq + spq * spq + sq + 0.25) +
             2.0 * qb * qb * (sp * sp + spq * spq + sp + 0.25) -
             4.0 * pb * qb * spq * (sq + sp + 1.0);
    out.g2 = 2.0 * pb * pb * (sq * sq + spq * spq - 0.25) +
             2.0 * qb * qb * (sp * sp + spq * spq - 0.25) -
             4.0 * pb * qb * spq * (sq + sp);
    return out;
}

/// Diagonal generating function of an arbitrary Gaussian state. The
/// quadratic prefactor argument must stay positive on the physical segment
/// z in [0, 1]; a violation indicates an invalid covariance input.
inline complexd gaussian_diag_gf(const GaussianState& g, complexd z)
{
    const auto par = gaussian_gf_params(g);
    const complexd gq = par.gq(z);
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 1.0 && gq.real() <= 0.0)
        throw BranchError("gaussian_diag_gf: prefactor argument not positive on [0, 1]");
    return (1.0 / std::sqrt(gq)) *
           std::exp((z * par.g1 - z * z * par.g2) / gq / par.D_norm - par.g0 / par.D_norm);
}

/// The seven coefficients of the evolved squeezed-state generating function
/// G(z, u) = (f - b z + c z^2)^{-1/2} exp[-a(1-u)(F - B z + C z^2)/(f - b z + c z^2)].
struct SqueezedGFCoefficients {
    double f, b, c;
    double F_, B_, C_;
    double R;
};

inline SqueezedGFCoefficients squeezed_gf_coeffs(double a, double phi, double rho,
                                                 CompactTime ut, double nu)
{
    (void)a;
    const double u = ut.value;
    const double sh2 = std::sinh(rho) * std::sinh(rho);
    const double R = squeeze_factor(rho, phi);
    SqueezedGFCoefficients k;
    k.f = (1.0 + u * nu) * (1.0 + u * nu) + (1.0 - u) * (1.0 + u + 2.0 * u * nu) * sh2;
    k.b = 2.0 * u * nu * (1.0 + u * nu) + 2.0 * u * (1.0 + 2.0 * nu) * (1.0 - u) * sh2;
    k.c = (u * nu) * (u * nu) - (1.0 - u) * (1.0 - u - 2.0 * u * nu) * sh2;
    k.F_ = 0.5 * ((1.0 - u) + R * (1.0 + u + 2.0 * u * nu));
    k.B_ = (1.0 - u) + R * u * (1.0 + 2.0 * nu);
    k.C_ = 0.5 * ((1.0 - u) - R * (1.0 - u - 2.0 * u * nu));
    k.R = R;
    return k;
}

inline complexd squeezed_gf(double a, double phi, double rho, CompactTime u, double nu,
                            complexd z)
{
    const auto k = squeezed_gf_coeffs(a, phi, rho, u, nu);
    const complexd den = k.f - z * (k.b - z * k.c);
    const complexd num = k.F_ - z * (k.B_ - z * k.C_);
    return (1.0 / std::sqrt(den)) * std::exp(-a * (1.0 - u.value) * num / den);
}

/// Diagonal purity via the generating-function route: the mean of
/// |G(e^{i phi})|^2 over the unit circle.
template <class G>
double lambda_from_gf(G&& gf, double tol = 1e-11)
{
    return quad::periodic_mean(
        [&](double phi) { return std::norm(gf(std::polar(1.0, phi))); }, tol);
}

// ---------------------------------------------------------------------------
// Coherent states
// ---------------------------------------------------------------------------

namespace detail {

/// Photon-number probability of an evolved coherent state with initial mean
/// a (a < 0 is allowed: it produces the signed sequence that enters the cat
/// combination), split as p_n = S_n e^{-y} / (1 + u nu) with y = a(1-u)/(1+u nu).
/// S_n = [u nu/(1+u nu)]^n L_n(x) satisfies a rescaled Laguerre recurrence
/// that stays bounded for all u nu >= 0 and reduces to the Poisson sequence
/// y^n/n! exactly at u nu = 0, so no branch switch is needed.
inline double coherent_pn_scaled(int n, double a, double u, double nu)
{
    const double s = u * nu;
    const double r = 1.0 / (1.0 + s);
    const double w = s * r;
    const double y = a * (1.0 - u) * r;
    if (n == 0) return 1.0;
    double prev = 1.0;           // S_0
    double cur = w + y * r;      // S_1
    for (int k = 1; k < n; ++k) {
        const double next = ((w * (2.0 * k + 1.0) + y * r) * cur - k * w * w * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace detail

/// Photon-number distribution of the evolved coherent state.
inline double coherent_pn(int n, double a, CompactTime u, double nu)
{
    if (n < 0) throw std::invalid_argument("coherent_pn: n must be >= 0");
    if (a < 0.0) throw std::domain_error("coherent_pn: a must be >= 0");
    const double s = u.value * nu;
    const double y = a * (1.0 - u.value) / (1.0 + s);
    return detail::coherent_pn_scaled(n, a, u.value, nu) * std::exp(-y) / (1.0 + s);
}

inline double coherent_lambda(double a, CompactTime u, const BathParams& bath)
{
    const double xi = xi_nu(u, bath.nu);
    const double eta = 2.0 * a * (1.0 - u.value) * xi;
    return xi * specfun::bessel_i0_scaled(eta);
}

inline double coherent_p0(double a, CompactTime u, double nu)
{
    const double s = u.value * nu;
    return std::exp(-a * (1.0 - u.value) / (1.0 + s)) / (1.0 + s);
}

inline MeasureRecord coherent_measures(double a, double phi, CompactTime u,
                                       const BathParams& bath)
{
    validate(InitialState(CoherentState{a, phi}));
    MeasureRecord rec;
    rec.u = u.value;
    rec.mu = xi_nu(u, bath.nu);
    rec.lambda = coherent_lambda(a, u, bath);
    rec.p0 = coherent_p0(a, u, bath.nu);
    const double lambda0 = specfun::bessel_i0_scaled(2.0 * a);
    rec.C = coherence(rec.mu, rec.lambda, 1.0, lambda0);
    rec.D = thermalization(rec.mu, rec.p0);
    rec.s = linear_entropy(rec.mu);
    return rec;
}

/// Evolved coherent-state Wigner function: an isotropic Gaussian of inverse
/// width xi whose center spirals inward, radius sqrt(2a(1-u)), phase phi - t.
inline double coherent_wigner(double q, double p, double a, double phi, CompactTime u,
                              const BathParams& bath)
{
    const double xi = xi_nu(u, bath.nu);
    const double t = physical_time(u, bath);
    const double rad = std::sqrt(2.0 * a * (1.0 - u.value));
    const double dq = q - rad * std::cos(phi - t);
    const double dp = p - rad * std::sin(phi - t);
    return 2.0 * xi * std::exp(-xi * (dq * dq + dp * dp));
}

// ---------------------------------------------------------------------------
// Cat states
// ---------------------------------------------------------------------------

namespace detail {

inline double cat_norm2(double a, double phi_cat)
{
    const double denom = 1.0 + std::cos(phi_cat) * std::exp(-2.0 * a);
    if (denom < 1e-12)
        throw std::domain_error("cat: degenerate superposition (normalization diverges)");
    return 0.5 / denom;
}

} // namespace detail

/// Photon-number distribution of the evolved cat state: the coherent
/// distribution plus a sign-alternating interference part (the evolved
/// coherent formula continued to a -> -a, damped by e^{-2a}).
inline double cat_pn(int n, double a, double phi_cat, CompactTime u, double nu)
{
    if (n < 0) throw std::invalid_argument("cat_pn: n must be >= 0");
    const double n2 = detail::cat_norm2(a, phi_cat);
    const double s = u.value * nu;
    const double r = 1.0 / (1.0 + s);
    const double y = a * (1.0 - u.value) * r;
    const double direct = detail::coherent_pn_scaled(n, a, u.value, nu) * std::exp(-y) * r;
    const double flipped = detail::coherent_pn_scaled(n, -a, u.value, nu) *
                           std::exp(y - 2.0 * a) * r;
    return 2.0 * n2 * (direct + std::cos(phi_cat) * flipped);
}

inline MeasureRecord cat_measures(double a, double phi_cat, CompactTime u,
                                  const BathParams& bath)
{
    validate(InitialState(CatState{a, phi_cat}));
    const double n2 = detail::cat_norm2(a, phi_cat);
    const double nu = bath.nu;
    const double uu = u.value;
    const double xi = xi_nu(u, nu);
    const double cphi = std::cos(phi_cat);
    const double eta = 2.0 * a * (1.0 - uu) * xi;

    MeasureRecord rec;
    rec.u = uu;
    rec.mu = 2.0 * n2 * n2 * xi *
             (1.0 + 4.0 * cphi * std::exp(-2.0 * a) + std::cos(2.0 * phi_cat) * std::exp(-4.0 * a) +
              std::exp(-4.0 * a * (1.0 - uu) * xi) +
              std::exp(-4.0 * a * uu * (1.0 + 2.0 * nu) * xi));
    // The diagonal purity's I0 e^{eta - 4a} product is combined through the
    // scaled Bessel form; 2 eta - 4a <= 0 always.
    rec.lambda = 4.0 * n2 * n2 * xi *
                 (specfun::bessel_i0_scaled(eta) *
                      (1.0 + cphi * cphi * std::exp(2.0 * eta - 4.0 * a)) +
                  2.0 * cphi * std::exp(-2.0 * a) * specfun::bessel_j0(eta));
    const double lambda0 =
        4.0 * n2 * n2 *
        (specfun::bessel_i0_scaled(2.0 * a) * (1.0 + cphi * cphi) +
         2.0 * cphi * std::exp(-2.0 * a) * specfun::bessel_j0(2.0 * a));
    const double us = uu * nu;
    rec.p0 = 2.0 * n2 / (1.0 + us) * std::exp(-a * (1.0 - uu) / (1.0 + us)) *
             (1.0 + cphi * std::exp(-2.0 * a * uu * (1.0 + nu) / (1.0 + us)));
    rec.C = coherence(rec.mu, rec.lambda, 1.0, lambda0);
    rec.D = thermalization(rec.mu, rec.p0);
    rec.s = linear_entropy(rec.mu);
    return rec;
}

/// Evolved cat-state Wigner function: two damped Gaussian humps on the
/// rotated q axis plus the interference fringe pattern along p.
inline double cat_wigner(double q, double p, double a, double phi_cat, CompactTime u,
                         const BathParams& bath)
{
    const double n2 = detail::cat_norm2(a, phi_cat);
    const double xi = xi_nu(u, bath.nu);
    const double t = physical_time(u, bath);
    const double qt = q * std::cos(t) - p * std::sin(t);
    const double pt = p * std::cos(t) + q * std::sin(t);
    const double kappa = xi * std::sqrt(8.0 * a * (1.0 - u.value));
    const double base = -xi * (q * q + p * p);
    const double humps = std::exp(base - 2.0 * a * (1.0 - u.value) * xi + kappa * qt) +
                         std::exp(base - 2.0 * a * (1.0 - u.value) * xi - kappa * qt);
    const double fringe = std::exp(base - 2.0 * a * u.value * (1.0 + 2.0 * bath.nu) * xi) *
                          std::cos(kappa * pt + phi_cat);
    return 4.0 * n2 * xi * (0.5 * humps + fringe);
}

/// Wigner function of the incoherent two-component mixture that accompanies
/// the cat state (same humps, no fringes).
inline double mixture_wigner(double q, double p, double a, CompactTime u,
                             const BathParams& bath)
{
    const double xi = xi_nu(u, bath.nu);
    const double t = physical_time(u, bath);
    const double qt = q * std::cos(t) - p * std::sin(t);
    const double kappa = xi * std::sqrt(8.0 * a * (1.0 - u.value));
    const double base = -xi * (q * q + p * p + 2.0 * a * (1.0 - u.value));
    return xi * (std::exp(base + kappa * qt) + std::exp(base - kappa * qt));
}

/// Normalized coherence of the cat state measured against the moving
/// two-component mixture.
inline double accompanying_coherence(double a, double phi_cat, CompactTime u,
                                     const BathParams& bath)
{
    if (!(a > 0.0)) throw std::domain_error("accompanying_coherence: requires a > 0");
    const double nu = bath.nu;
    const double uu = u.value;
    const double xi = xi_nu(u, nu);
    const double c2 = std::cos(phi_cat) * std::cos(phi_cat);
    const double e4a = std::exp(-4.0 * a);
    return xi * (-std::expm1(-4.0 * a * (1.0 - uu) * xi)) *
           (std::exp(-4.0 * a * uu * (1.0 + 2.0 * nu) * xi) - c2 * e4a) /
           ((1.0 - c2 * e4a) * (1.0 - e4a));
}

// ---------------------------------------------------------------------------
// Squeezed states
// ---------------------------------------------------------------------------

/// Total purity of the evolved squeezed family; independent of the first
/// moments (a, phi).
inline double squeezed_mu(double rho, CompactTime u, const BathParams& bath)
{
    const double uu = u.value;
    const double sh2 = std::sinh(rho) * std::sinh(rho);
    const double base = 1.0 + 2.0 * uu * bath.nu;
    return 1.0 / std::sqrt(base * base + 4.0 * uu * (1.0 - uu) * (1.0 + 2.0 * bath.nu) * sh2);
}

/// Diagonal purity of the evolved squeezed state, by adaptive quadrature of
/// the closed integral representation over a quarter period.
inline double squeezed_lambda(double a, double phi, double rho, CompactTime u,
                              const BathParams& bath, double rel_tol = 1e-10)
{
    const double uu = u.value;
    const double nu = bath.nu;
    const auto k = squeezed_gf_coeffs(a, phi, rho, u, nu);
    const double sh2 = std::sinh(rho) * std::sinh(rho);
    const double sh2r = std::sinh(2.0 * rho) * std::sinh(2.0 * rho);
    const double V = k.R * (1.0 + 2.0 * uu * nu) + (1.0 - uu) * (k.R - 1.0 + 4.0 * k.R * sh2);
    const double Y = 4.0 * uu * k.B_ * (nu * (1.0 + uu * nu) + (1.0 - uu) * (1.0 + 2.0 * nu) * sh2) +
                     2.0 * (1.0 - uu) * (1.0 - k.R - 2.0 * k.R * sh2);
    auto integrand = [&](double x) {
        const double sx = std::sin(x);
        const double s2 = sx * sx;
        const double s2x = std::sin(2.0 * x);
        const double base = 1.0 + 2.0 * k.b * s2;
        const double Phi = base * base + (1.0 - uu) * (1.0 - uu) * sh2r * s2x * s2x;
        return std::exp(-4.0 * a * (1.0 - uu) * (V + Y * s2) * s2 / Phi) / std::sqrt(Phi);
    };
    return (2.0 / M_PI) * quad::gauss_legendre(integrand, 0.0, 0.5 * M_PI, rel_tol);
}

inline double squeezed_p0(double a, double phi, double rho, CompactTime u,
                          const BathParams& bath)
{
    const auto k = squeezed_gf_coeffs(a, phi, rho, u, bath.nu);
    return std::exp(-a * (1.0 - u.value) * k.F_ / k.f) / std::sqrt(k.f);
}

inline MeasureRecord squeezed_measures(double a, double phi, double rho, CompactTime u,
                                       const BathParams& bath)
{
    validate(InitialState(SqueezedState{a, phi, rho}));
    MeasureRecord rec;
    rec.u = u.value;
    rec.mu = squeezed_mu(rho, u, bath);
    rec.lambda = squeezed_lambda(a, phi, rho, u, bath);
    rec.p0 = squeezed_p0(a, phi, rho, u, bath);
    const double lambda0 = squeezed_lambda(a, phi, rho, CompactTime(0.0), bath);
    rec.C = coherence(rec.mu, rec.lambda, 1.0, lambda0);
    rec.D = thermalization(rec.mu, rec.p0);
    rec.s = linear_entropy(rec.mu);
    return rec;
}

// ---------------------------------------------------------------------------
// Fock states
// ---------------------------------------------------------------------------

inline double fock_p0(int m, CompactTime u, const BathParams& bath)
{
    if (m < 0) throw std::invalid_argument("fock_p0: m must be >= 0");
    const double s = u.value * bath.nu;
    if (m == 0) return 1.0 / (1.0 + s);
    return std::exp(m * std::log(u.value * (1.0 + bath.nu)) - (m + 1) * std::log1p(s));
}

/// Diagonal purity of the evolved Fock state by direct quadrature of
/// |G(e^{i phi})|^2; valid everywhere, used as the fallback at the removable
/// degeneracy of the Legendre form. Log-space evaluation keeps large-M
/// integrands representable.
inline double fock_lambda_quadrature(int m, CompactTime u, const BathParams& bath,
                                     double tol = 1e-11)
{
    const double uu = u.value;
    const double nu = bath.nu;
    const double A = uu * uu * (1.0 + nu) * (1.0 + nu) + (1.0 - uu - uu * nu) * (1.0 - uu - uu * nu);
    const double B = 2.0 * uu * (1.0 + nu) * (1.0 - uu - uu * nu);
    const double C = nu * nu * uu * uu + (1.0 + uu * nu) * (1.0 + uu * nu);
    const double D = 2.0 * uu * nu * (1.0 + uu * nu);
    return quad::periodic_mean(
        [&](double phi) {
            const double cphi = std::cos(phi);
            const double num = std::max(A + B * cphi, 0.0);
            const double den = C - D * cphi; // >= (C - D) = 1
            const double logv = (m > 0 ? m * std::log(num) : 0.0) - (m + 1) * std::log(den);
            return std::exp(logv);
        },
        tol);
}

/// Diagonal purity (= total purity) of the evolved Fock state: Legendre
/// closed form away from the degenerate ray u = 1/(2(1+nu)), quadrature there.
inline double fock_lambda(int m, CompactTime u, const BathParams& bath)
{
    if (m < 0) throw std::invalid_argument("fock_lambda: m must be >= 0");
    if (m == 0) {
        const double xi = xi_nu(u, bath.nu);
        // vacuum: thermal at temperature nu u; lambda = mu = xi
        return xi;
    }
    const double uu = u.value;
    const double nu = bath.nu;
    const double w = 1.0 - 2.0 * uu * (1.0 + nu);
    if (std::abs(w) < 1e-6) return fock_lambda_quadrature(m, u, bath);
    const double base = 1.0 + 2.0 * uu * nu;
    const double arg = ((1.0 - uu) * (1.0 - uu) + uu * uu * (1.0 + 2.0 * nu) * (1.0 + 2.0 * nu)) /
                       (base * std::abs(w));
    const double pm = specfun::legendre(m, arg);
    const double scale = std::exp(m * std::log(std::abs(w)) - (m + 1) * std::log(base));
    const double val = scale * pm;
    if (!std::isfinite(val)) return fock_lambda_quadrature(m, u, bath);
    return val;
}

inline MeasureRecord fock_measures(int m, CompactTime u, const BathParams& bath)
{
    if (m < 0) throw std::invalid_argument("fock_measures: m must be >= 0");
    MeasureRecord rec;
    rec.u = u.value;
    rec.lambda = fock_lambda(m, u, bath);
    rec.mu = rec.lambda; // diagonal state: rho = rho_d at all times
    rec.p0 = fock_p0(m, u, bath);
    rec.C = std::nullopt;
    rec.D = thermalization(rec.mu, rec.p0);
    rec.s = linear_entropy(rec.mu);
    return rec;
}

// ---------------------------------------------------------------------------
// Family dispatch
// ---------------------------------------------------------------------------

inline MeasureRecord measures(const InitialState& state, CompactTime u,
                              const BathParams& bath)
{
    return std::visit(
        [&](const auto& s) -> MeasureRecord {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentState>)
                return coherent_measures(s.a, s.phi, u, bath);
            else if constexpr (std::is_same_v<T, CatState>)
                return cat_measures(s.a, s.phi_cat, u, bath);
            else if constexpr (std::is_same_v<T, SqueezedState>)
                return squeezed_measures(s.a, s.phi, s.rho, u, bath);
            else
                return fock_measures(s.m, u, bath);
        },
        state);
}

} // namespace oscidec::cf
