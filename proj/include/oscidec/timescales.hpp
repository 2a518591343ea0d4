#pragma once

// Characteristic-time analysis: the primary purity-loss time t1, the
// purity-validity horizon t_star, the ultimate decoherence time t_d
// (analytic estimate and numeric root of the coherence threshold), the
// thermalization-time estimate t_T with its low-temperature expansion
// coefficients, and plateau detection on measure series.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oscidec/closedform.hpp"
#include "oscidec/measures.hpp"
#include "oscidec/model.hpp"

namespace oscidec::ts {

/// Primary purity-loss time t1 = 1 / (4 gamma [nu + (1+2nu) sigma_a]).
/// Infinite for a coherent state in a zero-temperature bath (no purity loss
/// to first order).
inline double t1(const InitialState& state, const BathParams& bath)
{
    const double sigma_a = fluctuation_energy(state).sigma_a;
    const double denom = bath.nu + (1.0 + 2.0 * bath.nu) * sigma_a;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (4.0 * bath.gamma * denom);
}

struct RegimeValue {
    double value;
    bool in_regime;
};

/// Purity-validity horizon t_star = (2 gamma)^{-1} ln[(a + 2nu)/(1 + 2nu)],
/// meaningful while a > 1 + 2nu (flagged otherwise).
inline RegimeValue t_star(double a, const BathParams& bath)
{
    if (a < 0.0) throw std::domain_error("t_star: requires a >= 0");
    const double value =
        std::log((a + 2.0 * bath.nu) / (1.0 + 2.0 * bath.nu)) / (2.0 * bath.gamma);
    return {value, a > 1.0 + 2.0 * bath.nu};
}

struct DecoherenceTime {
    double t;
    double u;
};

namespace detail {

/// Coherence at compact time u, or absent where the family defines none.
inline std::optional<double> coherence_at(const InitialState& state, double u,
                                          const BathParams& bath)
{
    return cf::measures(state, CompactTime(u), bath).C;
}

} // namespace detail

/// Largest root of C(u) = beta * mu_eq, located by a downward scan in
/// tau = -ln(1-u) followed by bisection (|u| bracket below 1e-10). Absent
/// when the coherence never meets the threshold, or for families without a
/// defined coherence.
inline std::optional<DecoherenceTime> t_d_numeric(const InitialState& state,
                                                  const BathParams& bath, double beta)
{
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("t_d_numeric: beta must lie in (0, 1)");
    const double mu_eq = 1.0 / (1.0 + 2.0 * bath.nu);
    const double threshold = beta * mu_eq;
    auto g = [&](double u) -> std::optional<double> {
        const auto c = detail::coherence_at(state, u, bath);
        if (!c) return std::nullopt;
        return *c - threshold;
    };

    const double tau_max = 34.0;
    const double dtau = 0.02;
    double tau_prev = tau_max;
    auto g_prev = g(-std::expm1(-tau_prev));
    if (g_prev && *g_prev >= 0.0) return std::nullopt; // still coherent at the scan top
    bool found = false;
    double tau_lo = 0.0, tau_hi = tau_max;
    for (double tau = tau_max - dtau; tau >= -1e-15; tau -= dtau) {
        const double tau_c = std::max(tau, 0.0);
        const auto g_here = g(-std::expm1(-tau_c));
        if (g_here && g_prev && *g_here >= 0.0 && *g_prev < 0.0) {
            tau_lo = tau_c;
            tau_hi = tau_prev;
            found = true;
            break;
        }
        tau_prev = tau_c;
        g_prev = g_here;
    }
    if (!found) return std::nullopt;

    double u_lo = -std::expm1(-tau_lo);  // g >= 0 side
    double u_hi = -std::expm1(-tau_hi);  // g < 0 side
    for (int it = 0; it < 200 && u_hi - u_lo > 1e-10; ++it) {
        const double mid = 0.5 * (u_lo + u_hi);
        const auto gm = g(mid);
        if (gm && *gm >= 0.0)
            u_lo = mid;
        else
            u_hi = mid;
    }
    const double u_root = 0.5 * (u_lo + u_hi);
    return DecoherenceTime{physical_time(CompactTime(u_root), bath), u_root};
}

/// Analytic decoherence-time estimates: coherent
/// (2 gamma)^{-1} ln[2 a mu_eq / beta], cat (2 gamma)^{-1} ln[a mu_eq sqrt(2/beta)].
inline double t_d_estimate(const InitialState& state, const BathParams& bath, double beta)
{
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("t_d_estimate: beta must lie in (0, 1)");
    const double mu_eq = 1.0 / (1.0 + 2.0 * bath.nu);
    if (const auto* c = std::get_if<CoherentState>(&state)) {
        if (!(c->a > 0.0)) throw std::domain_error("t_d_estimate: requires a > 0");
        return std::log(2.0 * c->a * mu_eq / beta) / (2.0 * bath.gamma);
    }
    if (const auto* c = std::get_if<CatState>(&state)) {
        if (!(c->a > 0.0)) throw std::domain_error("t_d_estimate: requires a > 0");
        return std::log(c->a * mu_eq * std::sqrt(2.0 / beta)) / (2.0 * bath.gamma);
    }
    throw std::invalid_argument("t_d_estimate: available for coherent and cat states");
}

/// Thermalization-time estimate. Diverges as nu -> 0 (no relaxation at zero
/// temperature); nu = 0 is a domain error.
inline double t_T_estimate(const InitialState& state, const BathParams& bath)
{
    if (!(bath.nu > 0.0))
        throw std::domain_error("t_T_estimate: requires nu > 0");
    const double nu = bath.nu;
    const double g2 = 2.0 * bath.gamma;
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentState>) {
                if (!(s.a > 0.0)) throw std::domain_error("t_T_estimate: vacuum state");
                return std::log(s.a / (nu * nu)) / g2;
            } else if constexpr (std::is_same_v<T, SqueezedState>) {
                if (s.a > 0.0) {
                    const double ecl = s.a * squeeze_factor(s.rho, s.phi);
                    return std::log(ecl / (nu * nu)) / g2;
                }
                const double sh = std::sinh(s.rho);
                const double e = sh * sh + 0.5;
                if (!(e > 0.0)) throw std::domain_error("t_T_estimate: vacuum state");
                return std::log(e / nu) / g2;
            } else if constexpr (std::is_same_v<T, CatState>) {
                const double e = fluctuation_energy(InitialState(s)).sigma_a;
                if (!(e > 0.0)) throw std::domain_error("t_T_estimate: vacuum state");
                return std::log(e / nu) / g2;
            } else {
                if (s.m < 1) throw std::domain_error("t_T_estimate: requires m >= 1");
                return std::log(s.m / std::sqrt(nu)) / bath.gamma;
            }
        },
        state);
}

struct TailCoefficient {
    int order;     // leading power of epsilon = e^{-2 gamma t} in 1 - D
    double value;  // its coefficient
};

/// Leading low-temperature expansion coefficient of 1 - D(u) in
/// epsilon = 1 - u: linear for mean-field states, quadratic for
/// vacuum-squeezed, cat and Fock states.
inline TailCoefficient thermal_tail_coefficient(const InitialState& state,
                                                const BathParams& bath)
{
    if (!(bath.nu > 0.0))
        throw std::domain_error("thermal_tail_coefficient: requires nu > 0");
    const double nu = bath.nu;
    return std::visit(
        [&](const auto& s) -> TailCoefficient {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CoherentState>) {
                if (!(s.a > 0.0))
                    throw std::domain_error("thermal_tail_coefficient: vacuum state");
                return {1, (1.0 + 2.0 * nu) * s.a / (2.0 * nu * nu * (1.0 + nu))};
            } else if constexpr (std::is_same_v<T, SqueezedState>) {
                if (s.a > 0.0) {
                    const double ecl = s.a * squeeze_factor(s.rho, s.phi);
                    return {1, (1.0 + 2.0 * nu) * ecl / (2.0 * nu * nu * (1.0 + nu))};
                }
                const double c = std::sinh(2.0 * s.rho) / (4.0 * nu * (1.0 + nu));
                return {2, c * c};
            } else if constexpr (std::is_same_v<T, CatState>) {
                const double a = s.a;
                return {2, a * a * (1.0 + 2.0 * nu) /
                               (4.0 * nu * nu * (1.0 + nu) * (1.0 + nu))};
            } else {
                const double m = s.m;
                return {2, m * (m + 1.0) / (4.0 * nu * (1.0 + nu) * (1.0 + nu))};
            }
        },
        state);
}

// ---------------------------------------------------------------------------
// Plateau detection
// ---------------------------------------------------------------------------

enum class MeasureField { mu, lambda, C, D, p0, s };

struct Plateau {
    double u_start, u_end;
    double level;
};

namespace detail {

inline std::optional<double> field_value(const MeasureRecord& r, MeasureField f)
{
    switch (f) {
        case MeasureField::mu: return r.mu;
        case MeasureField::lambda: return r.lambda;
        case MeasureField::C: return r.C;
        case MeasureField::D: return r.D;
        case MeasureField::p0: return r.p0;
        case MeasureField::s: return r.s;
    }
    return std::nullopt;
}

} // namespace detail

/// Longest u-interval on which the chosen measure stays within the relative
/// band around its interval median, provided the interval spans at least
/// min_span in u. Records where the field is undefined break candidate
/// intervals.
inline std::optional<Plateau> detect_plateau(const std::vector<MeasureRecord>& series,
                                             MeasureField field, double band = 0.05,
                                             double min_span = 0.2)
{
    if (series.size() < 100)
        throw std::invalid_argument("detect_plateau: need at least 100 samples");
    const std::size_t n = series.size();
    std::optional<Plateau> best;
    double best_span = min_span;

    std::vector<double> window;
    for (std::size_t i = 0; i < n; ++i) {
        const auto y0 = detail::field_value(series[i], field);
        if (!y0) continue;
        window.clear();
        double lo = *y0, hi = *y0;
        for (std::size_t j = i; j < n; ++j) {
            const auto yj = detail::field_value(series[j], field);
            if (!yj) break;
            window.insert(std::upper_bound(window.begin(), window.end(), *yj), *yj);
            lo = std::min(lo, *yj);
            hi = std::max(hi, *yj);
            const double median = window.size() % 2 == 1
                                      ? window[window.size() / 2]
                                      : 0.5 * (window[window.size() / 2 - 1] +
                                               window[window.size() / 2]);
            const double span = series[j].u - series[i].u;
            if (span < min_span) continue;
            if (hi <= (1.0 + band) * median && lo >= (1.0 - band) * median &&
                span >= best_span) {
                best = Plateau{series[i].u, series[j].u, median};
                best_span = span;
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

struct TimescaleReport {
    double beta;
    double t1;
    std::optional<RegimeValue> t_star;
    std::optional<double> t_d_estimate;
    std::optional<DecoherenceTime> t_d_numeric;
    std::optional<double> t_T_estimate;
    std::optional<Plateau> plateau_C;
    std::optional<Plateau> plateau_D;
};

/// Assemble the full report for one state and bath. The plateau scan runs
/// on an internally generated 401-point closed-form series.
inline TimescaleReport make_report(const InitialState& state, const BathParams& bath,
                                   double beta = 0.1)
{
    TimescaleReport rep;
    rep.beta = beta;
    rep.t1 = t1(state, bath);
    if (const auto* c = std::get_if<CoherentState>(&state))
        rep.t_star = t_star(c->a, bath);
    else if (const auto* c2 = std::get_if<CatState>(&state))
        rep.t_star = t_star(c2->a, bath);
    try {
        rep.t_d_estimate = t_d_estimate(state, bath, beta);
    } catch (const std::exception&) {
        rep.t_d_estimate = std::nullopt;
    }
    rep.t_d_numeric = t_d_numeric(state, bath, beta);
    try {
        rep.t_T_estimate = t_T_estimate(state, bath);
    } catch (const std::exception&) {
        rep.t_T_estimate = std::nullopt;
    }

    const int points = 401;
    std::vector<MeasureRecord> series;
    series.reserve(points);
    for (int k = 0; k < points; ++k)
        series.push_back(cf::measures(state, CompactTime(k / double(points)), bath));
    rep.plateau_C = detect_plateau(series, MeasureField::C);
    rep.plateau_D = detect_plateau(series, MeasureField::D);
    return rep;
}

} // namespace oscidec::ts
