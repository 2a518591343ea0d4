#pragma once

#include <stdexcept>
#include <string>

namespace oscidec {

/// Adaptive quadrature failed to reach the requested tolerance.
/// Carries the last (untrusted) estimate so callers can log it.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}
    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

/// Adaptive ODE integration drove the step size below the representable
/// minimum for the interval. Carries the time actually reached.
class StiffnessError : public std::runtime_error {
public:
    StiffnessError(const std::string& what, double t_reached)
        : std::runtime_error(what), t_reached_(t_reached) {}
    double t_reached() const noexcept { return t_reached_; }

private:
    double t_reached_;
};

/// A quality monitor tripped during integration (e.g. trace drift in the
/// truncated master equation). The result is not trustworthy and is not
/// returned; the offending drift magnitude is carried instead.
class IntegrationQualityError : public std::runtime_error {
public:
    IntegrationQualityError(const std::string& what, double drift)
        : std::runtime_error(what), drift_(drift) {}
    double drift() const noexcept { return drift_; }

private:
    double drift_;
};

/// A finite basis or grid was too small to hold the state to the required
/// tail mass. Carries a dimension estimate that would suffice.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, int suggested_dim)
        : std::runtime_error(what), suggested_dim_(suggested_dim) {}
    int suggested_dim() const noexcept { return suggested_dim_; }

private:
    int suggested_dim_;
};

/// A generating-function evaluation left the branch of the square root on
/// which the function is defined (prefactor argument not positive on the
/// physical segment).
class BranchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace oscidec
