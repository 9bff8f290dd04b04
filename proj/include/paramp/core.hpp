#pragma once

// Domain types, parameter validation, and numerically stable scalar helpers
// shared by every other header.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace paramp {

using complex = std::complex<double>;

// ---------------------------------------------------------------------------
// errors

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& field, const std::string& detail)
        : std::invalid_argument("domain error: " + field + ": " + detail), field(field) {}
    std::string field;
};

struct OverflowError : std::range_error {
    explicit OverflowError(const std::string& what) : std::range_error("overflow: " + what) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what)
        : std::runtime_error("truncation: " + what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what)
        : std::runtime_error("convergence: " + what) {}
};

struct NoSignChangeError : std::runtime_error {
    explicit NoSignChangeError(const std::string& what)
        : std::runtime_error("no sign change: " + what) {}
};

struct MaxIterationsError : std::runtime_error {
    explicit MaxIterationsError(const std::string& what)
        : std::runtime_error("max iterations: " + what) {}
};

// ---------------------------------------------------------------------------
// domain types

// Physical parameter set of a displaced-squeezed thermal state evolving under
// a degenerate parametric amplifier.  The squeeze parameter is xi = r e^{i theta},
// the coherent amplitude alpha = |alpha| e^{i phi}, and omega = r / t is the
// rate that turns a raw delay tau into the dimensionless product omega*tau.
struct GaussianParams {
    double nbar = 0.0;       // mean thermal photon number, >= 0
    double r = 0.1;          // squeeze magnitude, strictly > 0
    double theta = 0.0;      // squeeze phase, radians
    double alpha_abs = 0.0;  // coherent amplitude magnitude, >= 0
    double phi = 0.0;        // coherent phase, radians
    double omega = 1.0;      // rate r/t, strictly > 0

    complex alpha() const { return std::polar(alpha_abs, phi); }
};

// Probe of the characteristic function: eta = |eta| e^{i omega_phase} plus the
// dimensionless delay at which the state is probed.
struct ProbePoint {
    double eta_abs = 0.0;
    double eta_phase = 0.0;
    double tau_scaled = 0.0;  // omega * tau, >= 0

    complex eta() const { return std::polar(eta_abs, eta_phase); }
};

// ---------------------------------------------------------------------------
// validation

inline const GaussianParams& validate(const GaussianParams& p) {
    if (!(p.nbar >= 0.0))
        throw DomainError("nbar", "mean thermal photon number must be >= 0");
    if (!(p.r > 0.0))
        throw DomainError("r", "squeeze magnitude must be > 0 (coth(r/2) is singular at r=0)");
    if (!std::isfinite(p.theta))
        throw DomainError("theta", "squeeze phase must be finite");
    if (!(p.alpha_abs >= 0.0))
        throw DomainError("alpha_abs", "coherent amplitude magnitude must be >= 0");
    if (!std::isfinite(p.phi))
        throw DomainError("phi", "coherent phase must be finite");
    if (!(p.omega > 0.0))
        throw DomainError("omega", "rate must be > 0");
    return p;
}

inline const ProbePoint& validate(const ProbePoint& pt) {
    if (!(pt.eta_abs >= 0.0))
        throw DomainError("eta_abs", "probe magnitude must be >= 0");
    if (!std::isfinite(pt.eta_phase))
        throw DomainError("eta_phase", "probe phase must be finite");
    if (!(pt.tau_scaled >= 0.0))
        throw DomainError("tau_scaled", "dimensionless delay must be >= 0");
    return pt;
}

// ---------------------------------------------------------------------------
// stable scalar helpers

// coth(r/2) via 1/tanh: no overflow for large r, no cancellation for tiny r.
inline double coth_half(double r) {
    if (!(r > 0.0)) throw DomainError("r", "coth_half requires r > 0");
    return 1.0 / std::tanh(0.5 * r);
}

// (e^{x}, e^{-x}) with an explicit range check instead of a silent inf.
inline std::pair<double, double> stable_exp_pair(double x) {
    if (!(std::abs(x) <= 700.0))
        throw OverflowError("stable_exp_pair: |x| = " + std::to_string(x) + " exceeds 700");
    double ex = std::exp(x);
    return {ex, 1.0 / ex};
}

}  // namespace paramp
