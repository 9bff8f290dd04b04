#pragma once

// Exact closed forms for a displaced-squeezed thermal state amplified by a
// degenerate parametric amplifier: mean amplitude A(tau), squeeze kernel,
// normally-ordered characteristic function, quadrature statistics, SNR,
// photon-number statistics, and the two-time coherence g2(tau).
//
// Every delay enters through the dimensionless product wt = omega*tau.
// Hyperbolic arguments come in three sizes -- wt, 2(wt+r), 4(wt+r) -- so the
// overflow budget is tiered accordingly; past a tier the op throws
// OverflowError instead of returning inf.

#include <cmath>
#include <complex>

#include "paramp/core.hpp"

namespace paramp {

inline constexpr double kMaxTauDirect = 690.0;      // cosh(wt) stays finite
inline constexpr double kMaxDoubledArg = 345.0;     // e^{2w}, kernel squares
inline constexpr double kMaxQuadrupledArg = 172.0;  // cosh(4w), sinh^2(2w)

struct TwoTimeKernels {
    double n_kernel = 0.0;
    double s_kernel = 0.0;
    double u_kernel = 0.0;
    double v_kernel = 0.0;
};

struct PhotonStats {
    double mean_n = 0.0;
    double var_n = 0.0;
    double mandel_q = 0.0;
};

struct QuadratureStats {
    double lambda = 0.0;
    double mean_x = 0.0;
    double var_x = 0.0;
    double uncertainty_product = 0.0;
};

struct SqueezeKernel {
    complex xi_tau;  // xi(tau) for the probe eta
    complex T;       // (1/2) e^{i theta} sinh[2(wt+r)]
    double S = 0.0;  // cosh[2(wt+r)]
};

namespace detail {

inline void require_budget(double arg, double budget, const char* what) {
    if (!(arg <= budget)) throw OverflowError(what);
}

// The forms below are derived for forward delays only.
inline void require_delay(double tau_scaled) {
    if (!(tau_scaled >= 0.0))
        throw DomainError("tau_scaled", "delay omega*tau must be >= 0");
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw OverflowError(what);
}

}  // namespace detail

// Mean amplitude <a(tau)>.  The amplifier mixes alpha with alpha* e^{i theta},
// so the growing e^{wt} mode carries the weight coth(r/2) of the initial
// squeeze axis relative to the displacement direction.
inline complex amplitude_A(const GaussianParams& p, double tau_scaled) {
    detail::require_delay(tau_scaled);
    detail::require_budget(tau_scaled, kMaxTauDirect, "amplitude_A: omega*tau > 690");
    const double ch = std::cosh(tau_scaled);
    const double sh = std::sinh(tau_scaled);
    const double cth = coth_half(p.r);
    const complex eid = std::polar(1.0, p.theta - 2.0 * p.phi);
    const complex bracket = (ch + 0.5 * cth * sh - 0.5 * (ch - 1.0))
                            + eid * (-0.5 * sh - 0.5 * cth * (ch - 1.0));
    const complex A = p.alpha() * bracket;
    detail::require_finite(std::abs(A), "amplitude_A: amplitude overflow");
    return A;
}

// xi(tau) = eta cosh(w) + eta* e^{i theta} sinh(w) with w = wt + r, plus the
// quadratic-form coefficients T, S of |xi|^2 = eta^2 T* + eta*^2 T + |eta|^2 S.
inline SqueezeKernel squeeze_kernel(const GaussianParams& p, const ProbePoint& probe) {
    detail::require_delay(probe.tau_scaled);
    const double w = probe.tau_scaled + p.r;
    detail::require_budget(w, kMaxDoubledArg, "squeeze_kernel: omega*tau + r > 345");
    const complex eta = probe.eta();
    SqueezeKernel k;
    k.xi_tau = eta * std::cosh(w) + std::conj(eta) * std::polar(1.0, p.theta) * std::sinh(w);
    k.T = 0.5 * std::polar(1.0, p.theta) * std::sinh(2.0 * w);
    k.S = std::cosh(2.0 * w);
    return k;
}

// Normally-ordered characteristic function
//   chi(eta) = exp(|eta|^2/2) exp(eta A* - eta* A) exp(-(nbar+1/2)|xi(tau)|^2).
// The middle factor is a pure phase; the real exponent is bounded above by
// |eta|^2/2, so only the squeeze-kernel budget applies.
inline complex characteristic_function(const GaussianParams& p, const ProbePoint& probe) {
    const SqueezeKernel k = squeeze_kernel(p, probe);
    const complex A = amplitude_A(p, probe.tau_scaled);
    const complex eta = probe.eta();
    const double xi2 = std::norm(k.xi_tau);
    const double re = 0.5 * std::norm(eta) - (p.nbar + 0.5) * xi2;
    const double im = 2.0 * std::imag(eta * std::conj(A));
    return std::exp(complex(re, im));
}

// |chi| along the antisqueezed probe direction 2*omega_phase = theta + pi:
//   exp[(|eta|^2/2)(1 - (2 nbar + 1) e^{-2(wt+r)})]; > 1 is the witness.
inline double chi_modulus_antisqueezed(const GaussianParams& p, double tau_scaled,
                                       double eta_abs) {
    detail::require_delay(tau_scaled);
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxDoubledArg, "chi_modulus_antisqueezed: omega*tau + r > 345");
    return std::exp(0.5 * eta_abs * eta_abs * (1.0 - (2.0 * p.nbar + 1.0) * std::exp(-2.0 * w)));
}

// <x_lambda> with x_lambda = (a e^{-i lambda} + a+ e^{i lambda}) / sqrt(2).
inline double quadrature_mean(const GaussianParams& p, double tau_scaled, double lambda) {
    const complex A = amplitude_A(p, tau_scaled);
    return std::sqrt(2.0) * std::real(A * std::polar(1.0, -lambda));
}

// Variance of x_lambda and the two-quadrature uncertainty product.  The
// product is evaluated as (nbar+1/2)^2 [1 + (1 - cos^2(theta-2 lambda))
// sinh^2(2w)], which avoids the cosh^2 - sinh^2 cancellation.
inline QuadratureStats quadrature_variance(const GaussianParams& p, double tau_scaled,
                                           double lambda) {
    detail::require_delay(tau_scaled);
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxQuadrupledArg, "quadrature_variance: omega*tau + r > 172");
    const auto [e2w, em2w] = stable_exp_pair(2.0 * w);
    const double half = p.nbar + 0.5;
    const double s = std::sin(lambda - 0.5 * p.theta);
    const double c = std::cos(lambda - 0.5 * p.theta);
    QuadratureStats q;
    q.lambda = lambda;
    q.mean_x = quadrature_mean(p, tau_scaled, lambda);
    q.var_x = half * (e2w * s * s + em2w * c * c);
    const double cs = std::cos(p.theta - 2.0 * lambda);
    const double sh2 = std::sinh(2.0 * w);
    q.uncertainty_product = half * half * (1.0 + (1.0 - cs * cs) * sh2 * sh2);
    detail::require_finite(q.uncertainty_product, "quadrature_variance: product overflow");
    return q;
}

// Variance minimized over lambda (attained at lambda = theta/2).
inline double quadrature_variance_min(const GaussianParams& p, double tau_scaled) {
    detail::require_delay(tau_scaled);
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxDoubledArg, "quadrature_variance_min: omega*tau + r > 345");
    return (p.nbar + 0.5) * std::exp(-2.0 * w);
}

// Signal-to-noise ratio <x_lambda>^2 / var(x_lambda) at one probe angle.
inline double snr(const GaussianParams& p, double tau_scaled, double lambda) {
    detail::require_delay(tau_scaled);
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxDoubledArg, "snr: omega*tau + r > 345");
    const double m = quadrature_mean(p, tau_scaled, lambda);
    const auto [e2w, em2w] = stable_exp_pair(2.0 * w);
    const double s = std::sin(lambda - 0.5 * p.theta);
    const double c = std::cos(lambda - 0.5 * p.theta);
    const double v = (p.nbar + 0.5) * (e2w * s * s + em2w * c * c);
    const double ratio = m * m / v;
    detail::require_finite(ratio, "snr: overflow");
    return ratio;
}

// Envelope of snr over lambda at phi = theta/2: the signal rides the
// antisqueezed axis while the noise sits at the squeezed minimum.
inline double snr_max(const GaussianParams& p, double tau_scaled) {
    detail::require_delay(tau_scaled);
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxDoubledArg, "snr_max: omega*tau + r > 345");
    const double cth = coth_half(p.r);
    const double emt = std::exp(-tau_scaled);
    const double bracket = cth * (1.0 - emt) + (1.0 + emt);
    const double num = p.alpha_abs * p.alpha_abs * bracket * bracket;
    const double den = (2.0 * p.nbar + 1.0) * std::exp(-2.0 * w);
    const double ratio = num / den;
    detail::require_finite(ratio, "snr_max: overflow");
    return ratio;
}

namespace detail {

// Mean photon number with A supplied, so g2 can reuse one A(tau) evaluation.
inline double mean_n_with(const GaussianParams& p, double tau_scaled, const complex& A) {
    const double w = tau_scaled + p.r;
    require_budget(w, kMaxDoubledArg, "mean_n: omega*tau + r > 345");
    const double m = (p.nbar + 0.5) * std::cosh(2.0 * w) + std::norm(A) - 0.5;
    require_finite(m, "mean_n: overflow");
    return m;
}

inline TwoTimeKernels kernels_with(const GaussianParams& p, double tau_scaled,
                                   const complex& A) {
    // kernel arguments are wt + 2r, not 2(wt + r)
    require_budget(tau_scaled + 2.0 * p.r, kMaxDoubledArg,
                   "two_time_kernels: omega*tau + 2r > 345");
    const complex alpha = p.alpha();
    TwoTimeKernels k;
    k.n_kernel = (p.nbar + 0.5) * std::cosh(tau_scaled + 2.0 * p.r)
                 - 0.5 * std::cosh(tau_scaled);
    k.s_kernel = (p.nbar + 0.5) * std::sinh(tau_scaled + 2.0 * p.r)
                 - 0.5 * std::sinh(tau_scaled);
    k.u_kernel = 2.0 * std::real(alpha * std::conj(A));
    k.v_kernel = 2.0 * std::real(alpha * A * std::polar(1.0, -p.theta));
    return k;
}

}  // namespace detail

// <n(tau)>, var n(tau), and Mandel Q = (var - mean)/mean.
inline PhotonStats photon_stats(const GaussianParams& p, double tau_scaled) {
    const double w = tau_scaled + p.r;
    detail::require_budget(w, kMaxQuadrupledArg, "photon_stats: omega*tau + r > 172");
    const complex A = amplitude_A(p, tau_scaled);
    const double half = p.nbar + 0.5;
    PhotonStats st;
    st.mean_n = detail::mean_n_with(p, tau_scaled, A);
    st.var_n = half * half * std::cosh(4.0 * w)
               + half * (2.0 * std::cosh(2.0 * w) * std::norm(A)
                         - std::sinh(2.0 * w)
                               * 2.0 * std::real(std::polar(1.0, p.theta) * std::conj(A) * std::conj(A)))
               - 0.25;
    detail::require_finite(st.var_n, "photon_stats: variance overflow");
    if (!(st.mean_n > 0.0))
        throw DomainError("mean_n", "Mandel Q undefined at zero mean photon number");
    st.mandel_q = (st.var_n - st.mean_n) / st.mean_n;
    return st;
}

inline TwoTimeKernels two_time_kernels(const GaussianParams& p, double tau_scaled) {
    return detail::kernels_with(p, tau_scaled, amplitude_A(p, tau_scaled));
}

// g2(tau) = 1 + (n^2 + s^2 + u n - v s) / (<n(0)> <n(tau)>).  Shares one
// A(tau) evaluation between the kernels and the tau-side mean.
inline double g2(const GaussianParams& p, double tau_scaled) {
    const complex A = amplitude_A(p, tau_scaled);
    const TwoTimeKernels k = detail::kernels_with(p, tau_scaled, A);
    const double m0 = detail::mean_n_with(p, 0.0, p.alpha());
    const double mt = detail::mean_n_with(p, tau_scaled, A);
    const double num = k.n_kernel * k.n_kernel + k.s_kernel * k.s_kernel
                       + k.u_kernel * k.n_kernel - k.v_kernel * k.s_kernel;
    detail::require_finite(num, "g2: kernel overflow");
    const double g = 1.0 + num / (m0 * mt);
    detail::require_finite(g, "g2: overflow");
    return g;
}

// lim_{tau->inf} g2(tau), by factoring the dominant e^{wt} growth out of each
// kernel and out of A(tau), then taking the ratio of leading coefficients.
// When theta = 2 phi the growing component of A keeps pace with the kernels
// and the alpha-dependent corrections vanish; otherwise they survive through
// cD = 1 - cos(theta - 2 phi).
inline double g2_asymptote(const GaussianParams& p) {
    const double cth = coth_half(p.r);
    const double e2r = std::exp(2.0 * p.r);
    const double half = p.nbar + 0.5;
    const double n_inf = 0.5 * (half * e2r - 0.5);
    const double cD = 1.0 - std::cos(p.theta - 2.0 * p.phi);
    const double a2 = p.alpha_abs * p.alpha_abs;
    const double u1_minus_v1 = a2 * (1.0 + cth) * cD;
    const double m_inf = 0.5 * half * e2r + a2 * (1.0 + cth) * (1.0 + cth) * cD / 8.0;
    const double m0 = detail::mean_n_with(p, 0.0, p.alpha());
    const double g = 1.0 + n_inf * (2.0 * n_inf + u1_minus_v1) / (m0 * m_inf);
    detail::require_finite(g, "g2_asymptote: overflow");
    return g;
}

}  // namespace paramp
