#pragma once

// Brute-force verification in a truncated number basis: build the thermal
// state, displace and squeeze it, evolve it under the amplifier Hamiltonian,
// and take every expectation value by dense matrix algebra.  Nothing here
// shares code with the closed forms; agreement between the two is the
// project's anti-regression wall.
//
// Truncation error is monitored, never silently repaired: the thermal tail
// mass is checked at construction, and evolved states are rejected when the
// top two number levels (two, because squeezed states populate only every
// other level) accumulate more than kEdgeTolerance of population.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "paramp/core.hpp"

namespace paramp {

using FockOperator = Eigen::MatrixXcd;
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr double kThermalTailTolerance = 1e-8;
inline constexpr double kStateTailTolerance = 1e-8;  // freshly prepared states
inline constexpr double kEdgeTolerance = 1e-6;       // evolved states

struct HamiltonianCoeffs {
    complex c_times_t;  // t*c = -(i/2) r e^{i theta}
    complex b_times_t;  // t*b = -(i/2) (alpha e^{-i theta} + alpha* coth(r/2)) r
};

inline HamiltonianCoeffs hamiltonian_coeffs(const GaussianParams& p) {
    validate(p);
    const complex alpha = p.alpha();
    const complex mi_half(0.0, -0.5);
    HamiltonianCoeffs hc;
    hc.c_times_t = mi_half * p.r * std::polar(1.0, p.theta);
    hc.b_times_t = mi_half * (alpha * std::polar(1.0, -p.theta)
                              + std::conj(alpha) * coth_half(p.r)) * p.r;
    return hc;
}

inline FockOperator annihilation(int dim) {
    if (dim < 2) throw DomainError("dim", "truncated basis needs at least 2 levels");
    FockOperator a = FockOperator::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

// Population of the top two number levels; the tripwire for truncation loss.
inline double edge_population(const DensityMatrix& rho) {
    const int n = int(rho.rows());
    return std::max(std::real(rho(n - 1, n - 1)), std::real(rho(n - 2, n - 2)));
}

inline DensityMatrix build_thermal(double nbar, int dim) {
    if (nbar < 0.0) throw DomainError("nbar", "mean thermal photon number must be >= 0");
    if (dim < 2) throw DomainError("dim", "truncated basis needs at least 2 levels");
    DensityMatrix rho = DensityMatrix::Zero(dim, dim);
    if (nbar == 0.0) {
        rho(0, 0) = 1.0;
        return rho;
    }
    const double q = nbar / (nbar + 1.0);
    const double tail_mass = std::pow(q, dim);  // geometric mass beyond the basis
    if (tail_mass > kThermalTailTolerance)
        throw TruncationError("build_thermal: tail mass " + std::to_string(tail_mass)
                              + " at dim " + std::to_string(dim));
    double norm = 0.0;
    double pn = 1.0;
    for (int n = 0; n < dim; ++n, pn *= q) norm += pn;
    pn = 1.0;
    for (int n = 0; n < dim; ++n, pn *= q) rho(n, n) = pn / norm;
    return rho;
}

// exp(G) for an anti-Hermitian generator, via the eigendecomposition of the
// Hermitian matrix iG: exp(G) = V exp(-i Lambda) V+.  Exactly unitary up to
// the eigensolver's round-off.
inline FockOperator build_unitary(const FockOperator& generator) {
    const int dim = int(generator.rows());
    if (dim < 2 || generator.cols() != dim)
        throw DomainError("generator", "square matrix of dimension >= 2 required");
    const double scale = std::max(1.0, generator.cwiseAbs().maxCoeff());
    const double herm_defect = (generator + generator.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-10 * scale)
        throw DomainError("generator", "not anti-Hermitian (defect "
                                           + std::to_string(herm_defect) + ")");
    const Eigen::MatrixXcd herm = complex(0.0, 1.0) * generator;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("build_unitary: eigendecomposition failed");
    const Eigen::VectorXcd phases =
        (complex(0.0, -1.0) * es.eigenvalues().cast<complex>()).array().exp().matrix();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline FockOperator displacement(const complex& alpha, int dim) {
    const FockOperator a = annihilation(dim);
    return build_unitary(alpha * a.adjoint() - std::conj(alpha) * a);
}

inline FockOperator squeeze(const complex& xi, int dim) {
    const FockOperator a = annihilation(dim);
    return build_unitary(-0.5 * xi * (a.adjoint() * a.adjoint())
                         + 0.5 * std::conj(xi) * (a * a));
}

// rho_G = D(alpha) S(xi) rho_thermal S+(xi) D+(alpha).
inline DensityMatrix gaussian_state(const GaussianParams& p, int dim) {
    validate(p);
    const DensityMatrix rho0 = build_thermal(p.nbar, dim);
    const FockOperator prep = displacement(p.alpha(), dim)
                              * squeeze(std::polar(p.r, p.theta), dim);
    DensityMatrix rho = prep * rho0 * prep.adjoint();
    const double edge = edge_population(rho);
    if (edge > kStateTailTolerance)
        throw TruncationError("gaussian_state: edge population "
                              + std::to_string(edge) + " at dim " + std::to_string(dim));
    return rho;
}

// Hamiltonian times the preparation time t (hbar = 1):
//   H t = tc a+^2 + tc* a^2 + tb a + tb* a+.
// Delays scale it by (omega tau)/r, which removes t as an independent knob.
inline FockOperator hamiltonian_t(const GaussianParams& p, int dim) {
    const HamiltonianCoeffs hc = hamiltonian_coeffs(p);
    const FockOperator a = annihilation(dim);
    const FockOperator ad = a.adjoint();
    return hc.c_times_t * (ad * ad) + std::conj(hc.c_times_t) * (a * a)
           + hc.b_times_t * a + std::conj(hc.b_times_t) * ad;
}

// Eigensystem of H t, reused across delays: U(tau) = V exp(-i Lambda wt/r) V+.
class OracleContext {
  public:
    OracleContext(const GaussianParams& p, int dim)
        : params_(validate(p)), dim_(dim), a_(annihilation(dim)),
          rho_g_(gaussian_state(p, dim)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian_t(p, dim));
        if (es.info() != Eigen::Success)
            throw ConvergenceError("OracleContext: Hamiltonian eigendecomposition failed");
        evecs_ = es.eigenvectors();
        evals_ = es.eigenvalues();
    }

    int dim() const { return dim_; }
    const GaussianParams& params() const { return params_; }
    const FockOperator& a_op() const { return a_; }
    const DensityMatrix& initial_state() const { return rho_g_; }

    FockOperator unitary(double tau_scaled) const {
        if (tau_scaled < 0.0)
            throw DomainError("tau_scaled", "dimensionless delay must be >= 0");
        const double s = tau_scaled / params_.r;
        const Eigen::VectorXcd phases =
            (complex(0.0, -1.0) * s * evals_.cast<complex>()).array().exp().matrix();
        return evecs_ * phases.asDiagonal() * evecs_.adjoint();
    }

    // U rho_G U+ with the edge-population tripwire.
    DensityMatrix evolved_state(double tau_scaled) const {
        const FockOperator u = unitary(tau_scaled);
        DensityMatrix rho = u * rho_g_ * u.adjoint();
        const double edge = edge_population(rho);
        if (edge > kEdgeTolerance)
            throw TruncationError("evolve: edge population " + std::to_string(edge)
                                  + " at dim " + std::to_string(dim_));
        return rho;
    }

  private:
    GaussianParams params_;
    int dim_;
    FockOperator a_;
    DensityMatrix rho_g_;
    Eigen::MatrixXcd evecs_;
    Eigen::VectorXd evals_;
};

// Unitary conjugation of an arbitrary state by exp(-i H t (wt/r)).
inline DensityMatrix evolve(const DensityMatrix& state, const GaussianParams& p,
                            double tau_scaled) {
    validate(p);
    if (tau_scaled < 0.0)
        throw DomainError("tau_scaled", "dimensionless delay must be >= 0");
    const int dim = int(state.rows());
    const FockOperator u =
        build_unitary(complex(0.0, -tau_scaled / p.r) * hamiltonian_t(p, dim));
    DensityMatrix rho = u * state * u.adjoint();
    const double edge = edge_population(rho);
    if (edge > kEdgeTolerance)
        throw TruncationError("evolve: edge population " + std::to_string(edge)
                              + " at dim " + std::to_string(dim));
    return rho;
}

// exp(eta a+) filled directly: the operator is nilpotent-triangular, so
// E[m][n] = eta^{m-n} sqrt(m!/n!) / (m-n)! with a running-product recurrence.
inline FockOperator exp_eta_adagger(const complex& eta, int dim) {
    FockOperator e = FockOperator::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        e(n, n) = 1.0;
        for (int m = n + 1; m < dim; ++m)
            e(m, n) = e(m - 1, n) * eta * std::sqrt(double(m)) / double(m - n);
    }
    return e;
}

inline complex oracle_amplitude(const OracleContext& ctx, double tau_scaled) {
    return (ctx.evolved_state(tau_scaled) * ctx.a_op()).trace();
}

// (mean, variance) of the photon number at one delay.
inline std::pair<double, double> oracle_photon_stats(const OracleContext& ctx,
                                                     double tau_scaled) {
    const DensityMatrix rho = ctx.evolved_state(tau_scaled);
    const FockOperator n_op = ctx.a_op().adjoint() * ctx.a_op();
    const double m = std::real((rho * n_op).trace());
    const double m2 = std::real((rho * n_op * n_op).trace());
    return {m, m2 - m * m};
}

// (mean, variance) of x_lambda = (a e^{-i lambda} + a+ e^{i lambda})/sqrt(2).
inline std::pair<double, double> oracle_quadrature(const OracleContext& ctx,
                                                   double tau_scaled, double lambda) {
    const DensityMatrix rho = ctx.evolved_state(tau_scaled);
    const FockOperator x = (ctx.a_op() * std::polar(1.0, -lambda)
                            + ctx.a_op().adjoint() * std::polar(1.0, lambda))
                           / std::sqrt(2.0);
    const double m = std::real((rho * x).trace());
    const double m2 = std::real((rho * x * x).trace());
    return {m, m2 - m * m};
}

// Normally-ordered characteristic function Tr[rho(tau) e^{eta a+} e^{-eta* a}].
inline complex oracle_char_fn(const OracleContext& ctx, const ProbePoint& probe) {
    validate(probe);
    if (probe.eta_abs > 2.0)
        throw DomainError("eta_abs", "probe magnitude above 2 is outside the oracle's range");
    const DensityMatrix rho = ctx.evolved_state(probe.tau_scaled);
    const complex eta = probe.eta();
    const FockOperator e_plus = exp_eta_adagger(eta, ctx.dim());
    // exp(-eta* a) = [exp(-eta a+)]+
    const FockOperator e_minus = exp_eta_adagger(-eta, ctx.dim()).adjoint();
    return (rho * e_plus * e_minus).trace();
}

// g2(tau) from the Heisenberg-picture correlator:
//   <a+(0) n(tau) a(0)> / (<n(0)> <n(tau)>),  n(tau) = U+ n U.
inline double oracle_g2(const OracleContext& ctx, double tau_scaled) {
    const DensityMatrix& rho = ctx.initial_state();
    const FockOperator u = ctx.unitary(tau_scaled);
    const FockOperator n_op = ctx.a_op().adjoint() * ctx.a_op();
    const FockOperator n_tau = u.adjoint() * n_op * u;
    {
        // same truncation tripwire as evolved_state
        DensityMatrix rho_tau = u * rho * u.adjoint();
        const double edge = edge_population(rho_tau);
        if (edge > kEdgeTolerance)
            throw TruncationError("oracle_g2: edge population " + std::to_string(edge)
                                  + " at dim " + std::to_string(ctx.dim()));
    }
    const double num =
        std::real((rho * ctx.a_op().adjoint() * n_tau * ctx.a_op()).trace());
    const double den = std::real((rho * n_op).trace()) * std::real((rho * n_tau).trace());
    return num / den;
}

// Convenience one-shot wrappers matching the closed-form call shapes.
inline complex oracle_amplitude(const GaussianParams& p, double tau_scaled, int dim) {
    return oracle_amplitude(OracleContext(p, dim), tau_scaled);
}
inline std::pair<double, double> oracle_photon_stats(const GaussianParams& p,
                                                     double tau_scaled, int dim) {
    return oracle_photon_stats(OracleContext(p, dim), tau_scaled);
}
inline std::pair<double, double> oracle_quadrature(const GaussianParams& p,
                                                   double tau_scaled, double lambda,
                                                   int dim) {
    return oracle_quadrature(OracleContext(p, dim), tau_scaled, lambda);
}
inline complex oracle_char_fn(const GaussianParams& p, const ProbePoint& probe, int dim) {
    return oracle_char_fn(OracleContext(p, dim), probe);
}
inline double oracle_g2(const GaussianParams& p, double tau_scaled, int dim) {
    return oracle_g2(OracleContext(p, dim), tau_scaled);
}

}  // namespace paramp
