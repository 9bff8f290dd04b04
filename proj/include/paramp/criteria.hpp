#pragma once

// Nonclassicality classification: photon-statistics tests built on g2, the
// quadrature-squeezing test, and the characteristic-function criterion along
// the antisqueezed direction, aggregated into one report per delay.

#include <cmath>
#include <numbers>

#include "paramp/closed_form.hpp"
#include "paramp/core.hpp"

namespace paramp {

struct CriteriaReport {
    bool sub_poissonian = false;           // g2(0) < 1
    bool antibunched_at_tau = false;       // g2(0) < g2(tau)
    bool rc88_nonclassical_at_tau = false; // |g2(0)-1| < |g2(tau)-1|
    bool quadrature_squeezed = false;      // min over lambda of var x_lambda < 1/2
    double chi_criterion_value = 0.0;      // (2 nbar + 1) e^{-2(wt+r)}
    bool chi_nonclassical = false;         // chi_criterion_value < 1
    bool mandel_nonclassical = false;      // Q_M(tau) < 0
};

struct ChiCriterion {
    double value = 0.0;
    bool nonclassical = false;
};

struct G2Criteria {
    bool sub_poissonian = false;
    bool antibunched = false;
    bool rc88 = false;
};

// (2 nbar + 1) e^{-2(wt+r)} < 1 iff |chi| exceeds 1 somewhere along the
// antisqueezed probe axis.  Independent of alpha and phi by construction.
inline ChiCriterion chi_criterion(const GaussianParams& p, double tau_scaled) {
    const double w = tau_scaled + p.r;
    ChiCriterion c;
    c.value = (2.0 * p.nbar + 1.0) * std::exp(-2.0 * w);
    c.nonclassical = c.value < 1.0;
    return c;
}

// Distance-from-coherence gap |g2(0)-1| - |g2(tau)-1|; negative means the
// correlation sits farther from unity at delay tau than it started.
inline double rc88_gap(const GaussianParams& p, double tau_scaled) {
    const double g0 = g2(p, 0.0);
    const double gt = g2(p, tau_scaled);
    return std::abs(g0 - 1.0) - std::abs(gt - 1.0);
}

inline G2Criteria g2_criteria(const GaussianParams& p, double tau_scaled) {
    const double g0 = g2(p, 0.0);
    const double gt = g2(p, tau_scaled);
    G2Criteria c;
    c.sub_poissonian = g0 < 1.0;
    c.antibunched = g0 < gt;
    c.rc88 = std::abs(g0 - 1.0) < std::abs(gt - 1.0);
    return c;
}

// Full report at one delay.  The quadrature test uses the analytic minimum
// (nbar+1/2) e^{-2(wt+r)} at lambda = theta/2; the lambda grid only verifies
// that no sampled variance undercuts it.
inline CriteriaReport full_report(const GaussianParams& p, double tau_scaled,
                                  int lambda_grid_size = 64) {
    if (lambda_grid_size < 4)
        throw DomainError("lambda_grid_size", "need at least 4 grid points");
    CriteriaReport rep;
    const G2Criteria gc = g2_criteria(p, tau_scaled);
    rep.sub_poissonian = gc.sub_poissonian;
    rep.antibunched_at_tau = gc.antibunched;
    rep.rc88_nonclassical_at_tau = gc.rc88;

    const double vmin = quadrature_variance_min(p, tau_scaled);
    double grid_min = vmin;
    for (int i = 0; i < lambda_grid_size; ++i) {
        const double lam = 2.0 * std::numbers::pi * i / lambda_grid_size;
        const double v = quadrature_variance(p, tau_scaled, lam).var_x;
        if (v < grid_min) grid_min = v;
    }
    rep.quadrature_squeezed = grid_min < 0.5;

    const ChiCriterion cc = chi_criterion(p, tau_scaled);
    rep.chi_criterion_value = cc.value;
    rep.chi_nonclassical = cc.nonclassical;

    rep.mandel_nonclassical = photon_stats(p, tau_scaled).mandel_q < 0.0;
    return rep;
}

}  // namespace paramp
