#pragma once

// Bracketing root finders for the transition points: Mandel-Q zero crossings,
// the sign change of the distance-from-coherence gap, and the critical
// coherent amplitude where lim g2(tau) meets g2(0).

#include <cmath>
#include <vector>

#include "paramp/closed_form.hpp"
#include "paramp/core.hpp"
#include "paramp/criteria.hpp"

namespace paramp {

struct RootResult {
    double location = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Bisection with a secant step taken whenever it lands safely inside the
// bracket.  Deterministic; terminates when the bracket is narrower than tol.
template <typename F>
RootResult find_root(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw DomainError("tol", "tolerance must be > 0");
    if (!(lo < hi)) throw DomainError("bracket", "need lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw DomainError("bracket", "function not finite at bracket endpoints");
    RootResult res;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    if (flo == 0.0) { res.location = lo; res.residual = 0.0; return res; }
    if (fhi == 0.0) { res.location = hi; res.residual = 0.0; return res; }
    if ((flo < 0.0) == (fhi < 0.0))
        throw NoSignChangeError("f has the same sign at both bracket endpoints");

    constexpr int kMaxIter = 200;
    double mid = 0.5 * (lo + hi);
    while (hi - lo > tol) {
        if (res.iterations >= kMaxIter)
            throw MaxIterationsError("find_root: bracket not resolved in 200 iterations");
        ++res.iterations;
        const double span = hi - lo;
        // secant through the bracket on alternate steps, plain bisection on the
        // others so the bracket is guaranteed to halve at least every other step
        double cand = 0.5 * (lo + hi);
        if (res.iterations % 2 == 1) {
            const double sec = lo - flo * span / (fhi - flo);
            if (sec > lo + 0.01 * span && sec < hi - 0.01 * span) cand = sec;
        }
        const double fc = f(cand);
        mid = cand;
        if (fc == 0.0) { lo = hi = cand; flo = fhi = 0.0; break; }
        if ((fc < 0.0) == (flo < 0.0)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
    }
    res.location = (std::abs(flo) <= std::abs(fhi)) ? lo : hi;
    if (lo == hi) res.location = mid;
    res.residual = f(res.location);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    return res;
}

namespace detail {

// Scan f on a uniform grid over (lo, hi], bracket every sign change, refine.
// The left endpoint is open: an exact zero at lo (e.g. the coherence gap,
// which vanishes identically at tau = 0) is not a transition.
template <typename F>
std::vector<RootResult> scan_roots(F&& f, double lo, double hi, int grid, double tol) {
    std::vector<RootResult> roots;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double fx = f(x);
        if (f_prev == 0.0) {
            if (x_prev != lo) {
                // interior grid point is an exact root; record and move on
                RootResult r;
                r.location = x_prev;
                r.residual = 0.0;
                r.bracket_lo = r.bracket_hi = x_prev;
                roots.push_back(r);
            }
        } else if (fx != 0.0 && (f_prev < 0.0) != (fx < 0.0)) {
            roots.push_back(find_root(f, x_prev, x, tol));
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

}  // namespace detail

inline constexpr int kDefaultScanGrid = 2000;

// Zero crossings of Mandel Q over (0, tau_max], increasing order, tol 1e-6.
inline std::vector<RootResult> qm_zero_crossings(const GaussianParams& p, double tau_max,
                                                 int grid = kDefaultScanGrid) {
    validate(p);
    if (grid < 100) throw DomainError("grid", "scan grid must have at least 100 points");
    if (!(tau_max > 0.0)) throw DomainError("tau_max", "scan range must be positive");
    auto f = [&p](double wt) { return photon_stats(p, wt).mandel_q; };
    return detail::scan_roots(f, 0.0, tau_max, grid, 1e-6);
}

// Sign changes of |g2(0)-1| - |g2(tau)-1| in (0, tau_max]; empty when the
// correlation never moves farther from unity than it started.
inline std::vector<RootResult> rc88_threshold(const GaussianParams& p, double tau_max = 20.0,
                                              int grid = kDefaultScanGrid) {
    validate(p);
    if (grid < 100) throw DomainError("grid", "scan grid must have at least 100 points");
    if (!(tau_max > 0.0)) throw DomainError("tau_max", "scan range must be positive");
    auto f = [&p](double wt) { return rc88_gap(p, wt); };
    return detail::scan_roots(f, 0.0, tau_max, grid, 1e-6);
}

// Critical |alpha| where lim g2(tau) = g2(0), bracketed on [1e-6, 10].
inline RootResult critical_alpha(double nbar, double r, double theta = 0.0,
                                 double phi = 0.0) {
    auto f = [&](double aabs) {
        GaussianParams p{nbar, r, theta, aabs, phi, 1.0};
        validate(p);
        return g2_asymptote(p) - g2(p, 0.0);
    };
    return find_root(f, 1e-6, 10.0, 1e-9);
}

}  // namespace paramp
