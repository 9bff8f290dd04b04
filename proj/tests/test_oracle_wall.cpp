// The wall: every closed form is checked against the truncated-basis oracle
// over a grid that exercises thermal occupation, squeeze strength and phase,
// displacement magnitude and phase, and delay.  Basis sizes were chosen per
// instance so the evolved state fits with orders-of-magnitude headroom, and
// the observed deltas sit far below the asserted tolerances.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "paramp/closed_form.hpp"
#include "paramp/fock_oracle.hpp"

using namespace paramp;
using Catch::Matchers::WithinAbs;

namespace {

struct WallInstance {
    double nbar, r, theta, alpha, phi, wt;
    int dim;
};

constexpr double kPi3 = std::numbers::pi / 3.0;

const WallInstance kWall[] = {
    {0.1, 0.10, 0.0, 0.0, 0.0, 0.50, 60},    // squeezed thermal, no displacement
    {0.0, 0.05, 0.0, 0.0, 0.0, 1.00, 100},   // squeezed vacuum, long delay
    {0.5, 0.30, 0.0, 0.0, 0.0, 1.00, 360},   // hot and strongly squeezed
    {0.1, 0.10, 0.0, 0.5, 0.0, 0.25, 60},    // small displacement
    {0.1, 0.10, 0.0, 1.0, 0.0, 0.50, 80},    // workhorse instance
    {0.1, 0.10, 0.9, 0.5, 0.4, 0.30, 60},    // generic phases
    {0.2, 0.15, 2.1, 0.7, -0.8, 0.40, 100},  // negative displacement phase
    {0.0, 0.20, 4.0, 0.5, 1.3, 0.50, 80},    // squeeze phase past pi
    {0.5, 0.05, 0.0, 1.0, 0.0, 0.25, 80},    // hot, weak squeeze
    {0.1, 0.05, 0.0, 0.5, kPi3, 0.50, 160},  // displacement off the squeeze axis
    {0.3, 0.10, 1.5, 0.3, 0.2, 0.75, 160},   // longer delay, generic phases
    {0.0, 0.10, 0.0, 1.0, kPi3, 0.25, 80},   // zero-temperature, off-axis
};

constexpr double kOneTimeTol = 1e-6;
constexpr double kG2Tol = 1e-4;
constexpr double kLambda = 0.3;

}  // namespace

TEST_CASE("closed forms agree with the oracle across the wall grid") {
    for (const WallInstance& wi : kWall) {
        DYNAMIC_SECTION("nbar=" << wi.nbar << " r=" << wi.r << " theta=" << wi.theta
                                << " alpha=" << wi.alpha << " phi=" << wi.phi
                                << " wt=" << wi.wt) {
            const GaussianParams p =
                validate({wi.nbar, wi.r, wi.theta, wi.alpha, wi.phi, 1.0});
            OracleContext ctx(p, wi.dim);

            REQUIRE_THAT(std::abs(oracle_amplitude(ctx, wi.wt) - amplitude_A(p, wi.wt)),
                         WithinAbs(0.0, kOneTimeTol));

            const auto [mx, vx] = oracle_quadrature(ctx, wi.wt, kLambda);
            REQUIRE_THAT(mx, WithinAbs(quadrature_mean(p, wi.wt, kLambda), kOneTimeTol));
            REQUIRE_THAT(vx, WithinAbs(quadrature_variance(p, wi.wt, kLambda).var_x,
                                       kOneTimeTol));

            const auto [mn, vn] = oracle_photon_stats(ctx, wi.wt);
            const PhotonStats ps = photon_stats(p, wi.wt);
            REQUIRE_THAT(mn, WithinAbs(ps.mean_n, kOneTimeTol));
            REQUIRE_THAT(vn, WithinAbs(ps.var_n, kOneTimeTol));

            const ProbePoint probe{0.3, 1.0, wi.wt};
            REQUIRE_THAT(std::abs(oracle_char_fn(ctx, probe)
                                  - characteristic_function(p, probe)),
                         WithinAbs(0.0, kOneTimeTol));

            REQUIRE_THAT(oracle_g2(ctx, wi.wt), WithinAbs(g2(p, wi.wt), kG2Tol));
        }
    }
}
