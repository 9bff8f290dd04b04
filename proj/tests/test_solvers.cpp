#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "paramp/criteria.hpp"
#include "paramp/solvers.hpp"

using namespace paramp;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const GaussianParams kBright{0.1, 0.1, 0.0, 5.0, 0.0, 1.0};
const GaussianParams kDim{0.1, 0.1, 0.0, 0.45, 0.0, 1.0};
}  // namespace

TEST_CASE("find_root: plain analytic roots") {
    const auto sqrt2 = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
    REQUIRE_THAT(sqrt2.location, WithinAbs(std::numbers::sqrt2, 1e-12));
    REQUIRE(std::abs(sqrt2.residual) < 1e-10);
    REQUIRE(sqrt2.iterations > 0);
    REQUIRE(sqrt2.bracket_hi - sqrt2.bracket_lo <= 1e-12);
    REQUIRE(sqrt2.location >= sqrt2.bracket_lo);
    REQUIRE(sqrt2.location <= sqrt2.bracket_hi);

    // decreasing function
    const auto pi_half = find_root([](double x) { return std::cos(x); }, 0.0, 2.0, 1e-12);
    REQUIRE_THAT(pi_half.location, WithinAbs(std::numbers::pi / 2, 1e-12));
}

TEST_CASE("find_root: residual bounded by the local slope at the tolerance scale") {
    constexpr double tol = 1e-10;
    const auto res = find_root([](double x) { return std::exp(x) - 3.0; }, 0.0, 2.0, tol);
    const double slope = std::exp(res.location);  // |f'| near the root
    REQUIRE(std::abs(res.residual) < 10.0 * tol * slope);
}

TEST_CASE("find_root: deterministic across calls") {
    auto f = [](double x) { return std::sin(x) - 0.3 * x; };
    const auto a = find_root(f, 1.0, 3.0, 1e-11);
    const auto b = find_root(f, 1.0, 3.0, 1e-11);
    REQUIRE(a.location == b.location);
    REQUIRE(a.residual == b.residual);
    REQUIRE(a.iterations == b.iterations);
}

TEST_CASE("find_root: exact zeros at the bracket edge are returned immediately") {
    const auto at_lo = find_root([](double x) { return x; }, 0.0, 1.0, 1e-12);
    REQUIRE(at_lo.location == 0.0);
    REQUIRE(at_lo.residual == 0.0);
    REQUIRE(at_lo.iterations == 0);

    const auto at_hi = find_root([](double x) { return x - 1.0; }, 0.0, 1.0, 1e-12);
    REQUIRE(at_hi.location == 1.0);
    REQUIRE(at_hi.residual == 0.0);
}

TEST_CASE("find_root: diagnostics for bad input") {
    auto f = [](double x) { return x * x + 1.0; };
    REQUIRE_THROWS_AS(find_root(f, 0.0, 1.0, 1e-12), NoSignChangeError);
    REQUIRE_THROWS_AS(find_root(f, 1.0, 0.0, 1e-12), DomainError);
    REQUIRE_THROWS_AS(find_root(f, 0.0, 1.0, 0.0), DomainError);
    REQUIRE_THROWS_AS(find_root([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12),
                      DomainError);  // not finite at the left endpoint
}

TEST_CASE("critical_alpha: pinned transition amplitudes") {
    const RootResult ref = critical_alpha(0.1, 0.1);
    REQUIRE_THAT(ref.location, WithinAbs(0.4539662280772250, 1e-8));
    REQUIRE(std::abs(ref.residual) < 1e-10);

    REQUIRE_THAT(critical_alpha(0.2, 0.1).location, WithinAbs(5.418004815590704, 1e-7));
    REQUIRE_THAT(critical_alpha(0.0, 0.1).location, WithinAbs(0.2232352958482998, 1e-8));

    // defining property: the asymptote meets the zero-delay value there
    GaussianParams p{0.1, 0.1, 0.0, ref.location, 0.0, 1.0};
    REQUIRE_THAT(g2_asymptote(p), WithinRel(g2(p, 0.0), 1e-9));
}

TEST_CASE("qm_zero_crossings: counts and pinned locations") {
    const auto bright = qm_zero_crossings(kBright, 10.0);
    REQUIRE(bright.size() == 1);
    REQUIRE_THAT(bright[0].location, WithinAbs(2.260988180744760, 1e-6));

    const auto dim = qm_zero_crossings(kDim, 10.0);
    REQUIRE(dim.size() == 2);
    REQUIRE_THAT(dim[0].location, WithinAbs(0.0516869398209788, 1e-6));
    REQUIRE_THAT(dim[1].location, WithinAbs(0.8846970321396515, 1e-6));
    REQUIRE(dim[0].location < dim[1].location);

    // the sign really flips across each reported crossing
    for (const auto& root : dim) {
        const double before = photon_stats(kDim, root.location - 1e-3).mandel_q;
        const double after = photon_stats(kDim, root.location + 1e-3).mandel_q;
        REQUIRE(before * after < 0.0);
    }

    // with no displacement the Mandel parameter stays positive: no crossings
    GaussianParams thermal = kBright;
    thermal.alpha_abs = 0.0;
    REQUIRE(qm_zero_crossings(thermal, 20.0).empty());
}

TEST_CASE("rc88_threshold: counts and pinned locations") {
    const auto bright = rc88_threshold(kBright);
    REQUIRE(bright.size() == 1);
    REQUIRE_THAT(bright[0].location, WithinAbs(3.815147104640163, 1e-6));

    GaussianParams above = kDim;
    above.alpha_abs = 0.46;  // just past the transition amplitude
    const auto near = rc88_threshold(above);
    REQUIRE(near.size() == 1);
    REQUIRE_THAT(near[0].location, WithinAbs(3.9685758954309653, 1e-6));

    // below the transition the gap never changes sign
    REQUIRE(rc88_threshold(kDim).empty());
}

TEST_CASE("scan results are stable under grid doubling") {
    const auto coarse = qm_zero_crossings(kDim, 10.0, kDefaultScanGrid);
    const auto fine = qm_zero_crossings(kDim, 10.0, 2 * kDefaultScanGrid);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        REQUIRE_THAT(coarse[i].location, WithinAbs(fine[i].location, 2e-6));

    const auto c2 = rc88_threshold(kBright, 20.0, kDefaultScanGrid);
    const auto f2 = rc88_threshold(kBright, 20.0, 2 * kDefaultScanGrid);
    REQUIRE(c2.size() == f2.size());
    REQUIRE_THAT(c2[0].location, WithinAbs(f2[0].location, 2e-6));
}

TEST_CASE("scan entry points validate their arguments") {
    REQUIRE_THROWS_AS(qm_zero_crossings(kDim, 10.0, 50), DomainError);
    REQUIRE_THROWS_AS(qm_zero_crossings(kDim, 0.0), DomainError);
    REQUIRE_THROWS_AS(rc88_threshold(kDim, -1.0), DomainError);
}
