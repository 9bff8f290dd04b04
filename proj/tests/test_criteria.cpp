#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "paramp/criteria.hpp"

using namespace paramp;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const GaussianParams kBright{0.1, 0.1, 0.0, 5.0, 0.0, 1.0};
const GaussianParams kDim{0.1, 0.1, 0.0, 0.45, 0.0, 1.0};
const GaussianParams kTilted{0.1, 0.1, 0.9, 0.5, 0.4, 1.0};
}  // namespace

TEST_CASE("chi_criterion: pinned value, independence from displacement") {
    const ChiCriterion c = chi_criterion(kBright, 0.0);
    REQUIRE_THAT(c.value, WithinRel(0.9824769036935781, 1e-14));
    REQUIRE_THAT(c.value, WithinRel(1.2 * std::exp(-0.2), 1e-14));
    REQUIRE(c.nonclassical);

    // alpha and phi do not enter
    GaussianParams p = kBright;
    p.alpha_abs = 0.0;
    REQUIRE(chi_criterion(p, 0.3).value == chi_criterion(kBright, 0.3).value);
    p = kBright;
    p.phi = 2.2;
    REQUIRE(chi_criterion(p, 0.3).value == chi_criterion(kBright, 0.3).value);

    // hot thermal state at small squeeze: classical until the amplifier wins
    GaussianParams hot = kBright;
    hot.nbar = 2.0;
    REQUIRE_FALSE(chi_criterion(hot, 0.0).nonclassical);  // 5 e^{-0.2} > 1
    REQUIRE(chi_criterion(hot, 2.0).nonclassical);
}

TEST_CASE("chi criterion agrees bit-for-bit with the squeezing threshold") {
    // (2 nbar + 1) e^{-2w} < 1  iff  (nbar + 1/2) e^{-2w} < 1/2; the left side
    // is exactly twice the right in floating point, so the two tests can never
    // disagree, boundary instances included.
    const double nbar_boundary = (std::exp(0.2) - 1.0) / 2.0;  // value == 1 at w = 0.1
    for (double nbar : {0.0, 0.1, nbar_boundary, 0.5, 2.0}) {
        for (double r : {0.05, 0.1, 0.4}) {
            for (double wt : {0.0, 0.05, 0.3, 1.0}) {
                GaussianParams p{nbar, r, 0.0, 0.3, 0.0, 1.0};
                const ChiCriterion c = chi_criterion(p, wt);
                REQUIRE(c.value == 2.0 * quadrature_variance_min(p, wt));
                REQUIRE(c.nonclassical == (quadrature_variance_min(p, wt) < 0.5));
            }
        }
    }
}

TEST_CASE("rc88_gap: zero at zero delay, sign tracks distance from coherence") {
    REQUIRE(rc88_gap(kBright, 0.0) == 0.0);
    REQUIRE(rc88_gap(kDim, 0.0) == 0.0);

    // bright instance: g2 starts below one, crosses, and ends farther away
    REQUIRE(rc88_gap(kBright, 2.0) > 0.0);
    REQUIRE(rc88_gap(kBright, 5.0) < 0.0);

    // dim instance: never farther from coherence than at zero delay
    for (double wt : {0.5, 1.0, 3.0, 10.0, 20.0}) REQUIRE(rc88_gap(kDim, wt) > 0.0);
}

TEST_CASE("g2_criteria at representative delays") {
    SECTION("bright, zero delay: sub-Poissonian only") {
        const G2Criteria c = g2_criteria(kBright, 0.0);
        REQUIRE(c.sub_poissonian);
        REQUIRE_FALSE(c.antibunched);
        REQUIRE_FALSE(c.rc88);
    }
    SECTION("bright, moderate delay: antibunched but still nearer coherence") {
        const G2Criteria c = g2_criteria(kBright, 2.0);
        REQUIRE(c.sub_poissonian);
        REQUIRE(c.antibunched);
        REQUIRE_FALSE(c.rc88);
    }
    SECTION("bright, large delay: all three delayed criteria flip") {
        const G2Criteria c = g2_criteria(kBright, 5.0);
        REQUIRE(c.sub_poissonian);
        REQUIRE(c.antibunched);
        REQUIRE(c.rc88);
    }
    SECTION("dim: super-Poissonian and monotonically approaching coherence") {
        const G2Criteria c = g2_criteria(kDim, 0.5);
        REQUIRE_FALSE(c.sub_poissonian);
        REQUIRE_FALSE(c.antibunched);
        REQUIRE_FALSE(c.rc88);
    }
}

TEST_CASE("full_report aggregates the individual criteria") {
    const CriteriaReport rep = full_report(kBright, 0.0);
    REQUIRE(rep.sub_poissonian);
    REQUIRE_FALSE(rep.antibunched_at_tau);
    REQUIRE_FALSE(rep.rc88_nonclassical_at_tau);
    REQUIRE(rep.quadrature_squeezed);
    REQUIRE_THAT(rep.chi_criterion_value, WithinRel(0.9824769036935781, 1e-14));
    REQUIRE(rep.chi_nonclassical);
    REQUIRE(rep.mandel_nonclassical);  // Q_M(0) = -0.0164

    // dim instance: super-Poissonian at zero delay, yet Q_M(tau) dips negative
    // inside the window between its two zero crossings
    const CriteriaReport dim = full_report(kDim, 0.5);
    REQUIRE_FALSE(dim.sub_poissonian);
    REQUIRE(dim.mandel_nonclassical);
    REQUIRE(dim.quadrature_squeezed);
    REQUIRE_FALSE(full_report(kDim, 2.0).mandel_nonclassical);

    // the quadrature and characteristic-function tests are equivalent witnesses
    for (const auto& p : {kBright, kDim, kTilted}) {
        for (double wt : {0.0, 0.4, 1.5}) {
            const CriteriaReport r = full_report(p, wt);
            REQUIRE(r.quadrature_squeezed == r.chi_nonclassical);
            const G2Criteria gc = g2_criteria(p, wt);
            REQUIRE(r.sub_poissonian == gc.sub_poissonian);
            REQUIRE(r.antibunched_at_tau == gc.antibunched);
            REQUIRE(r.rc88_nonclassical_at_tau == gc.rc88);
        }
    }
}

TEST_CASE("full_report validates the cross-check grid size") {
    REQUIRE_THROWS_AS(full_report(kBright, 0.0, 3), DomainError);
    REQUIRE_NOTHROW(full_report(kBright, 0.0, 4));
}
