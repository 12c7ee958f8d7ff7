#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "varextropy/errors.hpp"
#include "varextropy/special.hpp"

using varextropy::log_gamma;

TEST(LogGamma, IntegerAndHalfIntegerAnchors) {
    EXPECT_EQ(log_gamma(1.0), 0.0);
    EXPECT_EQ(log_gamma(2.0), 0.0);
    EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-13);
    EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-14);
}

// Reference values computed with mpmath.loggamma at 30 digits.
TEST(LogGamma, MatchesHighPrecisionReference) {
    struct Case {
        double x;
        double expected;
    };
    const Case cases[] = {
        {0.5, 0.57236494292470008707},
        {0.75, 0.20328095143129537148},
        {0.999, 0.00057803853289138023817},
        {1.001, -0.00057639359828330615152},
        {1.25, -0.098271836421813161464},
        {1.5, -0.12078223763524522235},
        {1.9999, -0.000042275208772153458011},
        {2.0001, 0.000042281658112919946317},
        {2.5, 0.28468287047291915963},
        {3.7, 1.4280723266653881292},
        {10.5, 13.940625219403763633},
        {42.0, 114.03421178146170323},
        {123.456, 469.6055471299294835},
        {599.9, 3235.2388044558655744},
    };
    for (const auto& c : cases) {
        EXPECT_NEAR(log_gamma(c.x), c.expected, 1e-12 * std::abs(c.expected)) << "x = " << c.x;
    }
}

TEST(LogGamma, AgreesWithStdLgammaAcrossRange) {
    for (double x = 0.5; x <= 600.0; x += 0.37) {
        const double ref = std::lgamma(x);
        EXPECT_NEAR(log_gamma(x), ref, 1e-12 * std::max(1.0, std::abs(ref))) << "x = " << x;
    }
}

TEST(LogGamma, RecurrenceHolds) {
    for (double x = 0.5; x <= 500.0; x += 0.25) {
        const double gap = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
        EXPECT_LE(std::abs(gap), 1e-11) << "x = " << x;
    }
}

TEST(LogGamma, RejectsNonPositive) {
    EXPECT_THROW(log_gamma(0.0), varextropy::InvalidParameter);
    EXPECT_THROW(log_gamma(-1.5), varextropy::InvalidParameter);
    EXPECT_THROW(log_gamma(std::nan("")), varextropy::InvalidParameter);
}

TEST(LogBeta, MatchesGammaIdentity) {
    // B(1, 2) = 1/2, B(2, 3) = 1/12
    EXPECT_NEAR(varextropy::log_beta(1.0, 2.0), std::log(0.5), 1e-14);
    EXPECT_NEAR(varextropy::log_beta(2.0, 3.0), std::log(1.0 / 12.0), 1e-14);
}
