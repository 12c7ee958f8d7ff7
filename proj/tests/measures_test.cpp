#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "varextropy/errors.hpp"
#include "varextropy/measures.hpp"
#include "varextropy/quadrature.hpp"

using namespace varextropy;

namespace {

double normal_vj(double variance) {
    const double sqrt3 = std::sqrt(3.0);
    return (2.0 - sqrt3) / (16.0 * std::numbers::pi * variance * sqrt3);
}

std::vector<DistributionSpec> sweep() {
    std::vector<DistributionSpec> out{DistributionSpec::uniform()};
    for (double rate : {0.5, 1.0, 2.0, 5.0}) out.push_back(DistributionSpec::exponential(rate));
    for (double var : {0.25, 1.0, 4.0}) out.push_back(DistributionSpec::normal(0.0, var));
    for (double b : {1.0, 2.0, 3.0}) out.push_back(DistributionSpec::beta(1.0, b));
    return out;
}

}  // namespace

TEST(DistributionSpec, ConstructorsRejectInvalidParameters) {
    EXPECT_THROW(DistributionSpec::uniform(1.0, 1.0), InvalidParameter);
    EXPECT_THROW(DistributionSpec::exponential(0.0), InvalidParameter);
    EXPECT_THROW(DistributionSpec::normal(0.0, -1.0), InvalidParameter);
    EXPECT_THROW(DistributionSpec::beta(0.0, 1.0), InvalidParameter);
    EXPECT_THROW(DistributionSpec::beta(1.0, -2.0), InvalidParameter);
}

TEST(DistributionSpec, ParsesTextForms) {
    EXPECT_EQ(DistributionSpec::parse("uniform").kind(), DistributionKind::uniform);
    const auto e = DistributionSpec::parse("exponential:2");
    EXPECT_EQ(e.kind(), DistributionKind::exponential);
    EXPECT_EQ(e.p1(), 2.0);
    const auto n = DistributionSpec::parse("normal:1,4");
    EXPECT_EQ(n.p2(), 4.0);
    EXPECT_THROW(DistributionSpec::parse("beta:0,1"), InvalidParameter);
    EXPECT_THROW(DistributionSpec::parse("beta:1"), InvalidParameter);
    EXPECT_THROW(DistributionSpec::parse("gamma:2"), InvalidParameter);
    EXPECT_THROW(DistributionSpec::parse("normal:1,x"), InvalidParameter);
}

TEST(DistributionSpec, DensitiesIntegrateToOne) {
    for (const auto& d : sweep()) {
        const auto [lo, hi] = d.integration_range();
        const double mass = integrate([&](double x) { return d.pdf(x); }, lo, hi);
        EXPECT_NEAR(mass, 1.0, 1e-8) << d.to_string();
    }
    const auto b = DistributionSpec::beta(2.0, 3.0);
    EXPECT_NEAR(integrate([&](double x) { return b.pdf(x); }, 0.0, 1.0), 1.0, 1e-8);
}

TEST(Extropy, Examples) {
    EXPECT_DOUBLE_EQ(extropy(DistributionSpec::uniform()).value, -0.5);
    EXPECT_DOUBLE_EQ(extropy(DistributionSpec::exponential(2.0)).value, -0.5);
    EXPECT_DOUBLE_EQ(extropy(DistributionSpec::exponential(1.0)).value, -0.25);
    EXPECT_DOUBLE_EQ(extropy(DistributionSpec::uniform(0.0, 4.0)).value, -0.125);
    EXPECT_NEAR(extropy(DistributionSpec::normal(0.0, 1.0)).value,
                -1.0 / (4.0 * std::sqrt(std::numbers::pi)), 1e-15);
}

TEST(Extropy, BetaRoutesToQuadrature) {
    // -1/2 * int (2(1-x))^2 = -2/3
    const auto j = extropy(DistributionSpec::beta(1.0, 2.0));
    EXPECT_EQ(j.method, MeasureMethod::quadrature);
    EXPECT_NEAR(j.value, -2.0 / 3.0, 1e-10);
    // mpmath reference: -0.685714285714...
    EXPECT_NEAR(extropy(DistributionSpec::beta(2.0, 3.0)).value, -0.68571428571428571, 1e-9);
}

TEST(Extropy, AllRoutesAgree) {
    for (const auto& d : sweep()) {
        const double closed = extropy(d).value;
        EXPECT_NEAR(extropy_quadrature(d).value, closed, 1e-8) << d.to_string();
        if (d.kind() != DistributionKind::normal) {
            EXPECT_NEAR(extropy_quantile_form(d).value, closed, 1e-8) << d.to_string();
        }
        EXPECT_LE(closed, 0.0);
    }
}

TEST(VarextropyClosed, Examples) {
    EXPECT_EQ(varextropy_closed(DistributionSpec::uniform()).value, 0.0);
    EXPECT_NEAR(varextropy_closed(DistributionSpec::exponential(2.0)).value, 1.0 / 12.0, 1e-16);
    EXPECT_NEAR(varextropy_closed(DistributionSpec::normal(0.0, 1.0)).value, 0.003078, 5e-7);
    EXPECT_NEAR(varextropy_closed(DistributionSpec::normal(3.0, 1.0)).value, normal_vj(1.0), 1e-18);
}

TEST(VarextropyQuadrature, Examples) {
    EXPECT_NEAR(varextropy_quadrature(DistributionSpec::uniform()).value, 0.0, 1e-10);
    EXPECT_NEAR(varextropy_quadrature(DistributionSpec::exponential(1.0)).value, 1.0 / 48.0, 1e-9);
    EXPECT_NEAR(varextropy_quadrature(DistributionSpec::beta(1.0, 2.0)).value, 1.0 / 18.0, 1e-10);
    // mpmath reference for beta(2, 3): 0.044081632653...
    EXPECT_NEAR(varextropy_quadrature(DistributionSpec::beta(2.0, 3.0)).value, 0.04408163265306122,
                1e-9);
}

TEST(VarextropyQuadrature, NonIntegrableCubeIsReported) {
    // f^3 ~ x^-1.5 near zero for beta(0.5, 1)
    EXPECT_THROW(varextropy_quadrature(DistributionSpec::beta(0.5, 1.0)), QuadratureError);
}

TEST(VarextropyQuantileForm, Examples) {
    EXPECT_NEAR(varextropy_quantile_form(DistributionSpec::uniform()).value, 0.0, 1e-15);
    EXPECT_NEAR(varextropy_quantile_form(DistributionSpec::exponential(1.0)).value, 1.0 / 48.0, 1e-12);
    EXPECT_NEAR(varextropy_quantile_form(DistributionSpec::beta(1.0, 2.0)).value, 1.0 / 18.0, 1e-12);
}

TEST(VarextropyQuantileForm, UnsupportedLawsThrow) {
    EXPECT_THROW(varextropy_quantile_form(DistributionSpec::normal(0.0, 1.0)), NoQuantileForm);
    EXPECT_THROW(varextropy_quantile_form(DistributionSpec::beta(2.0, 3.0)), NoQuantileForm);
}

TEST(Varextropy, CrossMethodAgreementOnSweep) {
    for (const auto& d : sweep()) {
        const double quad = varextropy_quadrature(d).value;
        EXPECT_NEAR(varextropy_closed(d).value, quad, 1e-6) << d.to_string();
        if (d.kind() != DistributionKind::normal) {
            EXPECT_NEAR(varextropy_quantile_form(d).value, quad, 1e-6) << d.to_string();
        }
    }
}

TEST(Varextropy, ExponentialScaleLaw) {
    const double base_closed = varextropy_closed(DistributionSpec::exponential(1.0)).value;
    const double base_quad = varextropy_quadrature(DistributionSpec::exponential(1.0)).value;
    for (double rate : {0.5, 2.0, 3.0, 5.0}) {
        const auto d = DistributionSpec::exponential(rate);
        EXPECT_EQ(varextropy_closed(d).value, rate * rate * base_closed);
        EXPECT_NEAR(varextropy_quadrature(d).value, rate * rate * base_quad, 1e-6);
    }
}

TEST(Varextropy, NonNegativeOverRandomParameters) {
    std::mt19937_64 gen(20241);
    std::uniform_real_distribution<double> positive(0.2, 5.0);
    std::uniform_real_distribution<double> shape(1.0, 6.0);
    for (int i = 0; i < 60; ++i) {
        const std::vector<DistributionSpec> laws = {
            DistributionSpec::exponential(positive(gen)),
            DistributionSpec::normal(positive(gen) - 2.0, positive(gen)),
            DistributionSpec::beta(shape(gen), shape(gen)),
            DistributionSpec::uniform(-positive(gen), positive(gen)),
        };
        for (const auto& d : laws) {
            EXPECT_GE(varextropy_closed(d).value, -1e-12) << d.to_string();
            EXPECT_GE(varextropy_quadrature(d).value, -1e-12) << d.to_string();
        }
    }
}

TEST(RecordVarextropy, Anchors) {
    for (double rate : {0.5, 1.0, 2.0}) {
        const double expected = varextropy_closed(DistributionSpec::exponential(rate)).value;
        EXPECT_NEAR(record_varextropy_exponential(1, rate).value, expected, 1e-12 * expected);
    }
    // (1/16)(4*6/81 - 4/16) and (4/16)(2880/17496 - 576/4096), both by hand.
    EXPECT_NEAR(record_varextropy_exponential(2, 1.0).value, (4.0 * 6.0 / 81.0 - 4.0 / 16.0) / 16.0,
                1e-15);
    EXPECT_NEAR(record_varextropy_exponential(2, 1.0).value, 0.00289352, 1e-8);
    EXPECT_NEAR(record_varextropy_exponential(3, 2.0).value,
                4.0 / 16.0 * (2880.0 / 17496.0 - 576.0 / 4096.0), 1e-15);
}

TEST(RecordVarextropy, LargeIndexStaysFiniteAndNonNegative) {
    // mpmath reference at n = 50 and n = 200 (rate 1).
    EXPECT_NEAR(record_varextropy_exponential(50, 1.0).value, 6.27544277772430815e-5, 1e-15);
    EXPECT_NEAR(record_varextropy_exponential(200, 1.0).value, 1.54623528673429145e-5, 1e-15);
    double previous = INFINITY;
    for (std::int64_t n = 1; n <= 400; ++n) {
        const double v = record_varextropy_exponential(n, 1.0).value;
        ASSERT_TRUE(std::isfinite(v));
        ASSERT_GE(v, 0.0);
        EXPECT_LT(v, previous) << "n = " << n;  // records spread out, density flattens
        previous = v;
    }
}

TEST(RecordVarextropy, RejectsBadArguments) {
    EXPECT_THROW(record_varextropy_exponential(0, 1.0), InvalidParameter);
    EXPECT_THROW(record_varextropy_exponential(3, 0.0), InvalidParameter);
}
