#include <abflux/quadrature.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace abflux;

TEST(Quadrature, PolynomialsExactOnOnePanel) {
    const auto r = integrate_adaptive([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0, {});
    EXPECT_NEAR(r.value, 9.0 - 3.0 + 3.0, 1e-13);
    EXPECT_EQ(r.intervals, 1u);
}

TEST(Quadrature, SmoothIntegrandsToTolerance) {
    EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 3.0, {}), std::exp(3.0) - 1.0, 1e-11);
    // near-singular 1/rho falloff
    EXPECT_NEAR(integrate([](double x) { return 1.0 / x; }, 1e-3, 10.0, {}), std::log(1e4), 1e-9);
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, 2 * std::numbers::pi, {}), 0.0, 1e-12);
}

TEST(Quadrature, ReversedLimitsNegate) {
    auto f = [](double x) { return std::cos(x) + x; };
    EXPECT_NEAR(integrate(f, 0.0, 2.0, {}), -integrate(f, 2.0, 0.0, {}), 1e-14);
    EXPECT_EQ(integrate(f, 1.0, 1.0, {}), 0.0);
}

TEST(Quadrature, ReportsNonConvergence) {
    QuadratureSpec spec;
    spec.max_subdivisions = 4;
    try {
        (void)integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::QuadratureNotConverged);
    }
}

TEST(Quadrature, RejectsBadSpec) {
    QuadratureSpec spec;
    spec.rel_tol = 0.0;
    EXPECT_THROW((void)integrate([](double) { return 1.0; }, 0.0, 1.0, spec), Error);
    spec = {};
    spec.abs_tol = -1.0;
    EXPECT_THROW(spec.validate(), Error);
    spec = {};
    spec.max_subdivisions = 0;
    EXPECT_THROW(spec.validate(), Error);
}
