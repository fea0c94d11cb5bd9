#include <gtest/gtest.h>

#include <cmath>

#include "dirac_darboux/errors.hpp"
#include "dirac_darboux/numerics.hpp"

using namespace dd;

TEST(Quadrature, Polynomials) {
    const QuadResult q = integrate_gk([](double x) { return Cx(x * x * x - 2 * x, x); }, -1.0, 2.0);
    EXPECT_NEAR(q.value.real(), (16.0 - 1.0) / 4 - (4.0 - 1.0), 1e-14);
    EXPECT_NEAR(q.value.imag(), 1.5, 1e-14);
}

TEST(Quadrature, PeakedIntegrand) {
    const QuadResult q = integrate_gk([](double x) { return Cx(1.0 / (1e-4 + x * x)); }, -1.0, 1.0, 1e-14, 1e-12);
    EXPECT_NEAR(q.value.real(), 2.0 * std::atan(1.0 / 1e-2) / 1e-2, 1e-9);
    EXPECT_GT(q.intervals, 1);
}

TEST(Quadrature, SubdivisionLimit) {
    EXPECT_THROW(integrate_gk([](double x) { return Cx(1.0 / std::sqrt(std::abs(x))); }, -1.0, 1.0, 1e-15, 1e-15, 20),
                 QuadratureError);
}

TEST(Ode, HarmonicOscillator) {
    auto rhs = [](double, const State2& y) -> State2 { return {y[1], -y[0]}; };
    OdeOptions o;
    o.rtol = 1e-12;
    o.atol = 1e-14;
    const auto pts = dopri5(rhs, 0.0, 10.0, {1.0, 0.0}, o);
    EXPECT_NEAR(pts.back().x, 10.0, 0.0);
    EXPECT_NEAR(pts.back().y[0].real(), std::cos(10.0), 1e-9);
    EXPECT_NEAR(pts.back().y[1].real(), -std::sin(10.0), 1e-9);
    const auto back = dopri5(rhs, 10.0, 0.0, pts.back().y, o);
    EXPECT_NEAR(back.back().y[0].real(), 1.0, 1e-8);
}

TEST(Ode, ComplexExponential) {
    const Cx w(0.3, 2.0);
    auto rhs = [&](double, const State2& y) -> State2 { return {w * y[0], w * y[1]}; };
    const auto pts = dopri5(rhs, 0.0, 3.0, {1.0, Cx(0, 1)});
    EXPECT_LT(std::abs(pts.back().y[0] - std::exp(3.0 * w)), 1e-8 * std::abs(std::exp(3.0 * w)));
}

TEST(Ode, StepFailure) {
    auto rhs = [](double x, const State2& y) -> State2 { return {1.0 / (1.0 - x) * y[0] * y[0] * 1e3, y[1]}; };
    OdeOptions o;
    o.max_steps = 50;
    EXPECT_THROW(dopri5(rhs, 0.0, 2.0, {1.0, 1.0}, o), StepFailure);
}

TEST(Bisection, RootsAndBrackets) {
    EXPECT_NEAR(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::sqrt(2.0), 1e-15);
    EXPECT_THROW(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoRoot);
    EXPECT_EQ(bisect([](double x) { return x - 1.0; }, 1.0, 3.0), 1.0);
}
