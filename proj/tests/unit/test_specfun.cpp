#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dirac_darboux/errors.hpp"
#include "dirac_darboux/specfun.hpp"

using namespace dd;

namespace {
const Cx I(0.0, 1.0);

double rel(Cx a, Cx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST(LambertW, TrivialPoints) {
    EXPECT_DOUBLE_EQ(lambert_w0(0.0), 0.0);
    EXPECT_NEAR(lambert_w0(M_E), 1.0, 1e-15);
    EXPECT_NEAR(lambert_w0(-std::exp(-1.0)), -1.0, 1e-7);
}

TEST(LambertW, InverseIdentity) {
    for (double t : {-0.36, -0.3, -0.1, -1e-5, 1e-8, 0.5, 3.0, 100.0, 1e10, 1e200}) {
        const double w = lambert_w0(t);
        EXPECT_NEAR(w * std::exp(w), t, 4e-14 * std::max(1.0, std::abs(t))) << t;
        EXPECT_GE(w, -1.0);
    }
}

TEST(LambertW, OutsideBranchThrows) { EXPECT_THROW(lambert_w0(-0.5), DomainError); }

TEST(LambertW, Derivative) {
    EXPECT_DOUBLE_EQ(lambert_w0_dx(0.0, 0.0), 1.0);
    EXPECT_NEAR(lambert_w0_dx(M_E, 1.0), 1.0 / (2 * M_E), 1e-15);
    const double t = -0.2, h = 1e-5;
    const double fd = (lambert_w0(t + h) - lambert_w0(t - h)) / (2 * h);
    EXPECT_NEAR(lambert_w0_dx(t, lambert_w0(t)), fd, 1e-8);
}

TEST(LambertW, LogParameterisedForms) {
    for (double s : {-50.0, -3.0, 0.0, 2.0, 40.0, 800.0}) {
        const double w = lambert_w0_exp(s);
        EXPECT_NEAR(std::log(w) + w, s, 1e-13 * std::max(1.0, std::abs(s))) << s;
    }
    for (double s : {-60.0, -5.0, -1.5, -1.0 - 1e-3, -1.0 - 1e-9}) {
        const double w = lambert_w0_negexp(s);
        EXPECT_LT(w, 0.0);
        EXPECT_GT(w, -1.0);
        EXPECT_NEAR(std::log(-w) + w, s, 1e-12) << s;
    }
}

TEST(Hyp1F1, Identities) {
    const Cx z(0.7, -0.3);
    EXPECT_EQ(hyp1f1(Cx(2.5, 1.0), Cx(0.5, 0.0), 0.0), Cx(1.0));
    EXPECT_LT(rel(hyp1f1(1.0, 1.0, z), std::exp(z)), 1e-15);
    const Cx c(3.0, 0.5);
    EXPECT_LT(rel(hyp1f1(-1.0, c, z), 1.0 - z / c), 1e-15);
    EXPECT_TRUE(hyp1f1_eval(-3.0, c, z).terminating());
}

TEST(Hyp1F1, KummerTransformForLargeNegativeArgument) {
    // M(1,2,z) = (e^z - 1)/z
    const Cx z(-40.0, 0.0);
    EXPECT_LT(rel(hyp1f1(1.0, 2.0, z), (std::exp(z) - 1.0) / z), 1e-13);
}

TEST(Hyp1F1, DerivativeMatchesFiniteDifference) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const Cx a(u(rng), u(rng)), c(u(rng) + 3.0, u(rng)), z(u(rng), u(rng));
        const double h = 1e-5;
        const Cx fd = (hyp1f1(a, c, z + h) - hyp1f1(a, c, z - h)) / (2 * h);
        EXPECT_LT(rel(hyp1f1_dz(a, c, z), fd), 1e-7) << a << c << z;
    }
    EXPECT_LT(rel(hyp1f1_dz(1.0, 1.0, 0.3), std::exp(Cx(0.3))), 1e-15);
    EXPECT_LT(rel(hyp1f1_dz(-1.0, Cx(2.0, 1.0), 0.3), -1.0 / Cx(2.0, 1.0)), 1e-15);
}

TEST(Hyp1F1, PoleAndRegularised) {
    EXPECT_THROW(hyp1f1(1.5, -2.0, 0.4), PoleError);
    // c -> -m limit: M(a,c,z)/Gamma(c) = (a)_{m+1} z^{m+1}/(m+1)! M(a+m+1, m+2, z)
    const Cx a(0.3, 0.2), z(0.6, -0.1);
    const Cx lim = a * (a + 1.0) * (a + 2.0) * z * z * z / 6.0 * hyp1f1(a + 3.0, 4.0, z);
    EXPECT_LT(rel(hyp1f1_reg(a, -2.0, z), lim), 1e-13);
    EXPECT_LT(rel(hyp1f1_reg(a, 2.5, z), hyp1f1(a, 2.5, z) / cgamma(2.5)), 1e-13);
}

TEST(Hyp0F1, BesselIdentity) {
    // 0F1(;1;-x^2/4) = J0(x)
    for (double x : {0.5, 2.0, 7.0}) EXPECT_NEAR(hyp0f1(1.0, -x * x / 4).real(), std::cyl_bessel_j(0.0, x), 1e-13);
    EXPECT_LT(rel(hyp0f1_reg(2.0, 0.8), hyp0f1(2.0, 0.8)), 1e-15);  // Gamma(2) = 1
}

TEST(Hyp2F1, Identities) {
    const Cx a(0.4, 0.3), b(1.2, -0.5), c(2.7, 0.1);
    EXPECT_EQ(hyp2f1(a, b, c, 0.0), Cx(1.0));
    for (Cx z : {Cx(0.3, 0.1), Cx(-0.7, 0.0), Cx(0.95, 0.0), Cx(-4.0, 0.0)})
        EXPECT_LT(rel(hyp2f1(a, b, b, z), std::pow(1.0 - z, -a)), 1e-12) << z;
    const Cx z(3.5, 0.0);
    const Cx poly = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
    EXPECT_LT(rel(hyp2f1(-2.0, b, c, z), poly), 1e-14);
    EXPECT_TRUE(hyp2f1_eval(-2.0, b, c, z).terminating());
}

TEST(Hyp2F1, EulerTerminatingPath) {
    // c - a = -1: F = (1-z)^{c-a-b} F(c-a, c-b; c; z) with a terminating right side.
    const Cx a(3.0), b(0.5), c(2.0), z(0.4);
    const SeriesValue v = hyp2f1_eval(a, b, c, z);
    const Cx ref = std::pow(1.0 - z, c - a - b) * (1.0 - (c - b) * z / c);
    EXPECT_LT(rel(v.value, ref), 1e-14);
}

TEST(Hyp2F1, ClosedFormsNearTheUnitCircle) {
    // F(1,1;2;z) = -log(1-z)/z and F(1/2,1/2;3/2;x^2) = asin(x)/x
    const Cx z(-0.95);
    EXPECT_LT(rel(hyp2f1(1.0, 1.0, 2.0, z), -std::log(1.0 - z) / z), 1e-13);
    const double x = 0.965;
    EXPECT_LT(rel(hyp2f1(0.5, 0.5, 1.5, x * x), Cx(std::asin(x) / x)), 1e-12);
    EXPECT_THROW(hyp2f1(0.3, 0.7, -3.0, 0.2), PoleError);
}

TEST(Hyp2F1, ContinuationPastOne) {
    // Real z > 1 is read as z - i0, so log(1 - z) = log(z - 1) + i pi.
    for (double x : {1.05, 1.3, 3.0, 40.0}) {
        const Cx ref = -Cx(std::log(x - 1.0), M_PI) / x;
        EXPECT_LT(rel(hyp2f1(1.0, 1.0, 2.0, Cx(x)), ref), 1e-9) << x;
    }
    // The z = 1 and z = infinity expansions agree where both converge.
    const Cx a(0.3), b(0.7), c(1.9), z(1.45);
    EXPECT_LT(rel(hyp2f1_connect_one(a, b, c, 1.0 - z).value, hyp2f1_connect_inf(a, b, c, z).value), 1e-12);
    EXPECT_EQ(hyp2f1_eval(a, b, c, 2.5).path, SeriesPath::Connection);
}

TEST(Complex, PrincipalBranches) {
    EXPECT_EQ(csqrt(4.0), Cx(2.0));
    EXPECT_LT(std::abs(csqrt(-1.0) - I), 1e-16);
    EXPECT_LT(std::abs(cpow(M_E, I * M_PI) + 1.0), 1e-15);
    EXPECT_THROW(cpow(0.0, -1.0), DomainError);
    EXPECT_EQ(cpow(0.0, 2.0), Cx(0.0));
}

TEST(Complex, Gamma) {
    EXPECT_NEAR(cgamma(5.0).real(), 24.0, 1e-12);
    EXPECT_NEAR(cgamma(0.5).real(), std::sqrt(M_PI), 1e-14);
    const Cx z(0.3, 1.7);
    EXPECT_LT(rel(cgamma(z + 1.0), z * cgamma(z)), 1e-13);
    EXPECT_LT(rel(cgamma(Cx(-2.5)), Cx(std::tgamma(-2.5))), 1e-13);
}
