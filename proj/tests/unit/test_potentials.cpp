#include <gtest/gtest.h>

#include <cmath>

#include "dirac_darboux/errors.hpp"
#include "dirac_darboux/potentials.hpp"

using namespace dd;

namespace {

PotentialSpec lambert(double V0, double V1, double sigma, double x1 = 0.0, bool singular = false,
                      bool mirror = false) {
    return {Family::LambertW, V0, V1, sigma, x1, singular, mirror};
}

PotentialSpec expo(double V0, double V1, double sigma, double x1 = 0.0, bool singular = false,
                   bool mirror = false) {
    return {Family::InvSqrtExp, V0, V1, sigma, x1, singular, mirror};
}

}  // namespace

TEST(Potentials, Validation) {
    EXPECT_THROW(lambert(0, 0, 1).validate(), ConfigError);
    EXPECT_THROW(lambert(0, 1, 0).validate(), ConfigError);
    EXPECT_THROW(lambert(0, 1, 1, 0, false, true).validate(), ConfigError);
    EXPECT_NO_THROW(lambert(0, 1, -1, 0, true, true).validate());
    EXPECT_EQ(family_from_string("exp"), Family::InvSqrtExp);
    EXPECT_EQ(family_from_string(to_string(Family::LambertW)), Family::LambertW);
    EXPECT_THROW(family_from_string("bessel"), ConfigError);
}

TEST(Potentials, Domains) {
    Domain d = domain(lambert(0, -1, -0.25, 0, true));
    EXPECT_DOUBLE_EQ(d.lo, 0.25);
    EXPECT_TRUE(std::isinf(d.hi));
    d = domain(expo(1, -1, -1, 0, true));
    EXPECT_DOUBLE_EQ(d.lo, 0.0);
    EXPECT_TRUE(std::isinf(d.hi));
    d = domain(lambert(0, 1, 2.0));
    EXPECT_TRUE(std::isinf(d.lo) && std::isinf(d.hi));
    d = domain(expo(0, 1, 0.5, 1.0, true));
    EXPECT_DOUBLE_EQ(d.hi, 1.0);

    const PotentialSpec m = lambert(1, -1, -1, -1, true, true);
    EXPECT_TRUE(domain(m).contains(-3.0));
    EXPECT_THROW(eval_u0(m, 0.0), DomainError);
    EXPECT_THROW(eval_u0(lambert(0, -1, -0.25, 0, true), 0.25 + 1e-12), DomainError);
    EXPECT_THROW(eval_u0(lambert(0, -1, -0.25, 0, true), 0.1), DomainError);
}

TEST(Potentials, LambertValues) {
    const PotentialSpec s = lambert(0, 1, -1);
    EXPECT_NEAR(eval_u0(s, 40.0), 1.0, 1e-15);
    EXPECT_NEAR(eval_u0(s, -40.0), 1.0 / (1.0 + lambert_w0(std::exp(40.0))), 1e-15);
    EXPECT_LT(eval_u0(s, -700.0), 2e-3);
    const PotentialSpec b = lambert(1, -1, -1, -1, true, true);
    for (double x : {-3.0, -0.5, 0.2, 2.0}) {
        const double ref = 1.0 - 1.0 / (1.0 + lambert_w0(-std::exp(-std::abs(x) - 1.0)));
        EXPECT_NEAR(eval_u0(b, x), ref, 1e-14) << x;
    }
}

TEST(Potentials, ExponentialValues) {
    const PotentialSpec b = expo(0, -1, -1, 0, true, true);
    for (double x : {-3.0, -0.5, 0.2, 2.0, 45.0})
        EXPECT_NEAR(eval_u0(b, x), -1.0 / std::sqrt(1.0 - std::exp(-std::abs(x))), 1e-14) << x;
    const PotentialSpec s = expo(0, 2, 1);
    EXPECT_NEAR(eval_u0(s, 0.0), 2.0 / std::sqrt(2.0), 1e-15);
}

TEST(Potentials, DerivativeMatchesFiniteDifference) {
    const PotentialSpec specs[] = {lambert(0.3, 1.2, -0.7, 0.4), lambert(1, -1, -1, -1, true, true),
                                   expo(0.5, -1.5, 1.3), expo(0, -1, -1, 0, true, true),
                                   expo(0, 1, 0.75, 0.0, true)};
    for (const auto& s : specs)
        for (double x : {-2.0, -0.6, 0.7, 1.9}) {
            if (!domain(s).contains(x) || domain(s).endpoint_distance(x) < 0.05) continue;
            const double h = 1e-5;
            const double fd = (eval_u0(s, x + h) - eval_u0(s, x - h)) / (2 * h);
            EXPECT_NEAR(eval_u0_dx(s, x), fd, 1e-7 * std::max(1.0, std::abs(fd))) << to_string(s.family) << " " << x;
        }
}

TEST(Potentials, InnerVariableAccuracy) {
    // z - 1 keeps full relative precision where z rounds to 1.
    const InnerVar iv = inner_variable(expo(0, -1, -1, 0, true), 50.0);
    EXPECT_EQ(iv.z, 1.0);
    EXPECT_NEAR(iv.zm1 / (-std::exp(-50.0) / 2.0), 1.0, 1e-12);
}

TEST(Potentials, LambertAbbreviations) {
    const LambertAbbrevs a = lambert_abbrevs(lambert(0, 1, -1), {0.0, 1.25});
    EXPECT_NEAR(a.alpha.real(), -2.0, 1e-14);
    EXPECT_NEAR(a.alpha.imag(), 0.0, 1e-14);
    EXPECT_EQ(a.K0.imag(), 0.0);
    EXPECT_EQ(a.K1.imag(), 0.0);
    const LambertAbbrevs b = lambert_abbrevs(lambert(1, 1, -1), {0.0, 0.0});
    EXPECT_NEAR(std::abs(b.K0 - Cx(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b.K1 - Cx(0, 2)), 0.0, 1e-15);
    EXPECT_THROW(lambert_abbrevs(lambert(1, 1, -1), {0.0, 1.0}), SingularityError);
}

TEST(Potentials, ExponentialAbbreviations) {
    EXPECT_NEAR(exp_abbrevs(expo(0, 1, 0.75), {0.0, 13.0 / 12}).alpha.real(), -1.0, 1e-14);
    // beta + 1 = -3 here; n = 4 in the beta condition counts beta itself.
    EXPECT_NEAR(exp_abbrevs(expo(0, -1.5, -1), {0.0, 25.0 / 16}).beta.real(), -4.0, 1e-14);
    const ExpAbbrevs p = exp_abbrevs(expo(0.3, 0.8, 1.1), {0.0, 2.0});
    const ExpAbbrevs m = exp_abbrevs(expo(0.3, -0.8, 1.1), {0.0, 2.0});
    EXPECT_NEAR(std::abs(p.alpha1 - m.alpha2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(p.alpha2 - m.alpha1), 0.0, 1e-15);
}
