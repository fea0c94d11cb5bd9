#include <gtest/gtest.h>

#include <cmath>

#include "dirac_darboux/elementary.hpp"
#include "dirac_darboux/errors.hpp"

using namespace dd;

namespace {

PotentialSpec lam(double V0, double V1, double s, bool singular = false) {
    return {Family::LambertW, V0, V1, s, 0.0, singular, false};
}
PotentialSpec ex(double V0, double V1, double s, bool singular = false, bool mirror = false) {
    return {Family::InvSqrtExp, V0, V1, s, 0.0, singular, mirror};
}

}  // namespace

TEST(Elementary, Names) {
    for (auto c : {ConditionId::LamAlpha, ConditionId::ExpAlpha, ConditionId::ExpBeta, ConditionId::ExpGamma1,
                   ConditionId::ExpGamma2})
        EXPECT_EQ(condition_from_string(to_string(c)), c);
    EXPECT_THROW(condition_from_string("delta"), ConfigError);
}

TEST(Elementary, LambertMonotoneCase) {
    const PotentialSpec s = lam(0, -1, -1);
    double prev = alpha_of_ky(s, 1.0001);
    for (double k = 1.01; k < 50; k *= 1.2) {
        const double a = alpha_of_ky(s, k);
        EXPECT_LT(a, prev);
        EXPECT_LT(a, -1.0);
        prev = a;
    }
    const ConditionRange r = condition_range(s, ConditionId::LamAlpha);
    EXPECT_FALSE(r.has_interior_max);
    EXPECT_NEAR(r.sup, -1.0, 1e-6);
    EXPECT_NEAR(lambert_alpha_sup_formula(s), -1.0, 1e-14);
}

TEST(Elementary, LambertInteriorMaximum) {
    const PotentialSpec s = lam(2, -4, -1);
    const ConditionRange r = condition_range(s, ConditionId::LamAlpha);
    EXPECT_TRUE(r.has_interior_max);
    EXPECT_NEAR(r.sup, -8.0, 1e-8);
    EXPECT_NEAR(lambert_alpha_max_formula(s), -8.0, 1e-12);
    EXPECT_EQ(admissible_n(s, ConditionId::LamAlpha).lo, 9);  // the bound -8 is not attained
}

TEST(Elementary, ExponentialAlphaRange) {
    const PotentialSpec s = ex(0, -1.5, 1);
    const ConditionRange r = condition_range(s, ConditionId::ExpAlpha);
    EXPECT_NEAR(r.inf, -3.0, 1e-6);
    EXPECT_NEAR(r.sup, 0.0, 1e-6);
    const IntRange n = admissible_n(s, ConditionId::ExpAlpha);
    EXPECT_EQ(n.lo, 1);
    ASSERT_TRUE(n.hi);
    EXPECT_EQ(*n.hi, 2);
}

TEST(Elementary, AdmissibleSets) {
    IntRange n = admissible_n(lam(0, 1, -1), ConditionId::LamAlpha);
    EXPECT_EQ(n.lo, 2);
    EXPECT_FALSE(n.hi);
    n = admissible_n(ex(0, 1, 0.75), ConditionId::ExpAlpha);
    EXPECT_EQ(n.lo, 1);
    EXPECT_EQ(n.hi.value_or(-1), 1);
    n = admissible_n(ex(0, -1.5, -1), ConditionId::ExpBeta);
    EXPECT_EQ(n.lo, 4);
    EXPECT_FALSE(n.hi);
    n = admissible_n(ex(0, 2, 1), ConditionId::ExpAlpha);
    EXPECT_EQ(n.lo, 1);
    EXPECT_EQ(n.hi.value_or(-1), 3);
    n = admissible_n(lam(0, 1, -0.25, true), ConditionId::LamAlpha);
    EXPECT_EQ(n.lo, 1);
}

TEST(Elementary, SignPreconditions) {
    EXPECT_THROW(admissible_n(lam(0, 1, 1), ConditionId::LamAlpha), SignError);
    EXPECT_THROW(solve_ky(ex(0, 1, -1), ConditionId::ExpAlpha, 1), SignError);
    EXPECT_THROW(solve_ky(ex(0, 1, 1), ConditionId::ExpBeta, 1), SignError);
    EXPECT_THROW(solve_ky(lam(0, 1, -1), ConditionId::ExpAlpha, 1), DomainError);
}

TEST(Elementary, GoldenRoots) {
    auto one = [](const PotentialSpec& s, ConditionId c, int n) {
        const auto r = solve_ky(s, c, n).roots;
        EXPECT_EQ(r.size(), 1u);
        return r.empty() ? 0.0 : r.front();
    };
    EXPECT_NEAR(one(lam(0, 1, -1), ConditionId::LamAlpha, 2), 1.25, 1e-12);
    EXPECT_NEAR(one(lam(0, 1, -0.25, true), ConditionId::LamAlpha, 1), 17.0 / 8, 1e-12);
    EXPECT_NEAR(one(ex(0, 1, 0.75), ConditionId::ExpAlpha, 1), 13.0 / 12, 1e-12);
    EXPECT_NEAR(one(ex(0, -1.5, -1), ConditionId::ExpBeta, 4), 25.0 / 16, 1e-12);
    EXPECT_NEAR(one(ex(0, 2, 1), ConditionId::ExpAlpha, 1), 17.0 / 4, 1e-12);
    EXPECT_NEAR(one(ex(0, 2, 1), ConditionId::ExpAlpha, 2), 2.5, 1e-12);
    EXPECT_THROW(solve_ky(ex(0, 2, 1), ConditionId::ExpAlpha, 4), NoRoot);

    const auto two = solve_ky({Family::LambertW, 0.5, -1, -0.25, 0, false, false}, ConditionId::LamAlpha, 1).roots;
    ASSERT_EQ(two.size(), 2u);
    EXPECT_NEAR(two[0], std::sqrt(2 - std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(two[1], std::sqrt(2 + std::sqrt(3.0)), 1e-12);
}

TEST(Elementary, LambertFamilyFormula) {
    for (int n = 2; n <= 20; ++n) {
        const auto r = solve_ky(lam(0, 1, -1), ConditionId::LamAlpha, n).roots;
        ASSERT_EQ(r.size(), 1u);
        EXPECT_NEAR(r[0], 0.5 * (n + 1.0 / n), 1e-10) << n;
    }
}

TEST(Elementary, TwoPositiveRootsWithInteriorMaximum) {
    const PotentialSpec s{Family::LambertW, 0.5, -1, -0.25, 0, false, false};
    for (int n = 1; n <= 20; ++n) {
        const auto r = solve_ky(s, ConditionId::LamAlpha, n).roots;
        ASSERT_EQ(r.size(), 2u) << n;
        for (double k : r) EXPECT_LT(std::abs(condition_value(s, ConditionId::LamAlpha, k) + n), 1e-10);
    }
}

TEST(Elementary, BoundCaseGammaRoots) {
    const PotentialSpec s = ex(0, -1, -1, true, true);
    for (int n = 2; n <= 10; ++n) {
        const auto r = solve_ky(s, ConditionId::ExpGamma1, n).roots;
        ASSERT_FALSE(r.empty()) << n;
        EXPECT_NEAR(r.front(), 0.5 * (n + 1), 1e-10) << n;
    }
    // k = 1 is the open edge of the k-domain.
    EXPECT_DOUBLE_EQ(ky_domain_bound(s, ConditionId::ExpGamma1), 1.0);
}

TEST(Elementary, MatchingN) {
    EXPECT_EQ(matching_n(lam(0, 1, -1), ConditionId::LamAlpha, 1.25).value_or(-1), 2);
    EXPECT_FALSE(matching_n(lam(0, 1, -1), ConditionId::LamAlpha, 1.3).has_value());
    EXPECT_EQ(condition_n_floor(ConditionId::ExpBeta), 1);
    EXPECT_DOUBLE_EQ(condition_target(ConditionId::ExpGamma1, 2), -3.0);
}

TEST(Elementary, ApplicableConditions) {
    const auto a = applicable_conditions(ex(0, 1, 1));
    EXPECT_NE(std::find(a.begin(), a.end(), ConditionId::ExpAlpha), a.end());
    EXPECT_EQ(std::find(a.begin(), a.end(), ConditionId::ExpBeta), a.end());
    EXPECT_TRUE(applicable_conditions(lam(0, 1, 1)).empty());
}

TEST(Elementary, AlphaApproachesZeroFromBelow) {
    // The alpha condition tends to 0 at large k_y; rounding must not admit n = 0.
    const PotentialSpec s = ex(-0.817983, -0.543083, 1.47605);
    EXPECT_LE(condition_range(s, ConditionId::ExpAlpha).sup, 0.0);
    EXPECT_EQ(admissible_n(s, ConditionId::ExpAlpha).lo, 1);
    EXPECT_LT(condition_value(s, ConditionId::ExpAlpha, 1e8), 0.0);
}
