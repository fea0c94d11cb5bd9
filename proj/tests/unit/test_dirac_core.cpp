#include <gtest/gtest.h>

#include <cmath>

#include "dirac_darboux/dirac_core.hpp"
#include "dirac_darboux/errors.hpp"

using namespace dd;

namespace {

const Cx I(0.0, 1.0);

double rel(Cx a, Cx b) { return std::abs(a - b) / std::abs(b); }

std::vector<GridSample> sample(const PotentialSpec& s, const ModeParams& m, double a, double b, double h, bool upper) {
    std::vector<GridSample> g;
    const int n = int(std::lround((b - a) / h)) + 1;
    for (int i = 0; i < n; ++i) {
        const double x = a + (b - a) * i / (n - 1.0);
        const SpinorSample p = spinor(s, m, x);
        g.push_back({x, upper ? p.psi1 : p.psi2});
    }
    return g;
}

}  // namespace

// Lambert step with V1 = -1, where the n = 2 degeneration sits at k_y = 5/4.
TEST(DiracCore, LambertElementaryClosedForm) {
    const PotentialSpec s{Family::LambertW, 0, -1, -1, 0, false, false};
    const ModeParams m{0.0, 1.25};
    for (double x : {-2.0, -0.3, 0.8, 3.0}) {
        const double W = lambert_w0(std::exp(-x));
        const Cx e = std::exp(-1.25 * x);
        const Cx p1 = (50. / 3 + I * (25. / 3)) * e + (10. - I * (10. / 3)) * e / W - (4. / 3 - I) * e / (W * W);
        const Cx p2 = -5. / 3 * std::exp(0.75 * x + 2 * W) * (-I + (2. + 6. * I) * W + (10. + 5. * I) * W * W);
        const SpinorSample sp = spinor(s, m, x);
        EXPECT_LT(rel(sp.psi1, p1), 1e-9) << x;
        EXPECT_LT(rel(sp.psi2, p2), 1e-9) << x;
        EXPECT_TRUE(psi1(s, m, x).terminating);
    }
}

TEST(DiracCore, ExponentialElementaryShape) {
    const PotentialSpec s{Family::InvSqrtExp, 0, -1.5, 1, 0, false, false};
    const ModeParams m{0.0, 2.5};
    const Cx c = spinor(s, m, 0.0).psia / (I * std::sqrt(2.0));
    for (double x : {-2.0, 1.0, 2.5}) {
        const SpinorSample sp = spinor(s, m, x);
        EXPECT_LT(rel(sp.psia, c * I * std::exp(2 * x) * std::sqrt(1 + std::exp(x))), 1e-12) << x;
    }
}

TEST(DiracCore, DerivativesMatchFiniteDifferences) {
    const PotentialSpec specs[] = {{Family::LambertW, 0.2, 0.9, -0.8, 0.3, false, false},
                                   {Family::LambertW, 1, -1, -1, -1, true, true},
                                   {Family::InvSqrtExp, 0.1, -1.2, 0.9, 0.0, false, false},
                                   {Family::InvSqrtExp, 0, -1, -1, 0, true, true}};
    for (const auto& s : specs)
        for (double k : {1.7, 2.6})
            for (double x : {-1.3, 0.6, 1.8}) {
                if (!domain(s).contains(x) || domain(s).endpoint_distance(x) < 0.1) continue;
                const double h = 1e-5;
                const SpinorSample p = spinor(s, {0.0, k}, x);
                const SpinorSample a = spinor(s, {0.0, k}, x + h), b = spinor(s, {0.0, k}, x - h);
                EXPECT_LT(rel(p.psi1_dx, (a.psi1 - b.psi1) / (2 * h)), 1e-7) << x;
                EXPECT_LT(rel(p.psi2_dx, (a.psi2 - b.psi2) / (2 * h)), 1e-7) << x;
            }
}

TEST(DiracCore, FirstOrderSystem) {
    // a' = k a - i(u0-E) b,  b' = -k b - i(u0-E) a
    const PotentialSpec s{Family::InvSqrtExp, 0.4, 0.7, -1.1, 0.2, false, false};
    const ModeParams m{0.3, 1.9};
    for (double x : {-1.0, 0.5, 2.0}) {
        const SpinorSample p = spinor(s, m, x);
        const Cx iu = I * (eval_u0(s, x) - m.E);
        EXPECT_LT(std::abs(p.psia_dx() - (m.ky * p.psia - iu * p.psib)), 1e-12 * std::abs(p.psia_dx()) + 1e-14);
        EXPECT_LT(std::abs(p.psib_dx() - (-m.ky * p.psib - iu * p.psia)), 1e-12 * std::abs(p.psib_dx()) + 1e-14);
    }
}

TEST(DiracCore, SpinorBasisIdentities) {
    const PotentialSpec s{Family::LambertW, 0.5, -1, -0.25, 0, false, false};
    const SpinorSample p = spinor(s, {0.0, 1.3}, 0.4);
    EXPECT_LT(std::abs(p.psia + p.psib - 2.0 * p.psi1), 1e-15 * std::abs(p.psi1));
    EXPECT_LT(std::abs(p.psia - p.psib - 2.0 * p.psi2), 1e-15 * std::abs(p.psi2));
}

TEST(DiracCore, Psi2Linear) {
    const PotentialSpec s{Family::LambertW, 0, 1, -1, 0, false, false};
    const ScalarSolution z = psi2(s, {0.0, 1.25}, 0.5, 0.0, 0.0);
    EXPECT_EQ(z.value, Cx(0.0));
    EXPECT_EQ(z.dx, Cx(0.0));
    EXPECT_THROW(psi2(s, {0.0, 0.0}, 0.5, 1.0, 1.0), ZeroWavenumber);
}

TEST(DiracCore, LambertBoundStateAtOrigin) {
    const PotentialSpec s{Family::LambertW, 1, -1, -1, -1, true, true};
    const ModeParams m{0.0, 0.5};
    const SpinorSample l = spinor(s, m, -1e-8), r = spinor(s, m, 1e-8);
    const double rl = std::norm(l.psi1) + std::norm(l.psi2), rr = std::norm(r.psi1) + std::norm(r.psi2);
    EXPECT_TRUE(std::isfinite(rl));
    EXPECT_NEAR(rl, rr, 1e-12 * rr);
    // Density tail falls like exp(-2 k x).
    const SpinorSample f1 = spinor(s, m, 20.0), f2 = spinor(s, m, 25.0);
    const double d1 = std::norm(f1.psi1) + std::norm(f1.psi2), d2 = std::norm(f2.psi1) + std::norm(f2.psi2);
    EXPECT_LT(d1, 1e-7 * rr);
    EXPECT_NEAR(std::log(d1 / d2) / 5.0, 2 * m.ky, 2e-2);
}

TEST(DiracCore, DecoupledResidual) {
    const PotentialSpec s{Family::LambertW, 0, 1, -1, 0, false, false};
    const ModeParams m{0.0, 1.25};
    EXPECT_LT(sse_residual(s, m, sample(s, m, -1.0, 1.0, 1e-3, true), 1), 1e-5);
    EXPECT_LT(sse_residual(s, m, sample(s, m, -1.0, 1.0, 1e-3, false), -1), 1e-5);
    // Swapping the channel sign breaks the equation.
    EXPECT_GT(sse_residual(s, m, sample(s, m, -1.0, 1.0, 1e-2, true), -1), 1e-3);

    std::vector<GridSample> zero;
    for (int i = 0; i < 11; ++i) zero.push_back({0.1 * i, 0.0});
    EXPECT_EQ(sse_residual(s, m, zero, 1), 0.0);

    const PotentialSpec e{Family::InvSqrtExp, 0, -1, -1, 0, true, true};
    const ModeParams me{0.0, 3.0};
    EXPECT_LT(sse_residual(e, me, sample(e, me, 0.5, 2.0, 1e-3, true), 1), 1e-5);
    EXPECT_LT(sse_residual(e, me, sample(e, me, -2.0, -0.5, 1e-3, false), -1), 1e-5);
}

TEST(DiracCore, ResidualGridErrors) {
    const PotentialSpec s{Family::LambertW, 0, 1, -1, 0, false, false};
    std::vector<GridSample> small(5, GridSample{0.0, 1.0});
    EXPECT_THROW(sse_residual(s, {0, 1}, small, 1), GridError);
    std::vector<GridSample> uneven;
    for (int i = 0; i < 12; ++i) uneven.push_back({i * i * 0.01, 1.0});
    EXPECT_THROW(sse_residual(s, {0, 1}, uneven, 1), GridError);
}

TEST(DiracCore, DomainEnforced) {
    const PotentialSpec s{Family::InvSqrtExp, 1, -1, -1, 0, true, false};
    EXPECT_THROW(psi1(s, {0, 3}, -0.5), DomainError);
}
