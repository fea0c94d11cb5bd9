#include "dirac_darboux/darboux.hpp"

#include <cmath>

#include "dirac_darboux/elementary.hpp"
#include "dirac_darboux/errors.hpp"
#include "dirac_darboux/numerics.hpp"

namespace dd {

namespace {

const Cx kI(0.0, 1.0);

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

// u' u^{-1}
Mat2 log_derivative(const TransformFrame& f) {
    const Mat2 inv = {{{f.u[1][1] / f.det_u, -f.u[0][1] / f.det_u}, {-f.u[1][0] / f.det_u, f.u[0][0] / f.det_u}}};
    return mul(f.u_dx, inv);
}

double base_point(const PotentialSpec& spec, double x) { return spec.mirror ? std::abs(x) : x; }

}  // namespace

TransformSpec::TransformSpec(double l0, double l1) : lambda0(l0), lambda1(l1) {
    if (l0 == l1) throw ConfigError("lambda0 and lambda1 must differ");
}

TransformFrame frame(const PotentialSpec& spec, double E, const TransformSpec& t, double x) {
    if (t.lambda0 == t.lambda1) throw ConfigError("lambda0 and lambda1 must differ");
    TransformFrame f;
    f.x = x;
    const double lam[2] = {t.lambda0, t.lambda1};
    for (int j = 0; j < 2; ++j) {
        SpinorSample s = spinor(spec, {E, lam[j]}, x);
        f.u[0][j] = s.psia;
        f.u[1][j] = s.psib;
        f.u_dx[0][j] = s.psia_dx();
        f.u_dx[1][j] = s.psib_dx();
    }
    const Mat2& u = f.u;
    const Mat2& d = f.u_dx;
    f.det_u = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    f.scale = std::abs(u[0][0] * u[1][1]) + std::abs(u[0][1] * u[1][0]);
    if (!(std::abs(f.det_u) > 1e-12 * f.scale))
        throw SingularFrame("det u vanishes at x = " + std::to_string(x));
    f.wr_lower = wronskian(u[1][0], d[1][0], u[1][1], d[1][1]);
    f.wr_upper = wronskian(u[0][1], d[0][1], u[0][0], d[0][0]);
    return f;
}

PotentialMatrixSample transformed_potential(const PotentialSpec& spec, double E, const TransformSpec& t,
                                            double x) {
    const double xb = base_point(spec, x);
    const TransformFrame f = frame(spec, E, t, xb);
    const double u0 = eval_u0(spec, xb);
    PotentialMatrixSample p;
    p.x = x;
    p.m11 = u0 + 2.0 * kI * f.wr_lower / f.det_u;
    p.m22 = u0 + 2.0 * kI * f.wr_upper / f.det_u;

    // Full -sigma2 [sigma3, u'u^{-1}] to expose any off-diagonal leakage.
    const Mat2 M = log_derivative(f);
    const Mat2 s2 = {{{0.0, -kI}, {kI, 0.0}}};
    const Mat2 comm = {{{0.0, 2.0 * M[0][1]}, {-2.0 * M[1][0], 0.0}}};
    Mat2 v = mul(s2, comm);
    p.offdiag_max = std::max(std::abs(v[0][1]), std::abs(v[1][0]));

    const double mag = std::max({1.0, std::abs(p.m11), std::abs(p.m22)});
    p.imag_max = std::max(std::abs(p.m11.imag()), std::abs(p.m22.imag())) / mag;
    p.diag_gap = std::abs(p.m11 - p.m22);
    return p;
}

std::pair<Cx, Cx> transformed_spinor(const PotentialSpec& spec, double E, const TransformSpec& t,
                                     const ModeParams& mode, double x) {
    const double xb = base_point(spec, x);
    const TransformFrame f = frame(spec, E, t, xb);
    const SpinorSample s = spinor(spec, mode, xb);
    const Mat2 M = log_derivative(f);
    const Cx pa = s.psia_dx() - (M[0][0] * s.psia + M[0][1] * s.psib);
    const Cx pb = s.psib_dx() - (M[1][0] * s.psia + M[1][1] * s.psib);
    return {pa, pb};
}

ConditionReport check_conditions(const PotentialSpec& spec, const TransformSpec& t) {
    ConditionReport r;
    const double l0 = t.lambda0, l1 = t.lambda1;
    const double a0 = std::abs(l0), a1 = std::abs(l1);

    if (spec.family == Family::LambertW) {
        const double b = std::abs(spec.V0 + spec.V1);
        bool ok = a0 > b && a1 > b;
        r.reality.reason = ok ? "|lambda_j| > |V0+V1|" : "some |lambda_j| <= |V0+V1|";
        if (ok && spec.singular) {
            ok = spec.x1 - 0.5 < spec.sigma && spec.sigma < 0.0;
            r.reality.reason += ok ? "; x1 - 1/2 < sigma < 0" : "; x1 - 1/2 < sigma < 0 fails";
        }
        r.reality.holds = ok;
    } else if (!spec.singular) {
        auto solves = [&](double l) {
            return matching_n(spec, ConditionId::ExpAlpha, l).has_value() ||
                   matching_n(spec, ConditionId::ExpBeta, l).has_value();
        };
        r.reality.holds = solves(l0) && solves(l1);
        r.reality.reason = r.reality.holds ? "both lambdas solve the alpha or beta condition"
                                           : "a lambda solves neither the alpha nor the beta condition";
    } else {
        const double b = std::abs(spec.V0) + std::abs(spec.V1);
        r.reality.holds = a0 > b && a1 > b && spec.sigma < 0.0;
        r.reality.reason = r.reality.holds ? "|lambda_j| > |V0|+|V1| and sigma < 0"
                                           : "needs |lambda_j| > |V0|+|V1| and sigma < 0";
    }

    r.diagonal.holds = std::abs(l0 + l1) <= 1e-12 * std::max(1.0, a0);
    r.diagonal.reason = r.diagonal.holds ? "lambda0 = -lambda1" : "lambda0 != -lambda1";

    auto elementary_at = [&](double l) {
        if (spec.family == Family::LambertW) return matching_n(spec, ConditionId::LamAlpha, l).has_value();
        for (auto c : {ConditionId::ExpAlpha, ConditionId::ExpBeta, ConditionId::ExpGamma1, ConditionId::ExpGamma2})
            if (matching_n(spec, c, l)) return true;
        return false;
    };
    r.elementary.holds = elementary_at(l0) && elementary_at(l1);
    r.elementary.reason = r.elementary.holds ? "both lambdas solve a degeneration condition"
                                             : "a lambda solves no degeneration condition";
    return r;
}

Cx potential_diff_integral(const PotentialSpec& spec, double E, const TransformSpec& t, double x_lo, double x,
                           int n_quad) {
    if (std::abs(t.lambda0 + t.lambda1) > 1e-12 * std::max(1.0, std::abs(t.lambda0)))
        throw DomainError("integral form needs lambda0 = -lambda1");
    const double a = base_point(spec, x_lo), b = base_point(spec, x);
    require_in_domain(spec, a);
    require_in_domain(spec, b);
    auto g = [&](double s) { return eval_u0_dx(spec, s) * frame(spec, E, t, s).det_u; };
    const QuadResult q = integrate_gk(g, a, b, 1e-13, 1e-12, n_quad);
    const TransformFrame fa = frame(spec, E, t, a);
    const Cx anchor = transformed_potential(spec, E, t, a).m11 - eval_u0(spec, a);
    const Cx C = -0.5 * fa.det_u * anchor;
    return -2.0 / frame(spec, E, t, b).det_u * (q.value + C);
}

}  // namespace dd
