#include "dirac_darboux/dirac_core.hpp"

#include <cmath>

#include "dirac_darboux/errors.hpp"

namespace dd {

namespace {

const Cx kI(0.0, 1.0);

// Value and d/dz of the upper channel as a function of the inner variable.
struct ZSolution {
    Cx value;
    Cx dz;
    bool terminating;
};

ZSolution lambert_z(const PotentialSpec& spec, const ModeParams& mode, double z) {
    const double k2 = mode.ky * mode.ky;
    const double e0 = mode.E - spec.V0;
    const double e1 = mode.E - spec.V0 - spec.V1;
    const double s = spec.sigma;
    const Cx K0 = csqrt(k2 - e0 * e0);
    const Cx K1 = csqrt(k2 - e1 * e1);
    const Cx gamma = 2.0 * s * K1;
    const Cx delta = 2.0 * s * (K1 - kI * spec.V1);
    const Cx s0 = 2.0 * s * K0;
    const bool pole = is_nonpositive_integer(gamma);

    Cx G, dG;
    bool term = false;
    if (std::abs(K0) < 1e-10) {
        // alpha -> inf, s0 -> 0 with alpha*s0 fixed: 1F1 degenerates to 0F1.
        const Cx eta = s * s * (K1 * K1 + spec.V1 * spec.V1);
        const Cx xi = eta * z;
        if (pole) {
            Cx f0 = hyp0f1_reg(gamma, xi), f1 = hyp0f1_reg(gamma + 1.0, xi), f2 = hyp0f1_reg(gamma + 2.0, xi);
            G = -0.5 * delta * f0 + eta * f1;
            dG = -0.5 * delta * eta * f1 + eta * eta * f2;
        } else {
            Cx f0 = hyp0f1(gamma, xi), f1 = hyp0f1(gamma + 1.0, xi), f2 = hyp0f1(gamma + 2.0, xi);
            Cx c1 = eta / gamma;
            G = -0.5 * delta * f0 + c1 * f1;
            dG = -0.5 * delta * c1 * f1 + c1 * eta / (gamma + 1.0) * f2;
        }
        Cx P = cpow(z, 0.5 * gamma);
        return {P * G, P * (0.5 * gamma / z * G + dG), false};
    }

    const Cx alpha = s * ((K0 + K1) * (K0 + K1) + spec.V1 * spec.V1) / (2.0 * K0);
    const Cx A = -0.5 * (delta + s0);
    const Cx xi = s0 * z;
    if (pole) {
        SeriesValue m1 = hyp1f1_reg_eval(alpha, gamma, xi);
        SeriesValue m2 = hyp1f1_reg_eval(alpha + 1.0, gamma + 1.0, xi);
        Cx m3 = alpha * (alpha + 1.0) != 0.0 ? hyp1f1_reg(alpha + 2.0, gamma + 2.0, xi) : Cx(0.0);
        G = A * m1.value + s0 * alpha * m2.value;
        dG = s0 * (A * alpha * m2.value + s0 * alpha * (alpha + 1.0) * m3);
        term = m1.terminating() && m2.terminating();
    } else {
        SeriesValue m1 = hyp1f1_eval(alpha, gamma, xi);
        const Cx c2 = s0 * alpha / gamma;
        SeriesValue m2 = alpha != 0.0 ? hyp1f1_eval(alpha + 1.0, gamma + 1.0, xi)
                                      : SeriesValue{0.0, SeriesPath::Terminating, 0};
        const Cx c3 = alpha * (alpha + 1.0) / (gamma * (gamma + 1.0));
        Cx m3 = c3 != 0.0 ? hyp1f1(alpha + 2.0, gamma + 2.0, xi) : Cx(0.0);
        G = A * m1.value + c2 * m2.value;
        dG = s0 * (A * alpha / gamma * m2.value + s0 * c3 * m3);
        term = m1.terminating() && m2.terminating();
    }
    const Cx P = cpow(z, 0.5 * gamma) * std::exp(-0.5 * s0 * z);
    return {P * G, P * ((0.5 * gamma / z - 0.5 * s0) * G + dG), term};
}

ZSolution exp_z(const PotentialSpec& spec, const ModeParams& mode, double z, double zm1) {
    const ExpAbbrevs ab = exp_abbrevs(spec, mode);
    const Cx al = ab.alpha, be = ab.beta, ga = ab.gamma;
    const Cx denom = 2.0 * ga - 2.0;
    if (std::abs(denom) < 1e-14) throw SingularityError("alpha1 = 0 in the exponential solution");
    const Cx w = 0.5 * (z + 1.0);
    const Cx omw = -0.5 * zm1;

    const Cx C = (ab.q + 1.0 - al + (be + 1.0 - al) * z) / denom;
    const Cx dC = (be + 1.0 - al) / denom;
    SeriesValue f1 = hyp2f1_eval(al, be + 1.0, ga, w, {}, &omw);
    SeriesValue f2 = hyp2f1_eval(al - 1.0, be + 1.0, ga - 1.0, w, {}, &omw);
    const Cx c1 = 0.5 * al * (be + 1.0) / ga;
    const Cx c2 = 0.5 * (al - 1.0) * (be + 1.0) / (ga - 1.0);
    const Cx df1 = c1 != 0.0 ? c1 * hyp2f1_eval(al + 1.0, be + 2.0, ga + 1.0, w, {}, &omw).value : Cx(0.0);
    const Cx df2 = c2 != 0.0 ? c2 * hyp2f1_eval(al, be + 2.0, ga, w, {}, &omw).value : Cx(0.0);

    const Cx H = C * f1.value + f2.value;
    const Cx dH = dC * f1.value + C * df1 + df2;
    const Cx P = cpow(z + 1.0, ab.alpha1) * cpow(Cx(zm1), ab.alpha2);
    const Cx logd = ab.alpha1 / (z + 1.0) + ab.alpha2 / zm1;
    return {P * H, P * (H * logd + dH), f1.terminating() && f2.terminating()};
}

}  // namespace

ScalarSolution psi1(const PotentialSpec& spec, const ModeParams& mode, double x) {
    require_in_domain(spec, x);
    const double xt = spec.mirror ? std::abs(x) : x;
    const InnerVar iv = inner_variable(spec, xt);
    ZSolution zs = spec.family == Family::LambertW ? lambert_z(spec, mode, iv.z) : exp_z(spec, mode, iv.z, iv.zm1);
    Cx dx = zs.dz * iv.dz;
    if (spec.mirror && x < 0.0) dx = -dx;
    return {zs.value, dx, zs.terminating};
}

ScalarSolution psi2(const PotentialSpec& spec, const ModeParams& mode, double x, Cx psi1_val, Cx psi1_dx) {
    if (mode.ky == 0.0) throw ZeroWavenumber("psi2 needs k_y != 0");
    const bool flip = spec.mirror && x < 0.0;
    const Cx d1 = flip ? -psi1_dx : psi1_dx;
    const Cx iu = kI * (eval_u0(spec, x) - mode.E);
    const Cx v = (d1 + iu * psi1_val) / mode.ky;
    Cx dv = mode.ky * psi1_val + iu * v;
    return {v, flip ? -dv : dv, false};
}

SpinorSample spinor(const PotentialSpec& spec, const ModeParams& mode, double x) {
    ScalarSolution p1 = psi1(spec, mode, x);
    ScalarSolution p2 = psi2(spec, mode, x, p1.value, p1.dx);
    SpinorSample s;
    s.x = x;
    s.psi1 = p1.value;
    s.psi1_dx = p1.dx;
    s.psi2 = p2.value;
    s.psi2_dx = p2.dx;
    s.psia = s.psi1 + s.psi2;
    s.psib = s.psi1 - s.psi2;
    return s;
}

double sse_residual(const PotentialSpec& spec, const ModeParams& mode, const std::vector<GridSample>& f,
                    int sign) {
    const std::size_t n = f.size();
    if (n < 9) throw GridError("need at least 5 interior points");
    const double h = (f.back().x - f.front().x) / double(n - 1);
    if (!(h > 0.0)) throw GridError("grid must be increasing");
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(f[i].x - f[i - 1].x - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw GridError("grid is not uniform");
    const Domain d = domain(spec);
    for (const auto& p : f)
        if (!d.contains(p.x) || d.endpoint_distance(p.x) < 1e-10) throw GridError("grid leaves the domain");

    const double k2 = mode.ky * mode.ky;
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double x = f[i].x;
        const Cx fpp = (-f[i - 2].f + 16.0 * f[i - 1].f - 30.0 * f[i].f + 16.0 * f[i + 1].f - f[i + 2].f) /
                       (12.0 * h * h);
        const double u = eval_u0(spec, x) - mode.E;
        const int s_eff = spec.mirror && x < 0.0 ? -sign : sign;
        const Cx coef = u * u - k2 + double(s_eff) * kI * eval_u0_dx(spec, x);
        worst = std::max(worst, std::abs(fpp + coef * f[i].f) / std::max(1.0, std::abs(f[i].f)));
    }
    return worst;
}

}  // namespace dd
