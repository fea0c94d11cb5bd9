#include "dirac_darboux/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirac_darboux/errors.hpp"

namespace dd {

namespace {

const Cx kI(0.0, 1.0);

struct Segment {
    double a, b;
    bool a_tail, b_tail;
};

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Decay rate of rho along the tail [inner, outer] from its last tenth.
double tail_rate(const std::function<double(double)>& rho, double inner, double outer) {
    const double w0 = outer - 0.1 * (outer - inner);
    std::vector<double> d, lr;
    for (int i = 0; i <= 40; ++i) {
        const double x = w0 + (outer - w0) * i / 40.0;
        const double r = rho(x);
        if (!(r > 0.0) || !std::isfinite(r)) return std::numeric_limits<double>::quiet_NaN();
        d.push_back(std::abs(x - inner));
        lr.push_back(std::log(r));
    }
    return -fit_slope(d, lr);
}

}  // namespace

OdeRun integrate_linear2(const std::function<Cx(double)>& q, double x0, double x1, Cx f0, Cx df0, double tol) {
    auto rhs = [&](double x, const State2& y) -> State2 { return {y[1], -q(x) * y[0]}; };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol * 1e-6 * std::max(std::abs(f0), std::abs(df0));
    const auto pts = dopri5(rhs, x0, x1, {f0, df0}, opt);
    OdeRun run;
    run.x_start = x0;
    run.x_end = x1;
    run.f0 = f0;
    run.df0 = df0;
    run.tol = tol;
    for (const auto& p : pts) run.samples.push_back({p.x, p.y[0]});
    run.f_end = pts.back().y[0];
    run.df_end = pts.back().y[1];
    return run;
}

OdeRun integrate_sse(const PotentialSpec& spec, const ModeParams& mode, int sign, const OdeSetup& setup) {
    require_in_domain(spec, setup.x_start);
    require_in_domain(spec, setup.x_end);
    if (spec.mirror && (setup.x_start < 0) != (setup.x_end < 0))
        throw DomainError("integration interval crosses the mirror point");
    const SpinorSample s = spinor(spec, mode, setup.x_start);
    const Cx f0 = sign > 0 ? s.psi1 : s.psi2;
    const Cx df0 = sign > 0 ? s.psi1_dx : s.psi2_dx;
    const double k2 = mode.ky * mode.ky;
    auto q = [&](double x) {
        const double u = eval_u0(spec, x) - mode.E;
        const int s_eff = spec.mirror && x < 0 ? -sign : sign;
        return Cx(u * u - k2) + double(s_eff) * kI * eval_u0_dx(spec, x);
    };
    return integrate_linear2(q, setup.x_start, setup.x_end, f0, df0, setup.tol);
}

double ode_endpoint_error(const PotentialSpec& spec, const ModeParams& mode, int sign, const OdeSetup& setup) {
    const OdeRun run = integrate_sse(spec, mode, sign, setup);
    const SpinorSample s = spinor(spec, mode, setup.x_end);
    const Cx ref = sign > 0 ? s.psi1 : s.psi2;
    return std::abs(run.f_end - ref) / std::abs(ref);
}

DensityReport density_report(const std::function<double(double)>& rho, const Domain& d, const DensitySetup& setup) {
    const double cut = setup.cutoff;
    const double guard = 1e-9;
    std::vector<Segment> segs;
    if (d.mirror) {
        const double a = std::max(d.lo, 0.0) + (d.lo >= 0.0 ? guard : 0.0);
        const double b = std::min(d.hi, cut);
        const bool tail = d.hi > cut;
        if (!(b > a)) throw QuadratureError("empty integration range");
        segs.push_back({-b, -a, tail, false});
        segs.push_back({a, b, false, tail});
    } else {
        const double a = std::isfinite(d.lo) ? std::max(d.lo + guard, -cut) : -cut;
        const double b = std::isfinite(d.hi) ? std::min(d.hi - guard, cut) : cut;
        if (!(b > a)) throw QuadratureError("empty integration range");
        segs.push_back({a, b, d.lo < -cut, d.hi > cut});
    }

    // Locate the peak and truncate tails where rho drops below floor * peak.
    constexpr int kProbe = 2001;
    double peak = 0.0;
    std::vector<std::vector<double>> probe(segs.size());
    for (std::size_t s = 0; s < segs.size(); ++s) {
        probe[s].resize(kProbe);
        for (int i = 0; i < kProbe; ++i) {
            const double x = segs[s].a + (segs[s].b - segs[s].a) * i / (kProbe - 1.0);
            probe[s][i] = rho(x);
            if (std::isfinite(probe[s][i])) peak = std::max(peak, probe[s][i]);
        }
    }
    if (!(peak > 0.0)) throw QuadratureError("density vanishes identically");

    DensityReport rep;
    double min_rate = std::numeric_limits<double>::infinity();
    bool tail_failed = false;
    std::vector<Segment> kept;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        Segment g = segs[s];
        const auto& pv = probe[s];
        const int ip = int(std::max_element(pv.begin(), pv.end()) - pv.begin());
        auto xat = [&](int i) { return segs[s].a + (segs[s].b - segs[s].a) * i / (kProbe - 1.0); };
        if (g.b_tail) {
            for (int i = ip; i < kProbe; ++i)
                if (pv[i] < setup.floor * peak) {
                    g.b = xat(i);
                    break;
                }
            double r = tail_rate(rho, xat(ip), g.b);
            if (std::isnan(r)) tail_failed = true; else min_rate = std::min(min_rate, r);
        }
        if (g.a_tail) {
            for (int i = ip; i >= 0; --i)
                if (pv[i] < setup.floor * peak) {
                    g.a = xat(i);
                    break;
                }
            double r = tail_rate(rho, xat(ip), g.a);
            if (std::isnan(r)) tail_failed = true; else min_rate = std::min(min_rate, r);
        }
        kept.push_back(g);
    }

    auto crho = [&](double x) { return Cx(rho(x)); };
    double norm = 0.0;
    for (const auto& g : kept) {
        constexpr int kPanels = 32;
        for (int p = 0; p < kPanels; ++p) {
            const double a = g.a + (g.b - g.a) * p / kPanels, b = g.a + (g.b - g.a) * (p + 1) / kPanels;
            norm += integrate_gk(crho, a, b, 1e-15 * peak * (b - a), 1e-12, 4000).value.real();
        }
    }
    if (!(norm > 0.0) || !std::isfinite(norm)) throw QuadratureError("density norm is not positive and finite");
    rep.norm = norm;
    rep.tail_decay_rate = tail_failed ? std::numeric_limits<double>::quiet_NaN() : min_rate;
    rep.integrable = !tail_failed && min_rate > 0.0;

    if (d.mirror) {
        rep.has_origin = true;
        const double x0 = std::max(d.lo, 0.0) + setup.origin_offset;
        const double r = rho(x0), l = rho(-x0);
        rep.value_at_origin = 0.5 * (r + l) / norm;
        rep.origin_jump = std::abs(r - l) / norm;
        const double far = rho(std::max(d.lo, 0.0) + 1e-4);
        rep.origin_finite = std::isfinite(r) && std::isfinite(l) && r < 10.0 * far + 1e-300;
    }

    for (const auto& g : kept)
        for (int i = 0; i < setup.n_grid; ++i) {
            const double x = g.a + (g.b - g.a) * i / (setup.n_grid - 1.0);
            rep.xs.push_back(x);
            rep.density.push_back(rho(x) / norm);
        }
    return rep;
}

DensityReport density_report(const PotentialSpec& spec, const ModeParams& mode, const DensitySetup& setup) {
    auto rho = [&](double x) {
        const SpinorSample s = spinor(spec, mode, x);
        return std::norm(s.psi1) + std::norm(s.psi2);
    };
    return density_report(rho, domain(spec), setup);
}

DensityReport density_report(const PotentialSpec& spec, double E, const TransformSpec& t, const ModeParams& mode,
                             const DensitySetup& setup) {
    auto rho = [&](double x) {
        const auto [a, b] = transformed_spinor(spec, E, t, mode, x);
        return std::norm(a) + std::norm(b);
    };
    return density_report(rho, domain(spec), setup);
}

RefinementStudy residual_refinement(const PotentialSpec& spec, const ModeParams& mode, int sign, double x_lo,
                                    double x_hi, const std::vector<double>& hs) {
    RefinementStudy st;
    for (double h : hs) {
        const int n = int(std::lround((x_hi - x_lo) / h)) + 1;
        const double hh = (x_hi - x_lo) / (n - 1);
        std::vector<GridSample> f;
        for (int i = 0; i < n; ++i) {
            const double x = x_lo + hh * i;
            const SpinorSample s = spinor(spec, mode, x);
            f.push_back({x, sign > 0 ? s.psi1 : s.psi2});
        }
        st.h.push_back(hh);
        st.residual.push_back(sse_residual(spec, mode, f, sign));
    }
    st.order = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < st.h.size(); ++i)
        st.order = std::min(st.order, std::log(st.residual[i - 1] / st.residual[i]) / std::log(st.h[i - 1] / st.h[i]));
    return st;
}

}  // namespace dd
