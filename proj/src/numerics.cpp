#include "dirac_darboux/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "dirac_darboux/errors.hpp"

namespace dd {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Cx value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<Cx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Cx fc = f(c);
    Cx kron = fc * kWgk[7];
    Cx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        Cx s = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadResult integrate_gk(const std::function<Cx(double)>& f, double a, double b, double abs_tol, double rel_tol,
                        int max_intervals) {
    if (a == b) return {0.0, 0.0, 0};
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    heap.push(first);
    Cx total = first.value;
    double err = first.error;
    int count = 1;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= max_intervals) throw QuadratureError("subdivision limit reached");
        Panel worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) throw QuadratureError("interval too small to subdivide");
        Panel l = gk15(f, worst.a, m), r = gk15(f, m, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // Re-sum in a fixed order to undo drift from the running updates.
    std::vector<Panel> panels;
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    total = 0.0;
    err = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        err += p.error;
    }
    if (!std::isfinite(std::abs(total))) throw QuadratureError("non-finite integrand");
    return {total, err, count};
}

std::vector<OdePoint> dopri5(const std::function<State2(double, const State2&)>& rhs, double x0, double x1,
                             const State2& y0, const OdeOptions& opt) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    std::vector<OdePoint> out{{x0, y0}};
    const double span = x1 - x0;
    if (span == 0.0) return out;
    const double dir = span > 0 ? 1.0 : -1.0;
    double h = opt.h0 > 0 ? opt.h0 * dir : 1e-3 * span;
    double x = x0;
    State2 y = y0;
    State2 k1 = rhs(x, y);

    auto axpy = [](const State2& y, double h, std::initializer_list<std::pair<double, const State2*>> terms) {
        State2 r = y;
        for (auto [c, k] : terms)
            for (int i = 0; i < 2; ++i) r[i] += h * c * (*k)[i];
        return r;
    };

    for (int step = 0; step < opt.max_steps; ++step) {
        if ((x + h - x1) * dir > 0) h = x1 - x;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(x))) throw StepFailure("step size underflow");
        State2 k2 = rhs(x + c2 * h, axpy(y, h, {{a21, &k1}}));
        State2 k3 = rhs(x + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        State2 k4 = rhs(x + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        State2 k5 = rhs(x + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        State2 k6 = rhs(x + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        State2 yn = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        State2 k7 = rhs(x + h, yn);
        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            Cx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(yn[i]));
            err = std::max(err, std::abs(e) / sc);
        }
        if (!std::isfinite(err)) throw StepFailure("non-finite state");
        if (err <= 1.0) {
            x += h;
            y = yn;
            k1 = k7;
            out.push_back({x, y});
            if ((x - x1) * dir >= 0) return out;
        }
        double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= fac;
    }
    throw StepFailure("step limit reached");
}

double bisect(const std::function<double(double)>& f, double a, double b, double xtol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw NoRoot("bisection interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        double m = 0.5 * (a + b);
        if (m <= std::min(a, b) || m >= std::max(a, b) || std::abs(b - a) <= xtol) return m;
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace dd
