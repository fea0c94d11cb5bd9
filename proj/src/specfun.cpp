#include "dirac_darboux/specfun.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "dirac_darboux/errors.hpp"

namespace dd {

namespace {

constexpr double kInvE = 0.36787944117144233;
constexpr double kPi = 3.14159265358979323846;

// Kill a negative zero imaginary part so that the principal branch is taken
// from above the cut.
Cx upper(Cx t) { return t.imag() == 0.0 ? Cx(t.real(), 0.0) : t; }

std::string fmt_cx(Cx v) {
    return "(" + std::to_string(v.real()) + "," + std::to_string(v.imag()) + ")";
}

// Sums t0 + t1 + ... with t_{n+1} = t_n * ratio(n).
// r_floor is a lower bound for the asymptotic |ratio| (|z| for 2F1, 0 for 1F1/0F1);
// when it is zero the ratio must also be non-increasing before we trust a tail bound.
template <class Ratio>
SeriesValue sum_series(Cx t, int n0, Ratio ratio, double r_floor, const SeriesControl& ctl,
                       SeriesPath path, const char* who) {
    Cx sum = t;
    double prev_r = std::numeric_limits<double>::infinity();
    int passes = 0;
    for (int n = n0, k = 0; k < ctl.max_terms; ++n, ++k) {
        Cx r = ratio(n);
        t *= r;
        sum += t;
        if (t == 0.0) return {sum, path, k + 1};
        if (!std::isfinite(std::abs(sum))) throw NoConvergence(std::string(who) + ": overflow");
        double ra = std::abs(r);
        double rr = std::max(ra, r_floor);
        bool settled = r_floor > 0.0 || ra <= prev_r;
        prev_r = ra;
        if (rr < 1.0 && settled && k >= 2) {
            double tail = std::abs(t) * rr / (1.0 - rr);
            if (tail <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(sum))) {
                if (++passes >= 2) return {sum, path, k + 1};
            } else {
                passes = 0;
            }
        } else {
            passes = 0;
        }
    }
    throw NoConvergence(std::string(who) + ": term limit exceeded");
}

SeriesValue polynomial_sum(Cx t, int degree, auto ratio, SeriesPath path) {
    Cx sum = t;
    for (int n = 0; n < degree; ++n) {
        t *= ratio(n);
        sum += t;
    }
    return {sum, path, degree + 1};
}

// Halley step for g(w) = log(-w) + w - s on (-1, 0).
double negexp_halley(double w, double s) {
    for (int it = 0; it < 60; ++it) {
        double g = std::log(-w) + w - s;
        double g1 = (1.0 + w) / w;
        double g2 = -1.0 / (w * w);
        double step = g / g1 / (1.0 - 0.5 * g * g2 / (g1 * g1));
        double wn = w - step;
        if (wn >= 0.0) wn = 0.5 * w;
        if (wn <= -1.0) wn = 0.5 * (w - 1.0);
        if (std::abs(wn - w) <= 4e-16 * std::abs(wn)) return wn;
        w = wn;
    }
    return w;
}

double branch_series(double p) {
    // W0 near -1/e in powers of p = sqrt(2(e t + 1)).
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 +
           p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

}  // namespace

bool is_nonpositive_integer(Cx v, int* m) {
    if (std::abs(v.imag()) >= 1e-9) return false;
    double r = std::round(v.real());
    if (r > 0.0 || std::abs(v.real() - r) >= 1e-9) return false;
    if (m) *m = static_cast<int>(-r);
    return true;
}

double lambert_w0_negexp(double s) {
    if (s > -1.0 + 1e-15) {
        if (s <= -1.0 + 1e-12) return -1.0;
        throw DomainError("lambert_w0 argument below -1/e");
    }
    double q = -std::expm1(s + 1.0);  // e*t + 1 for t = -exp(s)
    double p = std::sqrt(2.0 * q);
    if (p < 1e-4) return branch_series(p);
    double w;
    if (p < 0.6) {
        w = branch_series(p);
    } else if (s < -3.0) {
        double t = -std::exp(s);
        w = t * (1.0 - t);
    } else {
        double t = -std::exp(s);
        double l = std::log1p(t);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
        if (!(w > -1.0 && w < 0.0)) w = branch_series(p);
    }
    return negexp_halley(w, s);
}

double lambert_w0_exp(double s) {
    // w + log(w) = s, w > 0.
    double w;
    if (s > 2.0) {
        double l2 = std::log(s);
        w = s - l2 + l2 / s;
    } else {
        double t = std::exp(s);
        double l = std::log1p(t);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
    }
    for (int it = 0; it < 60; ++it) {
        double g = w + std::log(w) - s;
        double g1 = 1.0 + 1.0 / w;
        double g2 = -1.0 / (w * w);
        double wn = w - g / g1 / (1.0 - 0.5 * g * g2 / (g1 * g1));
        if (wn <= 0.0) wn = 0.5 * w;
        if (std::abs(wn - w) <= 4e-16 * wn) return wn;
        w = wn;
    }
    return w;
}

double lambert_w0(double t) {
    if (!std::isfinite(t)) throw DomainError("lambert_w0 argument is not finite");
    if (t == 0.0) return 0.0;
    if (t < 0.0) {
        if (t < -kInvE) {
            if (t >= -kInvE * (1.0 + 1e-14)) return -1.0;
            throw DomainError("lambert_w0 argument below -1/e");
        }
        double q = std::fma(2.718281828459045, t, 1.0);
        if (q <= 0.0) return -1.0;
        double p = std::sqrt(2.0 * q);
        if (p < 1e-4) return branch_series(p);
        return lambert_w0_negexp(std::log(-t));
    }
    if (t < 1e-8) return t * (1.0 - t * (1.0 - 1.5 * t));
    return lambert_w0_exp(std::log(t));
}

double lambert_w0_dx(double t, double w) {
    if (std::abs(1.0 + w) < 1e-14) throw SingularityError("W0 derivative at the branch point");
    if (t == 0.0) return 1.0;
    return w / (t * (1.0 + w));
}

Cx csqrt(Cx t) { return std::sqrt(upper(t)); }

Cx cpow(Cx t, Cx p) {
    if (t == 0.0) {
        if (p.real() > 0.0) return 0.0;
        throw DomainError("cpow of zero with nonpositive exponent");
    }
    return std::exp(p * std::log(upper(t)));
}

Cx cgamma(Cx z) {
    static constexpr std::array<double, 9> g = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        int m;
        if (is_nonpositive_integer(z, &m) && z == Cx(-m, 0.0))
            throw PoleError("gamma at a nonpositive integer");
        return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
    }
    z -= 1.0;
    Cx x = g[0];
    for (int i = 1; i < 9; ++i) x += g[i] / (z + double(i));
    Cx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

SeriesValue hyp1f1_eval(Cx a, Cx c, Cx z, const SeriesControl& ctl) {
    if (is_nonpositive_integer(c)) throw PoleError("1F1 with c = " + fmt_cx(c));
    int m;
    auto ratio = [&](Cx aa) {
        return [aa, c, z](int n) { return (aa + double(n)) * z / ((c + double(n)) * double(n + 1)); };
    };
    if (is_nonpositive_integer(a, &m)) {
        Cx ai(-m, 0.0);
        return polynomial_sum(Cx(1.0), m, ratio(ai), SeriesPath::Terminating);
    }
    if (z.real() < -15.0) {
        Cx ak = c - a;
        auto r2 = [ak, c, mz = -z](int n) {
            return (ak + double(n)) * mz / ((c + double(n)) * double(n + 1));
        };
        SeriesValue s = is_nonpositive_integer(ak, &m)
                            ? polynomial_sum(Cx(1.0), m, r2, SeriesPath::Kummer)
                            : sum_series(Cx(1.0), 0, r2, 0.0, ctl, SeriesPath::Kummer, "1F1");
        s.value *= std::exp(z);
        s.path = SeriesPath::Kummer;
        return s;
    }
    return sum_series(Cx(1.0), 0, ratio(a), 0.0, ctl, SeriesPath::Direct, "1F1");
}

Cx hyp1f1(Cx a, Cx c, Cx z, const SeriesControl& ctl) { return hyp1f1_eval(a, c, z, ctl).value; }

Cx hyp1f1_dz(Cx a, Cx c, Cx z, const SeriesControl& ctl) {
    if (is_nonpositive_integer(c)) throw PoleError("1F1 derivative with c = " + fmt_cx(c));
    if (a == 0.0) return 0.0;
    return a / c * hyp1f1(a + 1.0, c + 1.0, z, ctl);
}

namespace {

// Regularized 1F1 sum when c = -m exactly; terms with c + n <= 0 vanish.
SeriesValue reg1f1_pole(Cx a, int m, Cx z, const SeriesControl& ctl, SeriesPath path) {
    Cx t = 1.0;
    for (int n = 0; n <= m; ++n) t *= (a + double(n)) * z / double(n + 1);
    if (t == 0.0) return {0.0, SeriesPath::Terminating, m + 1};
    Cx c(-m, 0.0);
    auto ratio = [a, c, z](int n) { return (a + double(n)) * z / ((c + double(n)) * double(n + 1)); };
    int ma;
    if (is_nonpositive_integer(a, &ma)) {
        Cx ai(-ma, 0.0);
        auto ri = [ai, c, z](int n) { return (ai + double(n)) * z / ((c + double(n)) * double(n + 1)); };
        return polynomial_sum(t, ma - m - 1, [&](int k) { return ri(m + 1 + k); }, SeriesPath::Terminating);
    }
    return sum_series(t, m + 1, ratio, 0.0, ctl, path, "regularized 1F1");
}

}  // namespace

SeriesValue hyp1f1_reg_eval(Cx a, Cx c, Cx z, const SeriesControl& ctl) {
    int m;
    if (!is_nonpositive_integer(c, &m)) {
        SeriesValue s = hyp1f1_eval(a, c, z, ctl);
        s.value /= cgamma(c);
        return s;
    }
    int ma;
    bool a_term = is_nonpositive_integer(a, &ma);
    if (z.real() < -15.0 && !a_term) {
        SeriesValue s = reg1f1_pole(c - a, m, -z, ctl, SeriesPath::Kummer);
        s.value *= std::exp(z);
        if (!s.terminating()) s.path = SeriesPath::Kummer;
        return s;
    }
    return reg1f1_pole(a, m, z, ctl, SeriesPath::Direct);
}

Cx hyp1f1_reg(Cx a, Cx c, Cx z, const SeriesControl& ctl) { return hyp1f1_reg_eval(a, c, z, ctl).value; }

Cx hyp0f1(Cx c, Cx z, const SeriesControl& ctl) {
    if (is_nonpositive_integer(c)) throw PoleError("0F1 with c = " + fmt_cx(c));
    auto ratio = [c, z](int n) { return z / ((c + double(n)) * double(n + 1)); };
    return sum_series(Cx(1.0), 0, ratio, 0.0, ctl, SeriesPath::Direct, "0F1").value;
}

Cx hyp0f1_reg(Cx c, Cx z, const SeriesControl& ctl) {
    int m;
    if (!is_nonpositive_integer(c, &m)) return hyp0f1(c, z, ctl) / cgamma(c);
    Cx t = 1.0;
    for (int n = 0; n <= m; ++n) t *= z / double(n + 1);
    if (t == 0.0) return 0.0;
    Cx cc(-m, 0.0);
    auto ratio = [cc, z](int n) { return z / ((cc + double(n)) * double(n + 1)); };
    return sum_series(t, m + 1, ratio, 0.0, ctl, SeriesPath::Direct, "regularized 0F1").value;
}

namespace {

// Value at t = delta of a function known at t = +-h, +-2h (cubic Lagrange);
// used where a connection coefficient has a removable pole at t = 0.
Cx through_pole(const std::function<Cx(double)>& f, double delta, double h) {
    const double ts[4] = {-2 * h, -h, h, 2 * h};
    Cx sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        double w = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != i) w *= (delta - ts[j]) / (ts[i] - ts[j]);
        sum += w * f(ts[i]);
    }
    return sum;
}

constexpr double kPoleBand = 1e-3;

double distance_to_integer(Cx v, int* n) {
    *n = int(std::lround(v.real()));
    return std::abs(v - Cx(*n, 0.0));
}

}  // namespace

// F(a,b;c;z) through the pair of solutions at z = 1; valid for |1-z| < 1.
// For real z > 1 the principal powers select the boundary value from below the cut.
SeriesValue hyp2f1_connect_one(Cx a, Cx b, Cx c, Cx omz, const SeriesControl& ctl) {
    int n;
    const Cx d = c - a - b;
    if (distance_to_integer(d, &n) < kPoleBand) {
        const Cx delta = d - double(n);
        auto at = [&](double t) { return hyp2f1_connect_one(a + delta - t, b, c, omz, ctl).value; };
        if (std::abs(delta.imag()) > 0.0) throw RegionError("2F1 near a complex connection pole");
        return {through_pole(at, delta.real(), 2 * kPoleBand), SeriesPath::Connection, 0};
    }
    const Cx gc = cgamma(c);
    const Cx A1 = gc * cgamma(d) / (cgamma(c - a) * cgamma(c - b));
    const Cx A2 = gc * cgamma(-d) / (cgamma(a) * cgamma(b));
    const SeriesValue f1 = hyp2f1_eval(a, b, 1.0 - d, omz, ctl);
    const SeriesValue f2 = hyp2f1_eval(c - a, c - b, 1.0 + d, omz, ctl);
    return {A1 * f1.value + A2 * cpow(omz, d) * f2.value, SeriesPath::Connection, f1.terms + f2.terms};
}

// F(a,b;c;z) through the pair of solutions at infinity; used for |z| > 1.5.
SeriesValue hyp2f1_connect_inf(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl) {
    int n;
    const Cx e = b - a;
    if (distance_to_integer(e, &n) < kPoleBand) {
        const Cx delta = e - double(n);
        auto at = [&](double t) { return hyp2f1_connect_inf(a + delta - t, b, c, z, ctl).value; };
        if (std::abs(delta.imag()) > 0.0) throw RegionError("2F1 near a complex connection pole");
        return {through_pole(at, delta.real(), 2 * kPoleBand), SeriesPath::Connection, 0};
    }
    const Cx gc = cgamma(c);
    const Cx B1 = gc * cgamma(e) / (cgamma(b) * cgamma(c - a));
    const Cx B2 = gc * cgamma(-e) / (cgamma(a) * cgamma(c - b));
    const Cx iz = 1.0 / z;
    const SeriesValue f1 = hyp2f1_eval(a, a - c + 1.0, 1.0 - e, iz, ctl);
    const SeriesValue f2 = hyp2f1_eval(b, b - c + 1.0, 1.0 + e, iz, ctl);
    return {B1 * cpow(-z, -a) * f1.value + B2 * cpow(-z, -b) * f2.value, SeriesPath::Connection,
            f1.terms + f2.terms};
}

SeriesValue hyp2f1_eval(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl, const Cx* one_minus_z) {
    const Cx omz = one_minus_z ? *one_minus_z : 1.0 - z;
    if (is_nonpositive_integer(c)) throw PoleError("2F1 with c = " + fmt_cx(c));
    auto ratio_of = [](Cx aa, Cx bb, Cx cc, Cx zz) {
        return [aa, bb, cc, zz](int n) {
            return (aa + double(n)) * (bb + double(n)) * zz / ((cc + double(n)) * double(n + 1));
        };
    };
    int ma = -1, mb = -1;
    bool ta = is_nonpositive_integer(a, &ma);
    bool tb = is_nonpositive_integer(b, &mb);
    if (ta || tb) {
        int m = ta && tb ? std::min(ma, mb) : (ta ? ma : mb);
        Cx aa = ta ? Cx(-ma, 0.0) : a;
        Cx bb = tb ? Cx(-mb, 0.0) : b;
        if (ta && tb && ma > mb) std::swap(aa, bb);
        return polynomial_sum(Cx(1.0), m, ratio_of(aa, bb, c, z), SeriesPath::Terminating);
    }
    int mca, mcb;
    bool tca = is_nonpositive_integer(c - a, &mca);
    bool tcb = is_nonpositive_integer(c - b, &mcb);
    if (tca || tcb) {
        Cx a2 = tca ? Cx(-mca, 0.0) : c - a;
        Cx b2 = tcb ? Cx(-mcb, 0.0) : c - b;
        int m = tca && tcb ? std::min(mca, mcb) : (tca ? mca : mcb);
        if (tca && tcb && mca > mcb) std::swap(a2, b2);
        SeriesValue s = polynomial_sum(Cx(1.0), m, ratio_of(a2, b2, c, z), SeriesPath::EulerTerminating);
        s.value *= cpow(omz, c - a - b);
        return s;
    }
    double az = std::abs(z);
    if (az < 0.9) return sum_series(Cx(1.0), 0, ratio_of(a, b, c, z), az, ctl, SeriesPath::Direct, "2F1");
    if (z != 1.0) {
        Cx zp = z / (z - 1.0);
        if (std::abs(zp) < 0.9) {
            SeriesValue s = sum_series(Cx(1.0), 0, ratio_of(a, c - b, c, zp), std::abs(zp), ctl,
                                       SeriesPath::Pfaff, "2F1 (Pfaff)");
            s.value *= cpow(omz, -a);
            return s;
        }
    }
    if (std::abs(omz) < 0.5) return hyp2f1_connect_one(a, b, c, omz, ctl);
    if (az > 1.5) return hyp2f1_connect_inf(a, b, c, z, ctl);
    if (az < 1.0 - 1e-12) {
        SeriesControl slow = ctl;
        slow.max_terms = std::max(ctl.max_terms, 400000);
        return sum_series(Cx(1.0), 0, ratio_of(a, b, c, z), az, slow, SeriesPath::SlowDirect, "2F1");
    }
    throw RegionError("2F1 argument " + fmt_cx(z) + " outside the supported regions");
}

Cx hyp2f1(Cx a, Cx b, Cx c, Cx z, const SeriesControl& ctl) { return hyp2f1_eval(a, b, c, z, ctl).value; }

}  // namespace dd
