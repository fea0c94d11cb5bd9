#include "dirac_darboux/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirac_darboux/errors.hpp"
#include "dirac_darboux/numerics.hpp"

namespace dd {

namespace {

constexpr double kCap = 1e8;
constexpr int kScan = 4000;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_family(const PotentialSpec& spec, ConditionId c) {
    const bool lam = c == ConditionId::LamAlpha;
    if (lam != (spec.family == Family::LambertW))
        throw DomainError(to_string(c) + " does not apply to the " + to_string(spec.family) + " family");
}

double rt(double k, double v) { return std::sqrt(std::max(0.0, k * k - v * v)); }

// Condition function without the domain check; defined at the endpoint itself.
double raw_value(const PotentialSpec& s, ConditionId c, double k) {
    const double r0 = rt(k, s.V0), rp = rt(k, s.V0 + s.V1), rm = rt(k, s.V0 - s.V1);
    switch (c) {
        case ConditionId::LamAlpha:
            return s.sigma * (s.V1 * s.V1 + (r0 + rp) * (r0 + rp)) / (2.0 * r0);
        case ConditionId::ExpAlpha: {
            // (rp - r0) + (rm - r0) without cancellation at large k
            const double v0 = s.V0 * s.V0, vp = (s.V0 + s.V1) * (s.V0 + s.V1), vm = (s.V0 - s.V1) * (s.V0 - s.V1);
            if (rp + r0 == 0.0 || rm + r0 == 0.0) return s.sigma * (-2.0 * r0 + rp + rm);
            return s.sigma * ((v0 - vp) / (rp + r0) + (v0 - vm) / (rm + r0));
        }
        case ConditionId::ExpBeta:
            return s.sigma * (2.0 * r0 + rp + rm);
        case ConditionId::ExpGamma1:
            return s.sigma * (2.0 * r0 - rp + rm);
        case ConditionId::ExpGamma2:
            return s.sigma * (-2.0 * r0 - rp + rm);
    }
    return 0.0;
}

// Limit of the condition function as k -> infinity.
double limit_at_infinity(const PotentialSpec& s, ConditionId c) {
    switch (c) {
        case ConditionId::ExpAlpha:
            return 0.0;
        case ConditionId::LamAlpha:
        case ConditionId::ExpBeta:
        case ConditionId::ExpGamma1:
            return s.sigma > 0 ? kInf : -kInf;
        case ConditionId::ExpGamma2:
            return s.sigma > 0 ? -kInf : kInf;
    }
    return 0.0;
}

std::vector<double> scan_grid(double bound) {
    std::vector<double> ks(kScan);
    const double u0 = -9.0, u1 = std::log10(kCap / bound);
    for (int i = 0; i < kScan; ++i) ks[i] = bound * (1.0 + std::pow(10.0, u0 + (u1 - u0) * i / (kScan - 1)));
    return ks;
}

// Golden-section refinement of an extremum of f on [a, b]; sgn = +1 for a maximum.
double refine_extremum(const std::function<double(double)>& f, double a, double b, double sgn) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = sgn * f(c), fd = sgn * f(d);
    for (int i = 0; i < 200 && (b - a) > 1e-15 * b; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = sgn * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = sgn * f(d);
        }
    }
    return 0.5 * (a + b);
}

struct Scan {
    ConditionRange range;
    std::vector<double> breaks;  // monotone pieces between consecutive breaks
};

Scan scan_condition(const PotentialSpec& spec, ConditionId c) {
    const double bound = ky_domain_bound(spec, c);
    auto f = [&](double k) { return raw_value(spec, c, k); };
    std::vector<double> ks = scan_grid(bound);
    std::vector<double> vs(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) vs[i] = f(ks[i]);

    Scan s;
    s.breaks.push_back(bound);
    const double v_end = f(bound);
    const double v_inf = limit_at_infinity(spec, c);
    s.range.sup = std::max(v_end, v_inf);
    s.range.inf = std::min(v_end, v_inf);
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
        const double dl = vs[i] - vs[i - 1], dr = vs[i + 1] - vs[i];
        if ((dl > 0 && dr < 0) || (dl < 0 && dr > 0)) {
            const double sgn = dl > 0 ? 1.0 : -1.0;
            const double km = refine_extremum(f, ks[i - 1], ks[i + 1], sgn);
            const double vm = f(km);
            s.breaks.push_back(km);
            if (sgn > 0 && vm > s.range.sup) {
                s.range.sup = vm;
                s.range.has_interior_max = true;
                s.range.k_at_max = km;
            }
            if (sgn < 0) s.range.inf = std::min(s.range.inf, vm);
        }
    }
    s.breaks.push_back(kCap);
    return s;
}

void require_sign(const PotentialSpec& spec, ConditionId c) {
    if ((c == ConditionId::LamAlpha || c == ConditionId::ExpBeta) && !(spec.sigma < 0))
        throw SignError(to_string(c) + " needs sigma < 0");
    if (c == ConditionId::ExpAlpha && !(spec.sigma > 0)) throw SignError("ExpAlpha needs sigma > 0");
}

}  // namespace

std::string to_string(ConditionId c) {
    switch (c) {
        case ConditionId::LamAlpha: return "LamAlpha";
        case ConditionId::ExpAlpha: return "ExpAlpha";
        case ConditionId::ExpBeta: return "ExpBeta";
        case ConditionId::ExpGamma1: return "ExpGamma1";
        case ConditionId::ExpGamma2: return "ExpGamma2";
    }
    return "?";
}

ConditionId condition_from_string(const std::string& s) {
    for (auto c : {ConditionId::LamAlpha, ConditionId::ExpAlpha, ConditionId::ExpBeta, ConditionId::ExpGamma1,
                   ConditionId::ExpGamma2})
        if (to_string(c) == s) return c;
    throw ConfigError("unknown condition '" + s + "'");
}

int condition_n_floor(ConditionId c) { return c == ConditionId::ExpBeta ? 1 : 0; }

double condition_target(ConditionId c, int n) {
    return c == ConditionId::ExpGamma1 ? -(n + 1.0) : -double(n);
}

double ky_domain_bound(const PotentialSpec& spec, ConditionId c) {
    require_family(spec, c);
    if (c == ConditionId::LamAlpha) return std::max(std::abs(spec.V0), std::abs(spec.V0 + spec.V1));
    return std::max(std::abs(spec.V0 + spec.V1), std::abs(spec.V0 - spec.V1));
}

double condition_value(const PotentialSpec& spec, ConditionId c, double ky) {
    const double bound = ky_domain_bound(spec, c);
    if (!(std::abs(ky) > bound)) throw DomainError("|k_y| must exceed " + std::to_string(bound));
    return raw_value(spec, c, std::abs(ky));
}

double alpha_of_ky(const PotentialSpec& spec, double ky) {
    return condition_value(spec, spec.family == Family::LambertW ? ConditionId::LamAlpha : ConditionId::ExpAlpha,
                           ky);
}

double beta_of_ky(const PotentialSpec& spec, double ky) { return condition_value(spec, ConditionId::ExpBeta, ky); }

double gamma_combo_of_ky(const PotentialSpec& spec, int which, double ky) {
    return condition_value(spec, which == 1 ? ConditionId::ExpGamma1 : ConditionId::ExpGamma2, ky);
}

ConditionRange condition_range(const PotentialSpec& spec, ConditionId c) { return scan_condition(spec, c).range; }

IntRange admissible_n(const PotentialSpec& spec, ConditionId c) {
    require_family(spec, c);
    require_sign(spec, c);
    const ConditionRange r = condition_range(spec, c);
    const double eps = 1e-12;
    // target(n) = -(n + shift) must lie strictly inside (inf, sup).
    const double shift = c == ConditionId::ExpGamma1 ? 1.0 : 0.0;
    IntRange out;
    const double lo_real = -r.sup - shift;  // need n > lo_real
    out.lo = std::max(condition_n_floor(c), int(std::floor(lo_real + eps)) + 1);
    if (std::isfinite(r.inf)) {
        const double hi_real = -r.inf - shift;  // need n < hi_real
        out.hi = int(std::ceil(hi_real - eps)) - 1;
    }
    return out;
}

ElementaryRoot solve_ky(const PotentialSpec& spec, ConditionId c, int n) {
    IntRange adm = admissible_n(spec, c);
    if (adm.empty() || !adm.contains(n))
        throw NoRoot("n = " + std::to_string(n) + " is not admissible for " + to_string(c));
    const Scan s = scan_condition(spec, c);
    const double target = condition_target(c, n);
    const double bound = s.breaks.front();
    auto g = [&](double k) { return raw_value(spec, c, k) - target; };
    ElementaryRoot out{c, n, {}};
    for (std::size_t i = 0; i + 1 < s.breaks.size(); ++i) {
        const double a = s.breaks[i], b = s.breaks[i + 1];
        const double ga = g(a), gb = g(b);
        if ((ga > 0) == (gb > 0) && ga != 0.0 && gb != 0.0) continue;
        const double k = bisect(g, a, b);
        if (!(k > bound)) continue;  // open domain
        if (std::abs(g(k)) >= 1e-10) continue;
        if (std::none_of(out.roots.begin(), out.roots.end(),
                         [k](double r) { return std::abs(r - k) <= 1e-12 * k; }))
            out.roots.push_back(k);
    }
    if (out.roots.empty()) throw NoRoot("no root for n = " + std::to_string(n));
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<ConditionId> applicable_conditions(const PotentialSpec& spec) {
    if (spec.family == Family::LambertW) {
        if (spec.sigma < 0) return {ConditionId::LamAlpha};
        return {};
    }
    std::vector<ConditionId> out;
    out.push_back(spec.sigma > 0 ? ConditionId::ExpAlpha : ConditionId::ExpBeta);
    out.push_back(ConditionId::ExpGamma1);
    out.push_back(ConditionId::ExpGamma2);
    return out;
}

double lambert_alpha_max_formula(const PotentialSpec& spec) {
    const double V0 = spec.V0, V1 = spec.V1;
    const double r = std::sqrt(V0 * (9.0 * V0 + 4.0 * V1));
    const double pre = std::pow(2.0 * V0 * (-3.0 * V0 - 2.0 * V1 + r), -0.5);
    const double a = std::sqrt(-3.0 * V0 * V0 - 2.0 * V0 * V1 + V0 * r);
    const double b = std::sqrt(-3.0 * V0 * V0 - 6.0 * V0 * V1 - 2.0 * V1 * V1 +
                               std::sqrt(V0 * V0 * V0 * (9.0 * V0 + 4.0 * V1)));
    return spec.sigma * pre * (V1 * V1 + 0.5 * (a + b) * (a + b));
}

double lambert_alpha_sup_formula(const PotentialSpec& spec) {
    return spec.sigma * spec.V1 * (spec.V0 + spec.V1) / std::sqrt(spec.V1 * (2.0 * spec.V0 + spec.V1));
}

std::optional<int> matching_n(const PotentialSpec& spec, ConditionId c, double ky, double tol) {
    if ((c == ConditionId::LamAlpha) != (spec.family == Family::LambertW)) return std::nullopt;
    if (!(std::abs(ky) > ky_domain_bound(spec, c))) return std::nullopt;
    const double v = raw_value(spec, c, std::abs(ky));
    const double shift = c == ConditionId::ExpGamma1 ? 1.0 : 0.0;
    const double nr = std::round(-v - shift);
    if (nr < condition_n_floor(c)) return std::nullopt;
    const int n = int(nr);
    if (std::abs(v - condition_target(c, n)) < tol) return n;
    return std::nullopt;
}

}  // namespace dd
