#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dirac_darboux/cli.hpp"
#include "dirac_darboux/errors.hpp"

namespace dd::cli {

namespace {

const Cx I(0.0, 1.0);

ReproResult verdict(double measured, double tol, std::string detail) {
    return {measured, measured <= tol, std::move(detail)};
}

// Worst relative deviation of the closest computed root from each expected value.
double root_error(const std::vector<double>& roots, const std::vector<double>& expected) {
    if (roots.size() != expected.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (double e : expected) {
        double best = std::numeric_limits<double>::infinity();
        for (double r : roots) best = std::min(best, std::abs(r - e) / std::abs(e));
        worst = std::max(worst, best);
    }
    return worst;
}

std::string join_roots(const std::vector<double>& r) {
    std::vector<std::string> p;
    for (double v : r) p.push_back(format_number(v));
    return fmt::format("{}", fmt::join(p, ", "));
}

ReproResult single_root(const Scenario& s, int n, std::vector<double> expected, double tol) {
    const ElementaryRoot r = solve_ky(s.spec, *s.condition, n);
    const double err = root_error(r.roots, expected);
    return verdict(err, tol, fmt::format("n={} k_y = {}", n, join_roots(r.roots)));
}

// Range check folded into the measured value: infinite when the set differs.
double range_error(const IntRange& got, int lo, std::optional<int> hi) {
    return got.lo == lo && got.hi == hi ? 0.0 : std::numeric_limits<double>::infinity();
}

std::string range_text(const IntRange& r) {
    return r.hi ? fmt::format("{}..{}", r.lo, *r.hi) : fmt::format("{}..", r.lo);
}

// Max relative deviation of a diagonal entry from a closed form; gap points are skipped.
ReproResult partner_potential(const Scenario& s, double tol, const std::function<double(double)>& m11,
                              const std::function<double(double)>& m22) {
    double worst = 0.0;
    int used = 0;
    for (double x : s.grid.points()) {
        PotentialMatrixSample m;
        try {
            m = transformed_potential(s.spec, s.E, *s.transform, x);
        } catch (const SingularFrame&) {
            continue;
        }
        ++used;
        worst = std::max(worst, std::abs(m.m11 - m11(x)) / std::abs(m11(x)));
        worst = std::max(worst, std::abs(m.m22 - m22(x)) / std::abs(m22(x)));
    }
    if (used < 100) return {double(used), false, "fewer than 100 usable grid points"};
    return verdict(worst, tol, fmt::format("max relative deviation over {} points", used));
}

// Both components against a display, up to one constant fixed at the first grid point.
ReproResult displayed_spinor(const Scenario& s, double tol, bool ab_basis,
                             const std::function<std::pair<Cx, Cx>(double)>& ref) {
    const auto xs = s.grid.points();
    const ModeParams m = s.modes().front();
    auto comp = [&](double x) {
        const SpinorSample p = spinor(s.spec, m, x);
        return ab_basis ? std::pair<Cx, Cx>{p.psia, p.psib} : std::pair<Cx, Cx>{p.psi1, p.psi2};
    };
    const auto [c0, d0] = comp(xs.front());
    const Cx c = c0 / ref(xs.front()).first;
    double worst = std::abs(d0 / ref(xs.front()).second / c - 1.0);
    for (double x : xs) {
        const auto [a, b] = comp(x);
        const auto [ra, rb] = ref(x);
        worst = std::max({worst, std::abs(a / ra / c - 1.0), std::abs(b / rb / c - 1.0)});
    }
    return verdict(worst, tol, fmt::format("constant {}{:+}i, max ratio deviation", format_number(c.real()),
                                           c.imag()));
}

ReproResult bound_states(const Scenario& s, const std::vector<double>& transformed_k) {
    std::string detail;
    bool ok = true;
    double worst_rate = std::numeric_limits<double>::infinity();
    for (const auto& m : s.modes()) {
        const DensityReport d = density_report(s.spec, m);
        ok = ok && d.integrable && d.origin_finite;
        worst_rate = std::min(worst_rate, d.tail_decay_rate);
        detail += fmt::format("k={} rate={:.4g} origin={:.4g}; ", m.ky, d.tail_decay_rate, d.value_at_origin);
    }
    for (double k : transformed_k) {
        const DensityReport d = density_report(s.spec, s.E, *s.transform, {s.E, k});
        ok = ok && d.integrable && d.origin_finite;
        worst_rate = std::min(worst_rate, d.tail_decay_rate);
        detail += fmt::format("transformed k={} rate={:.4g}; ", k, d.tail_decay_rate);
    }
    return {worst_rate, ok, detail};
}

std::vector<ReproCase> build() {
    std::vector<ReproCase> v;

    v.push_back({"lambert_n2", "Lambert alpha condition, n=2", "published root 5/4",
                 "family = lambert\nV0 = 0\nV1 = 1\nsigma = -1\ncondition = LamAlpha\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) { return single_root(s, 2, {1.25}, tol); }});

    v.push_back({"lambert_formula", "Lambert alpha condition, n=2..20 against (n+1/n)/2", "published closed form",
                 "family = lambert\nV0 = 0\nV1 = 1\nsigma = -1\ncondition = LamAlpha\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) {
                     double worst = 0.0;
                     for (int n = 2; n <= 20; ++n)
                         worst = std::max(worst, root_error(solve_ky(s.spec, *s.condition, n).roots, {0.5 * (n + 1.0 / n)}));
                     return verdict(worst, tol, "max relative deviation over n=2..20");
                 }});

    v.push_back({"lambert_interior_max", "Lambert alpha condition with an interior maximum, n=1", "published roots",
                 "family = lambert\nV0 = 1/2\nV1 = -1\nsigma = -1/4\ncondition = LamAlpha\nx_lo = 0\nx_hi = 1\n",
                 1e-10, [](const Scenario& s, double tol) {
                     return single_root(s, 1, {std::sqrt(2.0 - std::sqrt(3.0)), std::sqrt(2.0 + std::sqrt(3.0))}, tol);
                 }});

    v.push_back({"lambert_singular_n1", "singular Lambert alpha condition, n=1 and n_min", "published root 17/8",
                 "family = lambert\nV0 = 0\nV1 = 1\nsigma = -1/4\nsingular = true\ncondition = LamAlpha\n"
                 "x_lo = 0.3\nx_hi = 1\n",
                 1e-10, [](const Scenario& s, double tol) {
                     ReproResult r = single_root(s, 1, {17.0 / 8}, tol);
                     const IntRange n = admissible_n(s.spec, *s.condition);
                     r.measured = std::max(r.measured, range_error(n, 1, std::nullopt));
                     r.pass = r.measured <= tol;
                     r.detail += ", admissible n " + range_text(n);
                     return r;
                 }});

    v.push_back({"exp_alpha_n1", "exponential alpha condition, n=1 and admissible set", "published root 5/2",
                 "family = exp\nV0 = 0\nV1 = -3/2\nsigma = 1\ncondition = ExpAlpha\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) {
                     ReproResult r = single_root(s, 1, {2.5}, tol);
                     const IntRange n = admissible_n(s.spec, *s.condition);
                     r.measured = std::max(r.measured, range_error(n, 1, 2));
                     r.pass = r.measured <= tol;
                     r.detail += ", admissible n " + range_text(n);
                     return r;
                 }});

    v.push_back({"exp_alpha_step", "exponential alpha condition, step potential", "published root 13/12",
                 "family = exp\nV0 = 0\nV1 = 1\nsigma = 3/4\ncondition = ExpAlpha\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) {
                     ReproResult r = single_root(s, 1, {13.0 / 12}, tol);
                     const IntRange n = admissible_n(s.spec, *s.condition);
                     r.measured = std::max(r.measured, range_error(n, 1, 1));
                     r.pass = r.measured <= tol;
                     r.detail += ", admissible n " + range_text(n);
                     return r;
                 }});

    v.push_back({"exp_beta_n4", "exponential beta condition, lowest n", "published root 25/16",
                 "family = exp\nV0 = 0\nV1 = -3/2\nsigma = -1\ncondition = ExpBeta\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) {
                     ReproResult r = single_root(s, 4, {25.0 / 16}, tol);
                     const IntRange n = admissible_n(s.spec, *s.condition);
                     r.measured = std::max(r.measured, range_error(n, 4, std::nullopt));
                     r.pass = r.measured <= tol;
                     r.detail += ", admissible n " + range_text(n);
                     return r;
                 }});

    v.push_back({"exp_alpha_two_roots", "exponential alpha condition, n=1 and n=2", "published roots 17/4 and 5/2",
                 "family = exp\nV0 = 0\nV1 = 2\nsigma = 1\ncondition = ExpAlpha\nx_lo = 0\nx_hi = 1\n", 1e-10,
                 [](const Scenario& s, double tol) {
                     ReproResult a = single_root(s, 1, {17.0 / 4}, tol);
                     ReproResult b = single_root(s, 2, {2.5}, tol);
                     const IntRange n = admissible_n(s.spec, *s.condition);
                     const double m = std::max({a.measured, b.measured, range_error(n, 1, 3)});
                     return verdict(m, tol, a.detail + "; " + b.detail + ", admissible n " + range_text(n));
                 }});

    v.push_back({"exp_bound_roots", "exponential bound case, gamma condition for n=2..10", "published closed form (n+1)/2",
                 "family = exp\nV0 = 0\nV1 = -1\nsigma = -1\nsingular = true\nmirror = true\n"
                 "condition = ExpGamma1\nx_lo = 0.1\nx_hi = 1\n",
                 1e-10, [](const Scenario& s, double tol) {
                     double worst = 0.0;
                     for (int n = 2; n <= 10; ++n) {
                         const auto roots = solve_ky(s.spec, *s.condition, n).roots;
                         double best = std::numeric_limits<double>::infinity();
                         for (double r : roots) best = std::min(best, std::abs(r - 0.5 * (n + 1)) / (0.5 * (n + 1)));
                         worst = std::max(worst, best);
                     }
                     return verdict(worst, tol, "max relative deviation over n=2..10 (n=1 sits on the open domain edge)");
                 }});

    v.push_back({"partner_lambert_step", "Lambert step partner potential", "published closed form",
                 "family = lambert\nV0 = 0\nV1 = -1\nsigma = -1\nlambda0 = -5/4\nlambda1 = 5/4\n"
                 "x_lo = -4\nx_hi = 4\nn_points = 201\n",
                 1e-8, [](const Scenario& s, double tol) {
                     auto f = [](double x) {
                         const double W = lambert_w0(std::exp(-x));
                         const double W2 = W * W, W3 = W2 * W, W4 = W3 * W;
                         return (-1 + 16 * W + 10 * W2 - 200 * W3 - 125 * W4) /
                                ((1 + W) * (1 - 12 * W + 30 * W2 + 100 * W3 + 125 * W4));
                     };
                     return partner_potential(s, tol, f, f);
                 }});

    v.push_back({"partner_lambert_singular", "singular Lambert partner potential", "published closed form",
                 "family = lambert\nV0 = 0\nV1 = 1\nsigma = -1/4\nsingular = true\nlambda0 = -17/8\nlambda1 = 17/8\n"
                 "x_lo = 0.3\nx_hi = 4\nn_points = 201\n",
                 1e-8, [](const Scenario& s, double tol) {
                     auto f = [](double x) {
                         const double W = lambert_w0(-std::exp(-4 * x));
                         return (1 + 34 * W + 17 * W * W) / (1 + 3 * W + 19 * W * W + 17 * W * W * W);
                     };
                     return partner_potential(s, tol, f, f);
                 }});

    v.push_back({"partner_exp_step", "exponential step partner potential", "published closed form",
                 "family = exp\nV0 = 0\nV1 = 1\nsigma = 3/4\nlambda0 = -13/12\nlambda1 = 13/12\n"
                 "x_lo = -6\nx_hi = 6\nn_points = 201\n",
                 1e-8, [](const Scenario& s, double tol) {
                     auto f = [](double x) {
                         const double q = std::exp(4 * x / 3);
                         return (13 + 17 * q) / ((13 + 9 * q) * std::sqrt(1 + q));
                     };
                     return partner_potential(s, tol, f, f);
                 }});

    v.push_back({"partner_exp_unequal", "exponential partner with unequal diagonal", "published closed form",
                 "family = exp\nV0 = 0\nV1 = 2\nsigma = 1\nlambda0 = -17/4\nlambda1 = 5/2\n"
                 "x_lo = -6\nx_hi = 6\nn_points = 201\n",
                 1e-8, [](const Scenario& s, double tol) {
                     return partner_potential(
                         s, tol, [](double x) { return 4 / std::sqrt(1 + std::exp(x)); },
                         [](double x) {
                             const double e = std::exp(x);
                             return (8 + 11 * e) / (8 * std::pow(1 + e, 1.5));
                         });
                 }});

    v.push_back({"sol_lambert_n2", "Lambert elementary spinor at k_y = 5/4", "published closed form",
                 "family = lambert\nV0 = 0\nV1 = -1\nsigma = -1\nky = 5/4\nx_lo = -3\nx_hi = 3\nn_points = 61\n", 1e-9,
                 [](const Scenario& s, double tol) {
                     return displayed_spinor(s, tol, false, [](double x) {
                         const double W = lambert_w0(std::exp(-x));
                         const Cx e = std::exp(-1.25 * x);
                         const Cx p1 = (50. / 3 + I * (25. / 3)) * e - (4. / 3 - I) * e / (W * W) + (10. - I * (10. / 3)) * e / W;
                         const Cx p2 = -5. / 3 * std::exp(0.75 * x + 2 * W) * (-I + (2. + 6. * I) * W + (10. + 5. * I) * W * W);
                         return std::pair<Cx, Cx>{p1, p2};
                     });
                 }});

    v.push_back({"sol_exp_k5_2", "exponential elementary spinor at k_y = 5/2", "published closed form",
                 "family = exp\nV0 = 0\nV1 = -3/2\nsigma = 1\nky = 5/2\nx_lo = -3\nx_hi = 3\nn_points = 61\n", 1e-9,
                 [](const Scenario& s, double tol) {
                     return displayed_spinor(s, tol, true, [](double x) {
                         const double e2 = std::exp(2 * x);
                         return std::pair<Cx, Cx>{3. / 8 * I * e2 * std::sqrt(1 + std::exp(x)), -1. / 8 * e2};
                     });
                 }});

    v.push_back({"sol_exp_k25_16", "exponential elementary spinor at k_y = 25/16, upper exponent -17/16",
                 "published closed form with a corrected exponent",
                 "family = exp\nV0 = 0\nV1 = -3/2\nsigma = -1\nky = 25/16\nx_lo = -3\nx_hi = 3\nn_points = 61\n", 1e-9,
                 [](const Scenario& s, double tol) {
                     return displayed_spinor(s, tol, true, [](double x) {
                         const double e = std::exp(x);
                         return std::pair<Cx, Cx>{12. / 7 * I * std::exp(-17. / 16 * x) * std::sqrt(1 + e) * (13 + e),
                                                  -3. / 7 * std::exp(-25. / 16 * x) * (91 + 3 * e * (26 + e))};
                     });
                 }});

    v.push_back({"exp_singular_real", "singular exponential partner is real with equal diagonal, not elementary",
                 "published qualitative claim",
                 "family = exp\nV0 = 1\nV1 = -1\nsigma = -1\nsingular = true\nlambda0 = -3\nlambda1 = 3\n"
                 "x_lo = 0.05\nx_hi = 6\nn_points = 200\n",
                 1e-8, [](const Scenario& s, double tol) {
                     double worst = 0.0;
                     for (double x : s.grid.points()) {
                         const auto m = transformed_potential(s.spec, s.E, *s.transform, x);
                         worst = std::max({worst, m.imag_max, m.diag_gap});
                     }
                     const ConditionReport r = check_conditions(s.spec, *s.transform);
                     if (r.elementary.holds) return ReproResult{worst, false, "elementary condition unexpectedly holds"};
                     return verdict(worst, tol, "max of imag_max and diag_gap; elementary condition fails as stated");
                 }});

    v.push_back({"bound_lambert", "mirrored Lambert bound states and their partners", "published bound-state claim",
                 "family = lambert\nV0 = 1\nV1 = -1\nsigma = -1\nx1 = -1\nsingular = true\nmirror = true\n"
                 "ky = 1/2, 1, 3/2\nlambda0 = 1/2\nlambda1 = -1/2\nx_lo = 0.01\nx_hi = 8\n",
                 0.0, [](const Scenario& s, double) { return bound_states(s, {1.0, 1.5, 2.0}); }});

    v.push_back({"bound_exp", "mirrored exponential bound states and their partners", "published bound-state claim",
                 "family = exp\nV0 = 0\nV1 = -1\nsigma = -1\nsingular = true\nmirror = true\n"
                 "ky = 5/2, 3, 7/2\nlambda0 = 2\nlambda1 = -2\nx_lo = 0.01\nx_hi = 8\n",
                 0.0, [](const Scenario& s, double) { return bound_states(s, {2.5, 3.0, 3.5}); }});

    return v;
}

}  // namespace

const std::vector<ReproCase>& manifest() {
    static const std::vector<ReproCase> cases = build();
    return cases;
}

const ReproCase* find_case(const std::string& id) {
    for (const auto& c : manifest())
        if (c.id == id) return &c;
    return nullptr;
}

ReproResult run_case(const ReproCase& c, std::optional<double> tol) {
    const Scenario s = parse_scenario(c.scenario);
    return c.run(s, tol.value_or(c.tol));
}

}  // namespace dd::cli
