#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dirac_darboux/cli.hpp"
#include "dirac_darboux/errors.hpp"

namespace dd::cli {

namespace {

std::string suffix(const Scenario& s, std::size_t i) { return s.ky.size() > 1 ? fmt::format("_k{}", i) : ""; }

void require_modes(const Scenario& s) {
    if (s.ky.empty()) throw ConfigError("this output needs at least one ky");
}

const TransformSpec& require_transform(const Scenario& s) {
    if (!s.transform) throw ConfigError("this output needs lambda0 and lambda1");
    return *s.transform;
}

void add_complex_columns(Table& t, const std::string& name) {
    t.columns.push_back(name + "_re");
    t.columns.push_back(name + "_im");
}

void push_complex(std::vector<Cell>& row, Cx v) {
    row.emplace_back(v.real());
    row.emplace_back(v.imag());
}

// A sub-interval of the grid on one side of the mirror point, for ODE and
// refinement checks that cannot cross it.
std::pair<double, double> one_sided(const Scenario& s) {
    double lo = s.grid.x_lo, hi = s.grid.x_hi;
    if (s.spec.mirror && lo < 0.0 && hi > 0.0) {
        const double edge = std::max(domain(s.spec).lo, 0.0) + 0.05 * std::max(hi, -lo);
        if (hi >= -lo) lo = edge;
        else hi = -edge;
    }
    return {lo, hi};
}

}  // namespace

Table potential_table(const Scenario& s) {
    Table t;
    t.columns = {"x", "u0", "u0_dx"};
    for (double x : s.grid.points()) t.add_row({x, eval_u0(s.spec, x), eval_u0_dx(s.spec, x)});
    return t;
}

Table solution_table(const Scenario& s) {
    require_modes(s);
    Table t;
    t.columns = {"x"};
    for (std::size_t i = 0; i < s.ky.size(); ++i) {
        add_complex_columns(t, "psi1" + suffix(s, i));
        add_complex_columns(t, "psi2" + suffix(s, i));
    }
    const auto modes = s.modes();
    for (double x : s.grid.points()) {
        std::vector<Cell> row{x};
        for (const auto& m : modes) {
            const SpinorSample p = spinor(s.spec, m, x);
            push_complex(row, p.psi1);
            push_complex(row, p.psi2);
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table darboux_table(const Scenario& s) {
    const TransformSpec& tr = require_transform(s);
    Table t;
    t.columns = {"x", "u0"};
    add_complex_columns(t, "m11");
    add_complex_columns(t, "m22");
    add_complex_columns(t, "det_u");
    for (const char* c : {"offdiag_max", "imag_max", "diag_gap"}) t.columns.push_back(c);
    for (double x : s.grid.points()) {
        std::vector<Cell> row{x, eval_u0(s.spec, x)};
        try {
            const PotentialMatrixSample m = transformed_potential(s.spec, s.E, tr, x);
            const TransformFrame f = frame(s.spec, s.E, tr, x);
            push_complex(row, m.m11);
            push_complex(row, m.m22);
            push_complex(row, f.det_u);
            row.insert(row.end(), {m.offdiag_max, m.imag_max, m.diag_gap});
        } catch (const SingularFrame&) {
            row.resize(t.columns.size());  // gap: nulls, never interpolated
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table transformed_solution_table(const Scenario& s) {
    require_modes(s);
    const TransformSpec& tr = require_transform(s);
    Table t;
    t.columns = {"x"};
    for (std::size_t i = 0; i < s.ky.size(); ++i) {
        add_complex_columns(t, "phia" + suffix(s, i));
        add_complex_columns(t, "phib" + suffix(s, i));
    }
    const auto modes = s.modes();
    for (double x : s.grid.points()) {
        std::vector<Cell> row{x};
        for (const auto& m : modes) {
            try {
                const auto [a, b] = transformed_spinor(s.spec, s.E, tr, m, x);
                push_complex(row, a);
                push_complex(row, b);
            } catch (const SingularFrame&) {
                row.resize(row.size() + 4);
            }
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table density_table(const Scenario& s) {
    require_modes(s);
    Table t;
    t.columns = {"x"};
    std::vector<double> norms;
    std::vector<double> norms1;
    const auto modes = s.modes();
    for (std::size_t i = 0; i < modes.size(); ++i) {
        t.columns.push_back("rho" + suffix(s, i));
        norms.push_back(density_report(s.spec, modes[i]).norm);
        if (s.transform) {
            t.columns.push_back("rho1" + suffix(s, i));
            const bool kernel = modes[i].ky == s.transform->lambda0 || modes[i].ky == s.transform->lambda1;
            norms1.push_back(kernel ? 0.0 : density_report(s.spec, s.E, *s.transform, modes[i]).norm);
        }
    }
    for (double x : s.grid.points()) {
        std::vector<Cell> row{x};
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const SpinorSample p = spinor(s.spec, modes[i], x);
            row.emplace_back((std::norm(p.psi1) + std::norm(p.psi2)) / norms[i]);
            if (s.transform && norms1[i] == 0.0) {
                row.emplace_back(std::monostate{});
            } else if (s.transform) {
                try {
                    const auto [a, b] = transformed_spinor(s.spec, s.E, *s.transform, modes[i], x);
                    row.emplace_back((std::norm(a) + std::norm(b)) / norms1[i]);
                } catch (const SingularFrame&) {
                    row.emplace_back(std::monostate{});
                }
            }
        }
        t.add_row(std::move(row));
    }
    return t;
}

Table elementary_table(const Scenario& s) {
    if (!s.condition) throw ConfigError("elementary needs a condition");
    const ConditionId c = *s.condition;
    Table t;
    t.columns = {"condition", "n", "ky"};
    std::vector<int> ns = s.n_values;
    const IntRange r = admissible_n(s.spec, c);  // raises SignError on the wrong sigma sign
    if (ns.empty()) {
        const int hi = r.hi ? *r.hi : r.lo + 9;
        for (int n = r.lo; n <= hi; ++n) ns.push_back(n);
    }
    for (int n : ns) {
        if (!r.contains(n)) continue;
        for (double k : solve_ky(s.spec, c, n).roots) t.add_row({to_string(c), double(n), k});
    }
    if (t.rows.empty()) throw NoRoot("no admissible n in the requested set");
    return t;
}

Table check_table(const Scenario& s) {
    const ConditionReport r = check_conditions(s.spec, require_transform(s));
    Table t;
    t.columns = {"condition", "holds", "reason"};
    t.add_row({std::string("reality"), std::string(r.reality.holds ? "true" : "false"), r.reality.reason});
    t.add_row({std::string("diagonal"), std::string(r.diagonal.holds ? "true" : "false"), r.diagonal.reason});
    t.add_row({std::string("elementary"), std::string(r.elementary.holds ? "true" : "false"), r.elementary.reason});
    return t;
}

Table verify_table(const Scenario& s, double tol) {
    require_modes(s);
    Table t;
    t.columns = {"ky", "check", "value", "tol", "pass"};
    auto add = [&](double ky, const std::string& name, double v, double lim, bool pass) {
        t.add_row({ky, name, v, lim, std::string(pass ? "PASS" : "FAIL")});
    };
    const auto [lo, hi] = one_sided(s);
    for (const auto& m : s.modes()) {
        // Integrate toward the larger end so a decaying solution is not swamped.
        const bool forward = std::norm(spinor(s.spec, m, lo).psi1) <= std::norm(spinor(s.spec, m, hi).psi1);
        const OdeSetup setup = forward ? OdeSetup{lo, hi, 1e-11} : OdeSetup{hi, lo, 1e-11};
        for (int sign : {1, -1}) {
            const double err = ode_endpoint_error(s.spec, m, sign, setup);
            add(m.ky, sign > 0 ? "ode_upper" : "ode_lower", err, tol, err < tol);
        }
        const double L = hi - lo;
        const RefinementStudy st = residual_refinement(s.spec, m, 1, lo, hi, {L / 100, L / 200, L / 400});
        add(m.ky, "residual_order", st.order, 1.8, st.order >= 1.8);
        if (s.wants(Artifact::Density)) {
            const DensityReport d = density_report(s.spec, m);
            add(m.ky, "density_decay_rate", d.tail_decay_rate, 0.0, d.integrable);
            if (d.has_origin) add(m.ky, "density_origin", d.value_at_origin, 0.0, d.origin_finite);
            // A mode equal to a frame column is mapped to zero.
            if (s.transform && m.ky != s.transform->lambda0 && m.ky != s.transform->lambda1) {
                const DensityReport d1 = density_report(s.spec, s.E, *s.transform, m);
                add(m.ky, "transformed_decay_rate", d1.tail_decay_rate, 0.0, d1.integrable);
            }
        }
    }
    if (s.transform) {
        // A frame column is annihilated by the transformation.
        const ModeParams m0{s.E, s.transform->lambda0};
        double worst = 0.0;
        for (double x : s.grid.points()) {
            try {
                const auto [a, b] = transformed_spinor(s.spec, s.E, *s.transform, m0, x);
                worst = std::max(worst, std::max(std::abs(a), std::abs(b)) / frame(s.spec, s.E, *s.transform, x).scale);
            } catch (const SingularFrame&) {
            }
        }
        add(s.transform->lambda0, "kernel", worst, 1e-10, worst < 1e-10);
    }
    return t;
}

}  // namespace dd::cli
