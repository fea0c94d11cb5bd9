#pragma once

#include <array>
#include <string>
#include <utility>

#include "dirac_darboux/dirac_core.hpp"

namespace dd {

using Mat2 = std::array<std::array<Cx, 2>, 2>;

struct TransformSpec {
    double lambda0 = 0.0;
    double lambda1 = 0.0;

    TransformSpec() = default;
    TransformSpec(double l0, double l1);  // throws ConfigError when l0 == l1
};

struct TransformFrame {
    double x = 0.0;
    Mat2 u{};
    Mat2 u_dx{};
    Cx det_u;
    Cx wr_lower;  // W(u21, u22)
    Cx wr_upper;  // W(u12, u11)
    double scale = 0.0;
};

struct PotentialMatrixSample {
    double x = 0.0;
    Cx m11, m22;
    double offdiag_max = 0.0;
    double imag_max = 0.0;
    double diag_gap = 0.0;
};

// Wronskian f g' - f' g.
inline Cx wronskian(Cx f, Cx df, Cx g, Cx dg) { return f * dg - df * g; }

TransformFrame frame(const PotentialSpec& spec, double E, const TransformSpec& t, double x);

PotentialMatrixSample transformed_potential(const PotentialSpec& spec, double E, const TransformSpec& t,
                                            double x);

// (Phi_a, Phi_b); the exp(i k_y y) factor is omitted.
std::pair<Cx, Cx> transformed_spinor(const PotentialSpec& spec, double E, const TransformSpec& t,
                                     const ModeParams& mode, double x);

struct ConditionVerdict {
    bool holds = false;
    std::string reason;
};

struct ConditionReport {
    ConditionVerdict reality;
    ConditionVerdict diagonal;
    ConditionVerdict elementary;
};

ConditionReport check_conditions(const PotentialSpec& spec, const TransformSpec& t);

// Integral form of m11 - u0 for lambda0 = -lambda1, anchored at x_lo.
Cx potential_diff_integral(const PotentialSpec& spec, double E, const TransformSpec& t, double x_lo, double x,
                           int n_quad = 200);

}  // namespace dd
