#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dirac_darboux/specfun.hpp"

namespace dd {

struct QuadResult {
    Cx value;
    double error;
    int intervals;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
QuadResult integrate_gk(const std::function<Cx(double)>& f, double a, double b, double abs_tol = 1e-13,
                        double rel_tol = 1e-11, int max_intervals = 2000);

using State2 = std::array<Cx, 2>;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    double h0 = 0.0;  // 0 picks a step from the interval length
    int max_steps = 200000;
};

struct OdePoint {
    double x;
    State2 y;
};

// Dormand-Prince 5(4) with embedded error control; returns every accepted step,
// starting with (x0, y0).  Works in either direction.
std::vector<OdePoint> dopri5(const std::function<State2(double, const State2&)>& rhs, double x0, double x1,
                             const State2& y0, const OdeOptions& opt = {});

// Bisection on a bracketing interval; f(a) and f(b) must differ in sign.
double bisect(const std::function<double(double)>& f, double a, double b, double xtol = 0.0,
              int max_iter = 200);

}  // namespace dd
