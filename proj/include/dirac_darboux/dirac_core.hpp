#pragma once

#include <vector>

#include "dirac_darboux/potentials.hpp"

namespace dd {

struct ScalarSolution {
    Cx value;
    Cx dx;
    // Every hypergeometric series in the value reduced to a polynomial.
    bool terminating = false;
};

struct SpinorSample {
    double x = 0.0;
    Cx psi1, psi1_dx, psi2, psi2_dx, psia, psib;
    Cx psia_dx() const { return psi1_dx + psi2_dx; }
    Cx psib_dx() const { return psi1_dx - psi2_dx; }
};

// Closed-form solution of the decoupled second-order equation for the
// upper scalar channel.  When gamma is a nonpositive integer the Lambert
// solution is divided by Gamma(gamma) so that it stays finite.
ScalarSolution psi1(const PotentialSpec& spec, const ModeParams& mode, double x);

// Lower channel from the first-order system; psi1_dx is d/dx at x.
ScalarSolution psi2(const PotentialSpec& spec, const ModeParams& mode, double x, Cx psi1_val,
                    Cx psi1_dx);

SpinorSample spinor(const PotentialSpec& spec, const ModeParams& mode, double x);

struct GridSample {
    double x;
    Cx f;
};

// Scaled 5-point residual of f'' + ((u0-E)^2 - k^2 + sign*i*u0') f on a uniform grid.
double sse_residual(const PotentialSpec& spec, const ModeParams& mode,
                    const std::vector<GridSample>& f, int sign);

}  // namespace dd
