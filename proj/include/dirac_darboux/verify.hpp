#pragma once

#include <functional>
#include <vector>

#include "dirac_darboux/darboux.hpp"
#include "dirac_darboux/numerics.hpp"

namespace dd {

struct OdeSetup {
    double x_start = 0.0;
    double x_end = 1.0;
    double tol = 1e-11;
};

struct OdeRun {
    double x_start = 0.0;
    double x_end = 0.0;
    Cx f0, df0;
    double tol = 0.0;
    std::vector<GridSample> samples;  // accepted steps, monotone in x
    Cx f_end, df_end;
};

// f'' + q(x) f = 0 from (f0, df0) at x0.
OdeRun integrate_linear2(const std::function<Cx(double)>& q, double x0, double x1, Cx f0, Cx df0, double tol);

// Decoupled equation with sign +1 (upper channel) or -1 (lower channel),
// seeded by the closed form at x_start.
OdeRun integrate_sse(const PotentialSpec& spec, const ModeParams& mode, int sign, const OdeSetup& setup);

// Relative deviation between the integrated trajectory and the closed form at x_end.
double ode_endpoint_error(const PotentialSpec& spec, const ModeParams& mode, int sign, const OdeSetup& setup);

struct DensitySetup {
    double cutoff = 60.0;
    double floor = 1e-12;  // relative to the peak
    int n_grid = 401;      // output samples per half-line
    double origin_offset = 1e-8;
};

struct DensityReport {
    double norm = 0.0;
    bool has_origin = false;
    double value_at_origin = 0.0;
    double origin_jump = 0.0;
    bool origin_finite = true;
    double tail_decay_rate = 0.0;
    bool integrable = false;
    std::vector<double> xs;
    std::vector<double> density;  // normalized to unit integral
};

DensityReport density_report(const std::function<double(double)>& rho, const Domain& d,
                             const DensitySetup& setup = {});
DensityReport density_report(const PotentialSpec& spec, const ModeParams& mode, const DensitySetup& setup = {});
DensityReport density_report(const PotentialSpec& spec, double E, const TransformSpec& t, const ModeParams& mode,
                             const DensitySetup& setup = {});

struct RefinementStudy {
    std::vector<double> h;
    std::vector<double> residual;
    double order = 0.0;  // smallest observed order between consecutive levels
};

RefinementStudy residual_refinement(const PotentialSpec& spec, const ModeParams& mode, int sign, double x_lo,
                                    double x_hi, const std::vector<double>& hs);

}  // namespace dd
