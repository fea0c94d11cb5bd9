#pragma once

#include <limits>
#include <string>

#include "dirac_darboux/specfun.hpp"

namespace dd {

enum class Family { LambertW, InvSqrtExp };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct PotentialSpec {
    Family family = Family::LambertW;
    double V0 = 0.0;
    double V1 = 1.0;
    double sigma = 1.0;
    double x1 = 0.0;
    bool singular = false;  // x0 = x1 + i*pi*sigma
    bool mirror = false;    // x -> |x|

    // Throws ConfigError when an invariant fails.
    void validate() const;
};

struct ModeParams {
    double E = 0.0;
    double ky = 0.0;
};

struct LambertAbbrevs {
    Cx K0, K1, alpha, gamma, delta, s0;
};

struct ExpAbbrevs {
    Cx alpha1, alpha2, q, gamma, beta, alpha;
};

// Open interval (lo, hi) for x, or for |x| when mirrored.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool mirror = false;

    bool contains(double x) const;
    // Distance of x (or |x|) to the nearest finite endpoint; +inf if none.
    double endpoint_distance(double x) const;
};

Domain domain(const PotentialSpec& spec);

// Inner variable z(x) and dz/dx at the base point x~ (already |x| for mirrors).
struct InnerVar {
    double z;
    double dz;   // d z / d x~
    double zm1;  // z - 1 without cancellation (exponential family)
};
InnerVar inner_variable(const PotentialSpec& spec, double xt);

double eval_u0(const PotentialSpec& spec, double x);
double eval_u0_dx(const PotentialSpec& spec, double x);

LambertAbbrevs lambert_abbrevs(const PotentialSpec& spec, const ModeParams& mode);
ExpAbbrevs exp_abbrevs(const PotentialSpec& spec, const ModeParams& mode);

// Throws DomainError when x is outside the domain or within 1e-10 of an endpoint.
void require_in_domain(const PotentialSpec& spec, double x);

}  // namespace dd
