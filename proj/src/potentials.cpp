#include "dirac_darboux/potentials.hpp"

#include <cmath>

#include "dirac_darboux/errors.hpp"

namespace dd {

namespace {
constexpr double kEndpointGuard = 1e-10;
const Cx kI(0.0, 1.0);
}  // namespace

std::string to_string(Family f) { return f == Family::LambertW ? "LambertW" : "InvSqrtExp"; }

Family family_from_string(const std::string& s) {
    if (s == "LambertW" || s == "lambert") return Family::LambertW;
    if (s == "InvSqrtExp" || s == "exp") return Family::InvSqrtExp;
    throw ConfigError("unknown family '" + s + "'");
}

void PotentialSpec::validate() const {
    if (V1 == 0.0) throw ConfigError("V1 must be nonzero");
    if (sigma == 0.0) throw ConfigError("sigma must be nonzero");
    if (mirror && !singular) throw ConfigError("mirror requires singular");
    if (!std::isfinite(V0) || !std::isfinite(V1) || !std::isfinite(sigma) || !std::isfinite(x1))
        throw ConfigError("potential parameters must be finite");
}

bool Domain::contains(double x) const {
    double v = mirror ? std::abs(x) : x;
    return v > lo && v < hi;
}

double Domain::endpoint_distance(double x) const {
    double v = mirror ? std::abs(x) : x;
    return std::min(std::abs(v - lo), std::abs(hi - v));
}

Domain domain(const PotentialSpec& spec) {
    Domain d;
    d.mirror = spec.mirror;
    if (!spec.singular) return d;
    // Lambert: 1 + W0(-e^s) -> 0 at s = -1; exponential: 1 - e^s -> 0 at s = 0.
    double edge = spec.family == Family::LambertW ? spec.x1 - spec.sigma : spec.x1;
    if (spec.sigma < 0.0)
        d.lo = edge;
    else
        d.hi = edge;
    return d;
}

void require_in_domain(const PotentialSpec& spec, double x) {
    Domain d = domain(spec);
    if (!std::isfinite(x) || !d.contains(x))
        throw DomainError("x = " + std::to_string(x) + " outside the potential domain");
    if (d.endpoint_distance(x) < kEndpointGuard)
        throw DomainError("x = " + std::to_string(x) + " too close to the singular point");
}

InnerVar inner_variable(const PotentialSpec& spec, double xt) {
    double s = (xt - spec.x1) / spec.sigma;
    if (spec.family == Family::LambertW) {
        double z = spec.singular ? lambert_w0_negexp(s) : lambert_w0_exp(s);
        return {z, z / (spec.sigma * (1.0 + z)), z - 1.0};
    }
    double z;
    double es;  // +-exp(s), i.e. z^2 - 1
    if (spec.singular) {
        es = -std::exp(s);
        z = std::sqrt(-std::expm1(s));
    } else if (s > 0.0) {
        es = std::exp(s);
        z = std::exp(0.5 * s) * std::sqrt(1.0 + std::exp(-s));
    } else {
        es = std::exp(s);
        z = std::sqrt(1.0 + es);
    }
    return {z, es / (2.0 * spec.sigma * z), es / (z + 1.0)};
}

double eval_u0(const PotentialSpec& spec, double x) {
    require_in_domain(spec, x);
    double xt = spec.mirror ? std::abs(x) : x;
    double z = inner_variable(spec, xt).z;
    if (spec.family == Family::LambertW) return spec.V0 + spec.V1 / (1.0 + z);
    return spec.V0 + spec.V1 / z;
}

double eval_u0_dx(const PotentialSpec& spec, double x) {
    require_in_domain(spec, x);
    double xt = spec.mirror ? std::abs(x) : x;
    InnerVar iv = inner_variable(spec, xt);
    double d;
    if (spec.family == Family::LambertW)
        d = -spec.V1 / ((1.0 + iv.z) * (1.0 + iv.z)) * iv.dz;
    else
        d = -spec.V1 / (iv.z * iv.z) * iv.dz;
    return spec.mirror && x < 0.0 ? -d : d;
}

LambertAbbrevs lambert_abbrevs(const PotentialSpec& spec, const ModeParams& mode) {
    const double k2 = mode.ky * mode.ky;
    const double e0 = mode.E - spec.V0;
    const double e1 = mode.E - spec.V0 - spec.V1;
    LambertAbbrevs a;
    a.K0 = csqrt(k2 - e0 * e0);
    a.K1 = csqrt(k2 - e1 * e1);
    if (std::abs(a.K0) < 1e-14) throw SingularityError("K0 = 0 in the Lambert abbreviations");
    const double s = spec.sigma;
    a.alpha = s * ((a.K0 + a.K1) * (a.K0 + a.K1) + spec.V1 * spec.V1) / (2.0 * a.K0);
    a.gamma = 2.0 * s * a.K1;
    a.delta = 2.0 * s * (a.K1 - kI * spec.V1);
    a.s0 = 2.0 * s * a.K0;
    return a;
}

ExpAbbrevs exp_abbrevs(const PotentialSpec& spec, const ModeParams& mode) {
    const double k2 = mode.ky * mode.ky;
    const double s = spec.sigma;
    const double ep = mode.E - spec.V0 + spec.V1;
    const double em = mode.E - spec.V0 - spec.V1;
    const double e0 = mode.E - spec.V0;
    ExpAbbrevs a;
    a.alpha1 = s * csqrt(k2 - ep * ep);
    a.alpha2 = s * csqrt(k2 - em * em);
    Cx K = csqrt(k2 - e0 * e0);
    a.q = 2.0 * kI * s * spec.V1 - a.alpha1 + a.alpha2;
    a.gamma = 2.0 * a.alpha1 + 1.0;
    a.beta = 2.0 * s * K + a.alpha1 + a.alpha2;
    a.alpha = -2.0 * s * K + a.alpha1 + a.alpha2;
    return a;
}

}  // namespace dd
