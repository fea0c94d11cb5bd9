#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirac_darboux/potentials.hpp"

namespace dd {

enum class ConditionId { LamAlpha, ExpAlpha, ExpBeta, ExpGamma1, ExpGamma2 };

std::string to_string(ConditionId c);
ConditionId condition_from_string(const std::string& s);

struct ElementaryRoot {
    ConditionId condition;
    int n = 0;
    std::vector<double> roots;  // positive k_y; negatives follow by evenness
};

// Inclusive integer range; hi empty means unbounded above.
struct IntRange {
    int lo = 0;
    std::optional<int> hi;
    bool empty() const { return hi && *hi < lo; }
    bool contains(int n) const { return n >= lo && (!hi || n <= *hi); }
};

// Left-hand side of each condition at E = 0; the right-hand side is condition_target.
double condition_value(const PotentialSpec& spec, ConditionId c, double ky);
double condition_target(ConditionId c, int n);
// Lower bound of |k_y|; the domain is the open set |k_y| > bound.
double ky_domain_bound(const PotentialSpec& spec, ConditionId c);

double alpha_of_ky(const PotentialSpec& spec, double ky);        // Lambert alpha or exponential alpha
double beta_of_ky(const PotentialSpec& spec, double ky);         // exponential beta
double gamma_combo_of_ky(const PotentialSpec& spec, int which, double ky);  // which = 1 or 2

// Supremum/infimum of the condition function over its k_y-domain.
struct ConditionRange {
    double inf;
    double sup;
    bool has_interior_max = false;
    double k_at_max = 0.0;
};
ConditionRange condition_range(const PotentialSpec& spec, ConditionId c);

IntRange admissible_n(const PotentialSpec& spec, ConditionId c);
ElementaryRoot solve_ky(const PotentialSpec& spec, ConditionId c, int n);

// Conditions whose sign precondition holds for this spec's family.
std::vector<ConditionId> applicable_conditions(const PotentialSpec& spec);

// Smallest n >= 0 (or >= 1 for ExpBeta) the condition allows at all.
int condition_n_floor(ConditionId c);

// Closed-form peak of the Lambert alpha when it has an interior maximum.
double lambert_alpha_max_formula(const PotentialSpec& spec);
// Closed-form supremum of the monotone Lambert alpha.
double lambert_alpha_sup_formula(const PotentialSpec& spec);

// Does |ky| satisfy c for some admissible integer n (residual < tol)?
std::optional<int> matching_n(const PotentialSpec& spec, ConditionId c, double ky, double tol = 1e-9);

}  // namespace dd
