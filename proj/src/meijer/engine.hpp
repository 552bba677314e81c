#pragma once

#include "vgp/meijer.hpp"

#include <vector>

namespace vgp::meijer_detail {

// One Γ factor of the Mellin-Barnes integrand, seen from the poles of one group.
// Its argument at s = base + k + ε is c0 + dir*k + dir*ε with c0 = k0 - dir*(param - base);
// power is +1 (numerator) or -1.
struct Factor {
    int dir = 1;
    int power = 1;
    double param_base = 0.0;  // parameter = param_base + param_offset
    long param_offset = 0;
    double k0 = 0.0;
    double c0 = 0.0;
    bool integral = false;
    long n0 = 0;
};

struct GroupPlan {
    double base = 0.0;
    int order_cap = 1;
    int max_offset = 0;
    std::vector<Factor> factors;
};

struct Plan {
    std::vector<GroupPlan> groups;
};

Plan make_plan(const MeijerParams& p);

struct TierOutcome {
    double value = 0.0;
    double abs_sum = 0.0;  // Σ|terms|
    double tail = 0.0;     // size of the last retained terms
    double eps = 0.0;
    int terms = 0;
    bool converged = false;
};

TierOutcome run_double(const Plan& plan, double x, double log_x, double log_scale, int max_terms);
TierOutcome run_long_double(const Plan& plan, double x, double log_x, double log_scale, int max_terms);
TierOutcome run_mp50(const Plan& plan, double x, double log_x, double log_scale, int max_terms);
TierOutcome run_mp100(const Plan& plan, double x, double log_x, double log_scale, int max_terms);

}  // namespace vgp::meijer_detail
