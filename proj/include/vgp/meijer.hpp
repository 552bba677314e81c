#pragma once

#include "vgp/result.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace vgp {

enum class MeijerKind { G40_04, G41_15, G31_13 };

struct MeijerOrders {
    MeijerKind kind = MeijerKind::G40_04;
    std::vector<double> a_params;
    std::vector<double> b_params;

    void validate() const;
};

// G^{m,n}_{p,q}(x | a; b) with a = (a_1..a_p), b = (b_1..b_q).
struct MeijerParams {
    int m = 0, n = 0;
    std::vector<double> a, b;
};

MeijerParams to_params(const MeijerOrders& o);

struct MeijerOptions {
    double rel_tol = 1e-13;
    double abs_tol = 0.0;
    int max_terms = 20000;
    double regime_threshold = 35.0;
    bool check_regime = true;
    // the result is multiplied by exp(log_scale) inside the extended-range arithmetic
    double log_scale = 0.0;
};

struct PoleGroup {
    double base = 0.0;
    std::vector<std::pair<int, int>> members;  // (b index, integer offset)
    int max_order() const { return static_cast<int>(members.size()); }
};

// Group the Γ(b_j - s) parameters that differ by integers.
std::vector<PoleGroup> pole_groups(std::span<const double> b);

// argument carried as its logarithm; needed once x drops below the double range
struct LogArg {
    double value;
};
// below this ln x the series runs on ln x instead of x
inline constexpr double kLogArgFloor = -660.0;

RealResult g40_04(LogArg x, const std::array<double, 4>& b, const MeijerOptions& opt = {});
RealResult g41_15(LogArg x, double a1, const std::array<double, 5>& b, const MeijerOptions& opt = {});
RealResult meijer_g_general(const MeijerParams& params, LogArg x, const MeijerOptions& opt = {});
RealResult g40_04(double x, const std::array<double, 4>& b, const MeijerOptions& opt = {});
RealResult g41_15(double x, double a1, const std::array<double, 5>& b, const MeijerOptions& opt = {});
RealResult g31_13(double x, double a1, const std::array<double, 3>& b, const MeijerOptions& opt = {});
RealResult meijer_g(const MeijerOrders& orders, double x, const MeijerOptions& opt = {});
// Residue series for any orders whose poles separate; the regime check uses q - p.
RealResult meijer_g_general(const MeijerParams& params, double x, const MeijerOptions& opt = {});

// Exponential scale of the residue series, (q-p) x^{1/(q-p)}.
double residue_scale(const MeijerParams& params, double x);

// Direct quadrature of the Mellin-Barnes integral along a vertical line.
RealResult g_contour_oracle(const MeijerOrders& orders, double x, double tol = 1e-12);
RealResult g_contour_oracle_general(const MeijerParams& params, double x, double tol = 1e-12);

struct IdentityResidual {
    std::string name;
    double max_rel = 0.0;
    double max_imag = 0.0;  // only meaningful for identities with complex intermediates
    int points = 0;
};

std::vector<IdentityResidual> reduction_residuals(const std::vector<double>& x_grid);

}  // namespace vgp
