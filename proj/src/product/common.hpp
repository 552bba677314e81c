#pragma once

#include "vgp/errors.hpp"
#include "vgp/meijer.hpp"
#include "vgp/product.hpp"
#include "vgp/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace vgp::product_detail {

// m = k + 1/2 with k a non-negative integer
inline bool half_index(double m, int& k)
{
    const double t = m - 0.5;
    const double r = std::round(t);
    if (r < 0 || std::abs(t - r) > 1e-12 || r > 200) return false;
    k = static_cast<int>(r);
    return true;
}

inline double log_factorial(int k) { return std::lgamma(k + 1.0); }

// ln of γ₁^{2m+1} γ₂^{2n+1} / (4π α₁^{2m} α₂^{2n} Γ(m+1/2) Γ(n+1/2))
inline double log_series_prefactor(const ProductDist& d)
{
    const VGParams& x = d.px;
    const VGParams& y = d.py;
    return (x.m + 0.5) * std::log(x.gamma2()) + (y.m + 0.5) * std::log(y.gamma2()) -
           std::log(4.0 * std::numbers::pi) - 2.0 * x.m * std::log(x.alpha) - 2.0 * y.m * std::log(y.alpha) -
           log_gamma(x.m + 0.5) - log_gamma(y.m + 0.5);
}

// ln of γ₁^{2m+1} γ₂^{2n+1} / ((2α₁)^{m+1/2} (2α₂)^{n+1/2} Γ(m+1/2) Γ(n+1/2)), the finite-sum prefactor
inline double log_finite_prefactor(const ProductDist& d)
{
    const VGParams& x = d.px;
    const VGParams& y = d.py;
    return (x.m + 0.5) * std::log(x.gamma2() / (2.0 * x.alpha)) +
           (y.m + 0.5) * std::log(y.gamma2() / (2.0 * y.alpha)) - log_gamma(x.m + 0.5) - log_gamma(y.m + 0.5);
}

inline MeijerOptions series_options(const ProductDist& d, double log_weight, double abs_floor = 0.0)
{
    MeijerOptions o;
    o.rel_tol = std::max(0.1 * d.policy.series_tol, 1e-15);
    o.abs_tol = abs_floor;
    o.log_scale = log_weight;
    return o;
}

// Sum over the (i, j) index set of the density series. `term(b, log_weight, sign, abs_floor)` returns
// the weighted G value for the lower parameters b = (j/2, i - j/2, m + j/2, n + i - j/2); abs_floor is
// the absolute accuracy a single term needs given the sum so far.
template <class Term>
RealResult sum_series(const ProductDist& d, double z, Term&& term)
{
    const double m = d.px.m, n = d.py.m;
    const double u = 2.0 * d.px.beta / d.px.alpha;
    const double v = 2.0 * d.py.beta / d.py.alpha;
    const double s = (z > 0) ? 1.0 : -1.0;
    const double lp = log_series_prefactor(d);

    RealResult out;
    out.regime = Regime::Series;
    if (u == 0.0 && v == 0.0) {
        const RealResult r = term(std::array<double, 4>{0.0, 0.0, m, n}, lp, 1.0, 0.0);
        out.value = r.value;
        out.abs_err = r.abs_err;
        return out;
    }

    const double tol = d.policy.series_tol;
    const double lu = (u != 0.0) ? std::log(std::abs(u)) : 0.0;
    const double lv = (v != 0.0) ? std::log(std::abs(v)) : 0.0;
    const double su = (u < 0) ? -1.0 : 1.0, sv = (v < 0) ? -1.0 : 1.0;
    double acc = 0.0, err = 0.0, last = 0.0;
    int quiet = 0;
    for (int i = 0; i <= d.policy.max_terms; ++i) {
        double outer = 0.0, outer_abs = 0.0;
        const double floor = 0.01 * tol * std::abs(acc);
        const int jlo = (u == 0.0) ? 0 : ((v == 0.0) ? 2 * i : 0);
        const int jhi = (v == 0.0) ? 2 * i : ((u == 0.0) ? 0 : 2 * i);
        for (int j = jlo; j <= jhi; ++j) {
            const int k = 2 * i - j;
            const double lw = lp + j * lu + k * lv - log_factorial(j) - log_factorial(k);
            const double sign = ((j % 2) ? s * su : 1.0) * ((k % 2) ? sv : 1.0);
            const std::array<double, 4> b{0.5 * j, i - 0.5 * j, m + 0.5 * j, n + i - 0.5 * j};
            const RealResult r = term(b, lw, sign, floor);
            outer += r.value;
            outer_abs += std::abs(r.value);
            err += r.abs_err;
        }
        acc += outer;
        last = outer_abs;
        if (i >= 2 && outer_abs <= tol * std::abs(acc)) {
            if (++quiet >= 3) {
                out.value = acc;
                out.abs_err = err + last;
                return out;
            }
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("product series: outer sum did not settle within max_terms");
}

}  // namespace vgp::product_detail
