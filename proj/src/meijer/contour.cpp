#include "vgp/errors.hpp"
#include "vgp/meijer.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace vgp {

RealResult g_contour_oracle_general(const MeijerParams& p, double x, double tol)
{
    using cd = std::complex<double>;
    if (!(x > 0)) throw DomainError("contour oracle: argument must be positive");
    const double bmin = *std::min_element(p.b.begin(), p.b.begin() + p.m);
    double amax = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < p.n; ++j) amax = std::max(amax, p.a[j] - 1.0);
    if (!(amax < bmin)) throw DomainError("contour oracle: no vertical line separates the poles");
    double c = bmin - 0.5;
    if (c <= amax) c = 0.5 * (amax + bmin);

    const double lnx = std::log(x);
    auto log_integrand = [&](double t) {
        const cd s(c, t);
        cd acc = s * lnx;
        for (int j = 0; j < p.m; ++j) acc += log_gamma(p.b[j] - s);
        for (int j = 0; j < p.n; ++j) acc += log_gamma(1.0 - p.a[j] + s);
        for (std::size_t j = p.m; j < p.b.size(); ++j) acc -= log_gamma(1.0 - p.b[j] + s);
        for (std::size_t j = p.n; j < p.a.size(); ++j) acc -= log_gamma(p.a[j] - s);
        return acc;
    };
    auto integrand = [&](double t) { return std::exp(log_integrand(t)).real(); };

    // march out until the integrand has decayed far below its size near the real axis
    const double ref = std::exp(log_integrand(0.0).real());
    double peak = ref;
    double upper = 1.0;
    for (;; upper += 1.0) {
        if (upper > 2000.0) throw ConvergenceError("contour oracle: integrand does not decay");
        const double mag = std::exp(log_integrand(upper).real());
        peak = std::max(peak, mag);
        if (mag < 1e-3 * tol * peak && upper > 4.0) break;
    }
    QuadConfig cfg;
    cfg.abs_tol = 1e-3 * tol * peak;
    cfg.rel_tol = 1e-3 * tol;
    cfg.max_subdivisions = 20000;
    for (double t = 1.0; t < upper; t += 1.0) cfg.singularity_pads.push_back(t);
    auto r = integrate(integrand, 0.0, upper, cfg);
    if (!r.converged) throw ConvergenceError("contour oracle: quadrature did not converge");
    const double trunc = std::exp(log_integrand(upper).real()) / (2.0 * std::numbers::pi);
    return {r.value / std::numbers::pi, (r.abs_err + trunc) / std::numbers::pi, Regime::Quadrature};
}

RealResult g_contour_oracle(const MeijerOrders& orders, double x, double tol)
{
    return g_contour_oracle_general(to_params(orders), x, tol);
}

}  // namespace vgp
