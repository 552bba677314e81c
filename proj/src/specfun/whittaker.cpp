#include "vgp/errors.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace vgp {

// W_{κ,μ}(z) = e^{-z/2} z^κ / Γ(a) ∫_0^∞ e^{-u} u^{a-1} (1 + u/z)^{μ+κ-1/2} du,  a = 1/2 + μ - κ,
// valid for Re a > 0 and |arg z| < π.
std::complex<double> whittaker_w(double kappa, double mu, std::complex<double> z)
{
    if (z == 0.0) throw DomainError("whittaker_w: z = 0");
    if (z.imag() == 0.0 && z.real() < 0) throw DomainError("whittaker_w: z on the branch cut");
    mu = std::abs(mu);  // W is even in μ; the larger a is the better conditioned choice
    const double a = 0.5 + mu - kappa;
    if (!(a > 0)) throw DomainError("whittaker_w: parameters outside the integral representation");
    const double c = mu + kappa - 0.5;
    const double rz = std::abs(z);

    auto log_mag = [&](double u) {
        return -u + (a - 1.0) * std::log(std::max(u, 1e-300)) + c * std::log(std::abs(1.0 + u / z));
    };
    double upper = 10.0 + 2.0 * a;
    double peak = -1e300;
    for (;;) {
        for (int k = 1; k <= 64; ++k) peak = std::max(peak, log_mag(upper * k / 64.0));
        if (log_mag(upper) < peak - 42.0) break;
        upper *= 1.5;
    }

    QuadConfig cfg;
    cfg.abs_tol = 0.0;
    cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 4000;
    QuadResult<std::complex<double>> r;
    if (a >= 1.0) {
        for (double p : {rz, 10.0 * rz})
            if (p < upper) cfg.singularity_pads.push_back(p);
        r = integrate([&](double u) { return std::exp(-u) * std::pow(u, a - 1.0) * std::pow(1.0 + u / z, c); },
                      0.0, upper, cfg);
    } else {
        // u = v^{1/a} removes the algebraic endpoint singularity
        const double vmax = std::pow(upper, a);
        for (double p : {rz, 10.0 * rz})
            if (p < upper) cfg.singularity_pads.push_back(std::pow(p, a));
        r = integrate(
            [&](double v) {
                const double u = std::pow(v, 1.0 / a);
                return std::exp(-u) * std::pow(1.0 + u / z, c) / a;
            },
            0.0, vmax, cfg);
    }
    if (!r.converged) throw ConvergenceError("whittaker_w: quadrature did not converge");
    return std::exp(-0.5 * z) * std::pow(z, kappa) * r.value / boost::math::tgamma(a);
}

}  // namespace vgp
