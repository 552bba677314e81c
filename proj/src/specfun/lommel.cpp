#include "vgp/errors.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace vgp {

double lommel_t_normalized(double mu, double nu, double x)
{
    if (!(x > 0)) throw DomainError("lommel_t: argument must be positive");
    const double a = 0.5 * (mu - nu + 3.0), b = 0.5 * (mu + nu + 3.0);
    if (!(a > 0 && b > 0)) throw DomainError("lommel_t: parameters outside the supported range");
    const double h = 0.5 * x, h2 = h * h;
    double term = std::exp((mu + 1.0) * std::log(h) - boost::math::lgamma(a) - boost::math::lgamma(b));
    double sum = term;
    for (int k = 0; k < 5000; ++k) {
        term *= h2 / ((k + a) * (k + b));
        sum += term;
        if (k > h && term < 1e-17 * sum) return sum;
    }
    throw ConvergenceError("lommel_t: series did not converge");
}

LommelPair lommel_g(double mu, double nu, double x)
{
    if (!(x > 0)) throw DomainError("lommel_g: argument must be positive");
    nu = std::abs(nu);  // G_{μ,ν} depends on ν only through K_ν = K_{-ν}
    if (!(mu >= nu))
        throw DomainError("lommel_g: need mu >= |nu|, got mu = " + std::to_string(mu) +
                          ", nu = " + std::to_string(nu));
    if (x > 600.0) return {1.0, 0.0};
    const double g = x * (bessel_k(nu, x) * lommel_t_normalized(mu - 1.0, nu - 1.0, x) +
                          bessel_k(nu - 1.0, x) * lommel_t_normalized(mu, nu, x));
    return {g, std::max(0.0, 1.0 - g)};
}

double lommel_g_upper(double mu, double nu, double x)
{
    const LommelPair p = lommel_g(mu, nu, std::min(x, 600.0));
    if (x <= 600.0 && p.gt > 1e-3) return p.gt;
    nu = std::abs(nu);
    // e^{-x} x^μ ∫_0^∞ (1 + u/x)^μ e^{-u} [e^t K_ν(t)]_{t=x+u} du
    auto f = [&](double u) { return std::exp(mu * std::log1p(u / x) - u) * bessel_k_scaled(nu, x + u); };
    QuadConfig c;
    c.rel_tol = 1e-13;
    c.abs_tol = 0.0;
    const double integral = integrate_to_infinity(f, 0.0, c).value;
    const double log_norm = (mu - 1.0) * std::log(2.0) + boost::math::lgamma(0.5 * (1.0 + mu + nu)) +
                            boost::math::lgamma(0.5 * (1.0 + mu - nu));
    return std::exp(mu * std::log(x) - x - log_norm) * integral;
}

}  // namespace vgp
