#include "vgp/errors.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace vgp {

namespace {

constexpr double kSeriesLimit = 8.0;

bool gamma_pole(double a) { return a <= 0 && a == std::floor(a); }

// 1/Γ(a), zero at the poles
double rgamma(double a)
{
    if (gamma_pole(a)) return 0.0;
    return 1.0 / boost::math::tgamma(a);
}

// ∫_0^∞ e^{-xt}(1+t²)^{ν-1/2} dt scaled into 𝐊_ν; needs ν > -1/2
double struve_k_laplace(double nu, double x)
{
    const double c = nu - 0.5;
    const double upper = 60.0 + 4.0 * std::abs(c) * std::log1p(std::abs(c) + 60.0 / x) + 10.0;
    auto f = [&](double u) {
        const double t = u / x;
        return std::exp(-u + c * std::log1p(t * t));
    };
    QuadConfig cfg;
    cfg.abs_tol = 0.0;
    cfg.rel_tol = 1e-14;
    auto r = integrate(f, 0.0, upper, cfg);
    if (!r.converged) throw ConvergenceError("struve_k: quadrature did not converge");
    const double pref = 2.0 * std::pow(0.5 * x, nu) / (std::sqrt(std::numbers::pi) * boost::math::tgamma(nu + 0.5));
    return pref * r.value / x;
}

}  // namespace

double struve_h(double nu, double x)
{
    if (x < 0) throw DomainError("struve_h: negative argument");
    if (x == 0) {
        if (nu > -1) return 0.0;
        throw DomainError("struve_h: singular at 0 for this order");
    }
    const double lh = std::log(0.5 * x);
    double sum = 0.0;
    for (int k = 0; k < 2000; ++k) {
        const double a1 = k + 1.5, a2 = k + nu + 1.5;
        double term = 0.0;
        if (!gamma_pole(a2)) {
            const double mag = (2.0 * k + nu + 1.0) * lh - boost::math::lgamma(a1) - boost::math::lgamma(a2);
            double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            if (a2 < 0 && static_cast<long long>(std::floor(a2)) % 2 != 0) sgn = -sgn;
            term = sgn * std::exp(mag);
        }
        sum += term;
        if (k > x && std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("struve_h: series did not converge");
}

double struve_k(double nu, double x)
{
    if (!(x > 0)) throw DomainError("struve_k: argument must be positive");
    if (x <= kSeriesLimit) return struve_h(nu, x) - bessel_j_y(nu, x).second;
    if (nu > -0.5) return struve_k_laplace(nu, x);
    // recur downward from two admissible orders
    int steps = static_cast<int>(std::ceil(-0.5 - nu)) + 1;
    double hi = nu + steps + 1, lo = nu + steps;
    double k_hi = struve_k_laplace(hi, x), k_lo = struve_k_laplace(lo, x);
    for (int s = 0; s < steps; ++s) {
        const double v = lo;  // 𝐊_{v-1} = (2v/x)𝐊_v - 𝐊_{v+1} + (x/2)^v/(√π Γ(v+3/2))
        const double next = 2.0 * v / x * k_lo - k_hi +
                            std::pow(0.5 * x, v) * rgamma(v + 1.5) / std::sqrt(std::numbers::pi);
        k_hi = k_lo;
        k_lo = next;
        lo -= 1.0;
    }
    return k_lo;
}

}  // namespace vgp
