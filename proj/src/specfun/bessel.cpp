#include "vgp/errors.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace vgp {

namespace {

bool half_integer(double nu, int& m)
{
    const double t = 2.0 * nu;
    if (t != std::floor(t) || std::fmod(t, 2.0) == 0.0) return false;
    m = static_cast<int>((t - 1.0) / 2.0);
    return true;
}

// Σ_{j=0}^m (m+j)!/((m-j)! j!) (2x)^{-j}
double halfint_sum(int m, double x)
{
    double term = 1.0, sum = 1.0;
    for (int j = 1; j <= m; ++j) {
        term *= static_cast<double>(m + j) * (m - j + 1) / (j * 2.0 * x);
        sum += term;
    }
    return sum;
}

}  // namespace

double bessel_k_halfint(int m, double x)
{
    if (!(x > 0)) throw DomainError("bessel_k: argument must be positive");
    if (m < 0) m = -m - 1;  // K_{-1/2-k} = K_{1/2+k}
    const double v = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * halfint_sum(m, x);
    if (!std::isfinite(v))
        throw OverflowError("bessel_k: overflow for order " + std::to_string(m + 0.5) + " at x = " +
                            std::to_string(x));
    return v;
}

double bessel_k(double nu, double x)
{
    if (!(x > 0)) throw DomainError("bessel_k: argument must be positive");
    nu = std::abs(nu);
    int m = 0;
    if (half_integer(nu, m)) return bessel_k_halfint(m, x);
    try {
        const double v = boost::math::cyl_bessel_k(nu, x);
        if (!std::isfinite(v)) throw std::overflow_error("K");
        return v;
    } catch (const std::overflow_error&) {
        throw OverflowError("bessel_k: overflow for order " + std::to_string(nu) + " at x = " +
                            std::to_string(x));
    }
}

double bessel_k_scaled(double nu, double x)
{
    if (!(x > 0)) throw DomainError("bessel_k_scaled: argument must be positive");
    nu = std::abs(nu);
    int m = 0;
    if (half_integer(nu, m)) return std::sqrt(std::numbers::pi / (2.0 * x)) * halfint_sum(m, x);
    if (x < 700.0) return std::exp(x) * bessel_k(nu, x);
    // Hankel expansion at orders ν0, ν0 + 1 with ν0 ∈ [0, 1), then upward recurrence (stable for K)
    auto hankel = [x](double v) {
        const double mu = 4.0 * v * v;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return std::sqrt(std::numbers::pi / (2.0 * x)) * sum;
    };
    const double v0 = nu - std::floor(nu);
    double k0 = hankel(v0), k1 = hankel(v0 + 1.0);
    for (double v = v0 + 1.0; v < nu - 0.5; v += 1.0) {
        const double k2 = k0 + 2.0 * v / x * k1;
        k0 = k1;
        k1 = k2;
    }
    return (nu < v0 + 0.5) ? k0 : k1;
}

std::complex<double> bessel_k(double nu, std::complex<double> z)
{
    if (!(z.real() > 0)) throw DomainError("bessel_k: complex argument needs Re z > 0");
    nu = std::abs(nu);
    // K_ν(z) = ∫_0^∞ exp(-z cosh t) cosh(νt) dt; the factor e^{-z} is pulled out
    const double rz = z.real();
    double upper = 1.0;
    while (rz * (std::cosh(upper) - 1.0) - nu * upper < 45.0) upper += 0.5;
    auto f = [&](double t) {
        const double c = std::cosh(t) - 1.0;
        return std::exp(-z * c) * std::cosh(nu * t);
    };
    QuadConfig cfg;
    cfg.abs_tol = 0.0;
    cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 4000;
    auto r = integrate(f, 0.0, upper, cfg);
    if (!r.converged) throw ConvergenceError("bessel_k: complex quadrature did not converge");
    return std::exp(-z) * r.value;
}

double bessel_j(double nu, double x)
{
    if (x < 0) throw DomainError("bessel_j: negative argument");
    if (x == 0 && nu < 0) throw DomainError("bessel_j: negative order at 0");
    return boost::math::cyl_bessel_j(nu, x);
}

std::pair<double, double> bessel_j_y(double nu, double x)
{
    if (!(x > 0)) throw DomainError("bessel_j_y: Y requires a positive argument");
    return {boost::math::cyl_bessel_j(nu, x), boost::math::cyl_neumann(nu, x)};
}

}  // namespace vgp
