#include "vgp/errors.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/expint.hpp>

#include <cmath>
#include <numbers>

namespace vgp {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;

// E1(z) = e^{-z} / (z + 1 - 1²/(z + 3 - 2²/(z + 5 - ...))), modified Lentz
std::complex<double> e1_fraction(std::complex<double> z)
{
    const double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
    }
    throw ConvergenceError("expint_e1: continued fraction did not converge");
}

std::complex<double> e1_series(std::complex<double> z)
{
    std::complex<double> sum = 0.0, term = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= -z / static_cast<double>(k);
        const std::complex<double> add = term / static_cast<double>(k);
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return -kEuler - std::log(z) - sum;
}

}  // namespace

std::complex<double> expint_e1(std::complex<double> z)
{
    if (z == 0.0) throw DomainError("expint_e1: z = 0");
    if (z.imag() == 0.0 && z.real() < 0) throw DomainError("expint_e1: z on the branch cut");
    if (std::abs(z) < 2.0 || z.real() < 0) return e1_series(z);
    return e1_fraction(z);
}

SiCiE1 si_ci_e1(double x)
{
    if (!(x > 0)) throw DomainError("si_ci_e1: argument must be positive");
    SiCiE1 out{};
    out.e1 = boost::math::expint(1, x);
    if (x <= 4.0) {
        double si = 0.0, ci = 0.0, term = 1.0;  // term = x^k / k!
        for (int k = 1; k < 200; ++k) {
            term *= x / k;
            const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
            if (k % 2 == 1) si += sgn * term / k;
            else ci += sgn * term / k;
            if (term / k < 1e-18) break;
        }
        out.si = si;
        out.ci = kEuler + std::log(x) + ci;
        return out;
    }
    // E1(ix) = -Ci(x) + i(Si(x) - π/2)
    const std::complex<double> e = e1_fraction({0.0, x});
    out.ci = -e.real();
    out.si = e.imag() + 0.5 * std::numbers::pi;
    return out;
}

std::pair<double, double> sici_aux(double x)
{
    if (!(x > 0)) throw DomainError("sici_aux: argument must be positive");
    if (x <= 4.0) {
        const SiCiE1 s = si_ci_e1(x);
        const double si = s.si - 0.5 * std::numbers::pi;
        return {s.ci * std::sin(x) - si * std::cos(x), -s.ci * std::cos(x) - si * std::sin(x)};
    }
    // e^{ix} E1(ix) = g(x) - i f(x)
    const std::complex<double> w = e1_fraction({0.0, x}) * std::polar(1.0, x);
    return {-w.imag(), w.real()};
}

}  // namespace vgp
