#include "vgp/specfun.hpp"
#include "vgp/errors.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace vgp {

namespace {

bool is_pole(double x) { return x <= 0 && x == std::floor(x); }

void check_pole(double x, const char* fn)
{
    if (is_pole(x))
        throw DomainError(std::string(fn) + ": pole at nonpositive integer " + std::to_string(x));
}

// B_{2k}/(2k(2k-1)), k = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,          -1.0 / 360.0,          1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,     1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

std::complex<double> log_gamma_right(std::complex<double> z)
{
    // shift into the Stirling region
    std::complex<double> shift = 0.0;
    while (std::abs(z) < 17.0 || z.real() < 8.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series = 0.0, p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

}  // namespace

double gamma_fn(double x)
{
    check_pole(x, "gamma");
    try {
        return boost::math::tgamma(x);
    } catch (const std::overflow_error&) {
        throw OverflowError("gamma: overflow at x = " + std::to_string(x));
    }
}

double log_gamma(double x)
{
    check_pole(x, "log_gamma");
    return boost::math::lgamma(x);
}

int gamma_sign(double x)
{
    check_pole(x, "gamma_sign");
    if (x > 0) return 1;
    return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

double digamma(double x)
{
    check_pole(x, "digamma");
    return boost::math::digamma(x);
}

double polygamma(int n, double x)
{
    check_pole(x, "polygamma");
    if (n == 0) return boost::math::digamma(x);
    return boost::math::polygamma(n, x);
}

std::complex<double> log_gamma(std::complex<double> z)
{
    if (z.imag() == 0.0 && is_pole(z.real()))
        throw DomainError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection; ln sin(πz) written so that it stays finite for large |Im z|
    const bool flip = z.imag() < 0;
    const std::complex<double> w = std::numbers::pi * (flip ? std::conj(z) : z);
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> log_sin = -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(0.5 * i);
    if (flip) log_sin = std::conj(log_sin);
    return std::log(std::numbers::pi) - log_sin - log_gamma_right(1.0 - z);
}

std::complex<double> gamma_fn(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace vgp
