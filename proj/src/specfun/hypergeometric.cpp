#include "vgp/errors.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace vgp {

namespace {

bool nonpositive_integer(double c) { return c <= 0 && c == std::floor(c); }

double series_2f1(double a, double b, double c, double x, int max_terms)
{
    double term = 1.0, sum = 1.0, comp = 0.0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        // Kahan summation
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term == 0.0 || (std::abs(term) < 1e-17 * std::abs(sum) && k > 2)) return sum;
    }
    throw ConvergenceError("gauss_2f1: series did not converge");
}

double rgamma(double a) { return nonpositive_integer(a) ? 0.0 : 1.0 / boost::math::tgamma(a); }

// 0.75 < x < 1
double near_one(double a, double b, double c, double x)
{
    const double s = c - a - b;
    if (std::abs(s - std::round(s)) > 0.05) {
        // connection formula to 1 - x
        const double y = 1.0 - x;
        const double t1 = boost::math::tgamma(c) * boost::math::tgamma(s) * rgamma(c - a) * rgamma(c - b) *
                          series_2f1(a, b, a + b - c + 1.0, y, 100000);
        const double t2 = std::pow(y, s) * boost::math::tgamma(c) * boost::math::tgamma(-s) * rgamma(a) * rgamma(b) *
                          series_2f1(c - a, c - b, s + 1.0, y, 100000);
        return t1 + t2;
    }
    // Euler integral when one numerator parameter sits between 0 and c
    for (int swap = 0; swap < 2; ++swap) {
        const double p = swap ? b : a, q = swap ? a : b;
        if (c > p && p > 0) {
            const double norm = boost::math::tgamma(c) * rgamma(p) * rgamma(c - p);
            auto r = integrate_singular(
                [&](double t) { return std::pow(t, p - 1.0) * std::pow(1.0 - t, c - p - 1.0) * std::pow(1.0 - x * t, -q); },
                0.0, 1.0, QuadConfig{0.0, 1e-14, 2000, {}});
            return norm * r.value;
        }
    }
    return series_2f1(a, b, c, x, 2000000);
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x)
{
    if (nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a nonpositive integer");
    if (!(std::abs(x) < 1.0)) throw DomainError("gauss_2f1: |x| must be < 1");
    if (x == 0.0) return 1.0;
    if (x < -0.5) {
        // Pfaff: (1-x)^{-a} 2F1(a, c-b; c; x/(x-1))
        return std::pow(1.0 - x, -a) * gauss_2f1(a, c - b, c, x / (x - 1.0));
    }
    if (x <= 0.75) return series_2f1(a, b, c, x, 100000);
    return near_one(a, b, c, x);
}

}  // namespace vgp
