#include "vgp/meijer.hpp"
#include "vgp/specfun.hpp"

#include <boost/math/special_functions/factorials.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace vgp {

namespace {

constexpr double kPi = std::numbers::pi;

double fact(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

MeijerOptions tight()
{
    MeijerOptions o;
    o.rel_tol = 1e-14;
    return o;
}

double close1_rhs(double x, double c, int a, int b)
{
    const double y = 4.0 * std::pow(x, 0.25);
    double s = 0.0;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
            s += std::pow(4.0, -(i + j)) * fact(a + i) / (fact(i) * fact(a - i)) * fact(b + j) /
                 (fact(j) * fact(b - j)) * std::pow(x, 0.25 * (a + b - i - j)) * bessel_k(a - b - i + j, y);
    return 4.0 * kPi * std::pow(x, c) * s;
}

double close2_rhs(double x, double c, int a, int b)
{
    const double y = 4.0 * std::pow(x, 0.25);
    double s = 0.0;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
            s += std::pow(2.0, -(a + b + i + j)) * fact(a + i) / fact(i) * fact(b + j) / fact(j) *
                 lommel_g(a + b + 1 - i - j, a - b - i + j, y).g;
    return kPi * std::pow(x, c) * s;
}

struct Tracker {
    IdentityResidual r;
    void add(double lhs, double rhs, double imag = 0.0)
    {
        const double rel = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
        r.max_rel = std::max(r.max_rel, rel);
        r.max_imag = std::max(r.max_imag, imag);
        ++r.points;
    }
};

}  // namespace

std::vector<IdentityResidual> reduction_residuals(const std::vector<double>& x_grid)
{
    std::vector<IdentityResidual> out;
    const MeijerOptions opt = tight();
    auto run = [&](const char* name, const std::function<void(Tracker&, double)>& body) {
        Tracker t;
        t.r.name = name;
        for (double x : x_grid) body(t, x);
        out.push_back(t.r);
    };

    run("close1", [&](Tracker& t, double x) {
        for (auto [c, a, b] : {std::tuple{0.2, 1, 2}, std::tuple{-0.3, 0, 1}, std::tuple{0.0, 2, 0}})
            t.add(g40_04(x, {c, c, c + a + 0.5, c + b + 0.5}, opt).value, close1_rhs(x, c, a, b));
    });
    run("close2", [&](Tracker& t, double x) {
        for (auto [c, a, b] : {std::tuple{0.1, 1, 1}, std::tuple{0.1, 2, 1}, std::tuple{-0.2, 0, 2}})
            t.add(g41_15(x, c + 1.0, {c + 0.5, c + 0.5, c + a + 1.0, c + b + 1.0, c}, opt).value,
                  close2_rhs(x, c, a, b));
    });
    run("close3", [&](Tracker& t, double x) {
        for (double c : {0.0, 0.25}) {
            const double y = 4.0 * std::pow(x, 0.25);
            t.add(g41_15(x, c + 1.0, {c + 0.5, c + 0.5, c + 1.0, c + 1.0, c}, opt).value,
                  kPi * std::pow(x, c) * (1.0 - y * bessel_k(1, y)));
        }
    });
    run("redm0", [&](Tracker& t, double x) {
        const double a = 0.3, b = 0.1;
        t.add(g40_04(x, {a, a + 0.5, b, b + 0.5}, opt).value,
              4.0 * kPi * std::pow(x, 0.5 * (a + b)) * bessel_k(2.0 * (a - b), 4.0 * std::pow(x, 0.25)));
    });
    run("redm", [&](Tracker& t, double x) {
        for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.2, 0.45}}) {
            // (-x)^{1/4} = x^{1/4} e^{iπ/4} and (-1)^{-1/4} = e^{-iπ/4} on principal branches
            const double y = std::pow(2.0, 1.5) * std::pow(x, 0.25);
            const std::complex<double> k1 = bessel_k(2.0 * (b - a), std::polar(y, kPi / 4));
            const std::complex<double> k2 = bessel_k(2.0 * (b - a), std::polar(y, -kPi / 4));
            const std::complex<double> rhs = 8.0 * std::sqrt(kPi) * std::pow(x, a) * k1 * k2;
            t.add(g40_04(x, {a, a + 0.5, 2.0 * a - b, b}, opt).value, rhs.real(),
                  std::abs(rhs.imag()) / std::abs(rhs.real()));
        }
    });
    run("g300", [&](Tracker& t, double x) {
        const double a = 0.0, b = 0.2;
        const auto [j, y] = bessel_j_y(b - a, std::sqrt(x));
        t.add(g31_13(x, a + 0.5, {b, 2.0 * a - b, a}, opt).value,
              std::pow(kPi, 2.5) * std::pow(x, a) / (2.0 * std::cos((b - a) * kPi)) * (j * j + y * y));
    });
    run("g30", [&](Tracker& t, double x) {
        const double a = 0.1;
        t.add(g31_13(x, a + 0.5, {a + 0.5, -a, a}, opt).value,
              kPi * kPi / std::cos(2.0 * kPi * a) * struve_k(2.0 * a, 2.0 * std::sqrt(x)));
    });
    run("g301", [&](Tracker& t, double x) {
        const double a = 0.6, b = 0.1;
        t.add(g31_13(x, a, {b, a - 0.5, a}, opt).value,
              kPi * kPi / std::sin((a - b) * kPi) * std::pow(x, 0.25 * (2.0 * a + 2.0 * b - 1.0)) *
                  struve_k(a - b - 0.5, 2.0 * std::sqrt(x)));
    });
    run("meijergidentity", [&](Tracker& t, double x) {
        const double d = 0.3;
        t.add(std::pow(x, d) * g40_04(x, {0.0, 0.25, 0.5, 1.0}, opt).value,
              g40_04(x, {d, 0.25 + d, 0.5 + d, 1.0 + d}, opt).value);
        t.add(std::pow(x, d) * g41_15(x, 0.5, {0.0, 0.0, 0.7, 1.2, -0.5}, opt).value,
              g41_15(x, 0.5 + d, {d, d, 0.7 + d, 1.2 + d, -0.5 + d}, opt).value);
    });
    run("lukeformula", [&](Tracker& t, double x) {
        const double m = 0.3, n = 0.7;
        MeijerParams big{4, 1, {0.5, 0.0}, {0.0, 0.0, m, n}};
        t.add(meijer_g_general(big, x, opt).value, g31_13(x, 0.5, {0.0, m, n}, opt).value);
    });
    return out;
}

}  // namespace vgp
