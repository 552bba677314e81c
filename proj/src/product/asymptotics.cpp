#include "product/common.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace vgp {

using namespace product_detail;

TailLaw tail_combine(const TailLaw& f1, const TailLaw& f2)
{
    if (!(f1.a > 0 && f2.a > 0 && f1.b > 0 && f2.b > 0 && f1.A > 0 && f2.A > 0))
        throw DomainError("tail_combine: amplitudes, rates and exponents must be positive");
    const double s = f1.a + f2.a;
    TailLaw out;
    out.a = f1.a * f2.a / s;
    out.b = std::pow(f1.b, f2.a / s) * std::pow(f2.b, f1.a / s) *
            (std::pow(f1.a / f2.a, f2.a / s) + std::pow(f2.a / f1.a, f1.a / s));
    out.r = (f1.a * f2.a + 2.0 * f1.a * f2.r + 2.0 * f2.a * f1.r) / (2.0 * s);
    out.A = std::sqrt(2.0 * std::numbers::pi) * f1.A * f2.A / std::sqrt(s) *
            std::pow(f1.a * f1.b, (f2.a - 2.0 * f1.r + 2.0 * f2.r) / (2.0 * s)) *
            std::pow(f2.a * f2.b, (f1.a - 2.0 * f2.r + 2.0 * f1.r) / (2.0 * s));
    return out;
}

std::pair<TailForm, TailForm> product_tail_forms(const ProductDist& d, bool right)
{
    d.validate();
    const auto [xr, xl] = vg_tail_forms(d.px);
    const auto [yr, yl] = vg_tail_forms(d.py);
    auto form = [](const TailLaw& t) { return TailForm{t.A, t.r, t.b}; };
    if (right) return {form(tail_combine(xr, yr)), form(tail_combine(xl, yl))};
    return {form(tail_combine(xr, yl)), form(tail_combine(xl, yr))};
}

double tail_form_value(const TailForm& f, double z)
{
    return f.A * std::exp(f.r * std::log(z) - f.a * std::sqrt(z));
}

double product_tail_asymp(const ProductDist& d, double z)
{
    if (z == 0.0) throw DomainError("tail asymptotics need z != 0");
    const auto [f1, f2] = product_tail_forms(d, z > 0);
    const double az = std::abs(z);
    return tail_form_value(f1, az) + tail_form_value(f2, az);
}

namespace {

// e^{-λx} Σ_k c_k x^{ρ-k} as x → ∞
struct ExpSeries {
    double lambda = 1.0;
    double rho = 0.0;
    std::vector<double> c;
};

// density of X at ±x from the large-argument expansion of K_m
ExpSeries density_expansion(const VGParams& p, bool right, int order)
{
    ExpSeries e;
    e.lambda = right ? p.lambda_minus() : p.lambda_plus();
    e.rho = p.m - 0.5;
    double a = std::exp(vg_log_norm(p)) * std::sqrt(std::numbers::pi / (2.0 * p.alpha));
    const double mu = 4.0 * p.m * p.m;
    for (int k = 0; k <= order; ++k) {
        e.c.push_back(a);
        const double j = 2.0 * k + 1.0;
        a *= (mu - j * j) / ((k + 1.0) * 8.0 * p.alpha);
    }
    return e;
}

// ∫_y^∞ of a density expansion, term by term through Γ(c+1, λy) ~ (λy)^c e^{-λy} Σ_j c^{(j)} (λy)^{-j}
ExpSeries tail_expansion(const ExpSeries& f)
{
    ExpSeries t;
    t.lambda = f.lambda;
    t.rho = f.rho;
    const int n = static_cast<int>(f.c.size());
    t.c.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double fall = 1.0 / f.lambda;
        for (int j = 0; i + j < n; ++j) {
            t.c[i + j] += f.c[i] * fall;
            fall *= (f.rho - i - j) / f.lambda;
        }
    }
    return t;
}

// Σ_{i+k<=order} cx_i cy_k z^{ρy-k} ∫_0^∞ s^{ρx-i-ρy+k+shift-1} e^{-λx s - λy z/s} ds
double pair_integral(const ExpSeries& x, const ExpSeries& y, double z, int shift, double* last_order)
{
    const double lx = x.lambda, ly = y.lambda;
    const double c = 2.0 * std::sqrt(lx * ly * z);
    const double lr = std::log(ly * z / lx), lz = std::log(z);
    const int order = static_cast<int>(x.c.size()) - 1;
    double sum = 0.0, top = 0.0;
    for (int i = 0; i <= order; ++i) {
        for (int k = 0; i + k <= order; ++k) {
            const double w = x.c[i] * y.c[k];
            if (w == 0.0) continue;
            const double nu = x.rho - i - y.rho + k + shift;
            const double l = std::log(std::abs(w)) + (y.rho - k) * lz + std::numbers::ln2 + 0.5 * nu * lr +
                             std::log(bessel_k_scaled(nu, c)) - c;
            const double t = std::copysign(std::exp(l), w);
            sum += t;
            if (i + k == order) top += std::abs(t);
        }
    }
    if (last_order) *last_order += top;
    return sum;
}

// (X, Y) sign pairs feeding the right (z > 0) or left (z < 0) tail
std::array<std::pair<bool, bool>, 2> sign_pairs(bool right)
{
    if (right) return {{{true, true}, {false, false}}};
    return {{{true, false}, {false, true}}};
}

}  // namespace

RealResult product_tail_expansion(const ProductDist& d, double z, int order)
{
    d.validate();
    if (z == 0.0) throw DomainError("tail asymptotics need z != 0");
    if (order < 0) throw DomainError("expansion order must be non-negative");
    double sum = 0.0, err = 0.0;
    for (const auto& [sx, sy] : sign_pairs(z > 0)) {
        const ExpSeries fx = density_expansion(d.px, sx, order);
        const ExpSeries ty = tail_expansion(density_expansion(d.py, sy, order));
        sum += pair_integral(fx, ty, std::abs(z), 1, &err);
    }
    return {sum, err, Regime::Asymptotic};
}

RealResult product_pdf_expansion(const ProductDist& d, double z, int order)
{
    d.validate();
    if (z == 0.0) throw DomainError("tail asymptotics need z != 0");
    if (order < 0) throw DomainError("expansion order must be non-negative");
    double sum = 0.0, err = 0.0;
    for (const auto& [sx, sy] : sign_pairs(z > 0)) {
        const ExpSeries fx = density_expansion(d.px, sx, order);
        const ExpSeries fy = density_expansion(d.py, sy, order);
        sum += pair_integral(fx, fy, std::abs(z), 0, &err);
    }
    return {sum, err, Regime::Asymptotic};
}

OriginApprox product_pdf_origin(const ProductDist& d, double z)
{
    d.validate();
    if (z == 0.0) throw SingularityError("origin asymptotics describe z -> 0, not z = 0");
    constexpr double tie = 1e-12;
    VGParams x = d.px, y = d.py;
    OriginApprox out;
    // order so that m <= n; the density is symmetric under exchanging the factors
    if (y.m < x.m - tie) {
        std::swap(x, y);
        out.swapped = true;
    }
    double m = x.m, n = y.m;
    if (std::abs(m) < tie) m = 0.0;
    if (std::abs(n) < tie) n = 0.0;
    if (std::abs(m - n) < tie) n = m;
    const double g1 = std::sqrt(x.gamma2()), g2 = std::sqrt(y.gamma2());
    const double L = std::log(std::abs(z));
    const double pi = std::numbers::pi;

    if (m > 0) {
        out.case_id = 1;
        out.tag = "m,n>0: -C ln|z|";
        out.value = -std::pow(g1, 2 * m + 1) * std::pow(g2, 2 * n + 1) /
                    (2 * pi * std::pow(x.alpha, 2 * m) * std::pow(y.alpha, 2 * n)) * gamma_fn(m) * gamma_fn(n) /
                    (gamma_fn(m + 0.5) * gamma_fn(n + 0.5)) * L;
    } else if (m == 0 && n > 0) {
        out.case_id = 2;
        out.tag = out.swapped ? "m>0,n=0 (factors exchanged): C (ln|z|)^2" : "m=0,n>0: C (ln|z|)^2";
        out.value = g1 * std::pow(g2, 2 * n + 1) / (2 * std::pow(pi, 1.5) * std::pow(y.alpha, 2 * n)) *
                    gamma_fn(n) / gamma_fn(n + 0.5) * L * L;
    } else if (m == 0 && n == 0) {
        out.case_id = 3;
        out.tag = "m=n=0: -C (ln|z|)^3";
        out.value = -g1 * g2 / (3 * pi * pi) * L * L * L;
    } else if (m < n) {
        out.case_id = 4;
        out.tag = "m<0,m<n: C |z|^{2m}";
        // every j = 0 term of the series shares the leading power when β₂ ≠ 0
        const double r = y.beta / y.alpha;
        out.value = std::pow(g1, 2 * m + 1) * std::pow(g2, 2 * n + 1) / (std::pow(2.0, 4 * m + 2) * pi) *
                    std::pow(gamma_fn(-m), 2) * gamma_fn(n - m) / (gamma_fn(m + 0.5) * gamma_fn(n + 0.5)) *
                    std::pow(y.alpha, 2 * (m - n)) * gauss_2f1(n - m, -m, 0.5, r * r) * std::exp(2 * m * L);
    } else {
        out.case_id = 5;
        out.tag = "m=n<0: -C |z|^{2m} ln|z|";
        out.value = -std::pow(g1 * g2, 2 * m + 1) / (std::pow(2.0, 4 * m + 1) * pi) *
                    std::pow(gamma_fn(-m) / gamma_fn(m + 0.5), 2) * std::exp(2 * m * L) * L;
    }
    return out;
}

double solve_tail_equation(double A, double r, double a, double z)
{
    if (!(A > 0 && a > 0 && z > 0)) throw DomainError("solve_tail_equation: A, a and z must be positive");
    // h(w) = ln A + 2r ln w - a w - ln z with w = √x, decreasing for w > 2r/a
    const double lz = std::log(z), lA = std::log(A);
    auto h = [&](double w) { return lA + 2.0 * r * std::log(w) - a * w - lz; };
    double lo = std::max(2.0 * r / a, 0.0);
    if (lo == 0.0) {
        lo = 1e-300;
        if (r == 0.0 && lA <= lz) throw DomainError("solve_tail_equation: z is too large for a tail solution");
    }
    if (h(lo) <= 0) throw DomainError("solve_tail_equation: z is too large for a tail solution");
    double hi = std::max(2.0 * lo, (std::abs(lA - lz) + 1.0) / a);
    while (h(hi) > 0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw DomainError("solve_tail_equation: bracket failure");
    }
    std::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(52);
    const auto [wl, wh] = boost::math::tools::toms748_solve(h, lo, hi, tol, iters);
    const double w = 0.5 * (wl + wh);
    return w * w;
}

}  // namespace vgp
