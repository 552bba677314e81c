#include "product/common.hpp"
#include "vgp/oracle.hpp"

#include <algorithm>
#include <complex>

namespace vgp {

using namespace product_detail;
using cplx = std::complex<double>;

ComplexResult product_cf_symmetric(const ProductDist& d, double t)
{
    d.validate();
    if (!d.symmetric()) throw DomainError("closed-form CF needs beta1 = beta2 = 0");
    if (t == 0.0) return {1.0, 0.0, Regime::Closed};
    const double m = d.px.m, n = d.py.m;
    const double ab = d.px.alpha * d.py.alpha;
    const double x = ab * ab / (4.0 * t * t);
    MeijerOptions o;
    o.log_scale = -0.5 * std::log(std::numbers::pi) - log_gamma(m + 0.5) - log_gamma(n + 0.5);
    // small |t| means a large argument; the precision tiers absorb the cancellation
    o.check_regime = false;
    const RealResult g = g31_13(x, 1.0, {0.5, m + 0.5, n + 0.5}, o);
    return {g.value, g.abs_err, Regime::Series};
}

ComplexResult product_cf_whittaker(const ProductDist& d, double t)
{
    d.validate();
    int M = 0, N = 0;
    if (!half_index(d.px.m, M) || !half_index(d.py.m, N))
        throw DomainError("Whittaker CF needs m - 1/2 and n - 1/2 to be non-negative integers");
    if (t == 0.0) return {1.0, 0.0, Regime::Closed};
    const double lpref = log_finite_prefactor(d);
    const double a1 = d.px.alpha, a2 = d.py.alpha;
    const double l1[4] = {d.px.lambda_minus(), d.px.lambda_plus(), d.px.lambda_minus(), d.px.lambda_plus()};
    const double l2[4] = {d.py.lambda_minus(), d.py.lambda_plus(), d.py.lambda_plus(), d.py.lambda_minus()};
    const double sg[4] = {1.0, 1.0, -1.0, -1.0};
    const cplx I(0.0, 1.0);
    cplx sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i <= M; ++i) {
        for (int j = 0; j <= N; ++j) {
            const double lc = lpref + log_factorial(M + i) - log_factorial(i) - i * std::log(2.0 * a1) +
                              log_factorial(N + j) - log_factorial(j) - j * std::log(2.0 * a2);
            const double p = 0.5 * (M - N - i + j);
            const double q = 0.5 * (M + N + 1 - i - j);
            for (int k = 0; k < 4; ++k) {
                const double prod = l1[k] * l2[k];
                const double c = std::exp(lc + p * std::log(l2[k] / l1[k]) - 0.5 * std::log(prod));
                const cplx arg = sg[k] * I * prod / t;
                const cplx term = c * std::pow(-sg[k] * I * t, -q) * std::exp(0.5 * arg) * whittaker_w(-q, p, arg);
                sum += term;
                abs_sum += std::abs(term);
            }
        }
    }
    return {sum, 1e-9 * abs_sum, Regime::FiniteSum};
}

namespace {

// z beyond which the tail beyond carries mass below eps
double truncation_point(const ProductDist& d, bool right, double eps)
{
    const auto [f1, f2] = product_tail_forms(d, right);
    double u = 1.0;
    for (const TailForm& f : {f1, f2}) {
        try {
            u = std::max(u, solve_tail_equation(f.A, f.r, f.a, eps));
        } catch (const DomainError&) {
        }
    }
    return u;
}

}  // namespace

ComplexResult product_cf_quadrature(const ProductDist& d, double t, double tol)
{
    d.validate();
    if (t == 0.0) return {1.0, 0.0, Regime::Closed};
    const double eps = 1e-3 * tol;
    const double up = truncation_point(d, true, eps), un = truncation_point(d, false, eps);
    auto pdf = [&](double z) {
        if (std::abs(z) < 1e-150) return product_pdf_origin(d, z).value;
        return product_pdf(d, z).value;
    };
    ComplexResult r = fourier_cf(pdf, t, up, un, tol);
    r.abs_err += 2.0 * eps;
    return r;
}

ComplexResult product_cf_mixture(const ProductDist& d, double t, double tol)
{
    d.validate();
    if (t == 0.0) return {1.0, 0.0, Regime::Closed};
    const VGParams& y = d.py;
    const double g2 = y.gamma2(), e = -(y.m + 0.5);
    // φ_Y(s) = (γ²/(γ² - 2iβs + s²))^{n+1/2}
    auto phi_y = [&](double s) { return std::exp(e * std::log(cplx(1.0 + s * s / g2, -2.0 * y.beta * s / g2))); };
    auto f = [&](double u) -> cplx {
        const double x = std::exp(u);
        if (!std::isfinite(x) || x == 0.0) return 0.0;
        const double fp = vg_pdf(d.px, x), fn = vg_pdf(d.px, -x);
        return x * (fp * phi_y(t * x) + fn * phi_y(-t * x));
    };
    QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-3 * tol;
    cfg.max_subdivisions = 4000;
    const double centre = std::log((std::max(d.px.m, 0.0) + 1.0) / d.px.alpha);
    const auto r = integrate_real_line(f, centre, cfg);
    if (!r.converged) throw ConvergenceError("mixture CF integral did not converge");
    return {r.value, r.abs_err, Regime::Quadrature};
}

ComplexResult product_cf(const ProductDist& d, double t)
{
    d.validate();
    if (t == 0.0) return {1.0, 0.0, Regime::Closed};
    if (d.symmetric()) {
        try {
            return product_cf_symmetric(d, t);
        } catch (const ConvergenceError&) {
        }
    } else if (d.half_integer()) {
        return product_cf_whittaker(d, t);
    }
    return product_cf_mixture(d, t);
}

}  // namespace vgp
