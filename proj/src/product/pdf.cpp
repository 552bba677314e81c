#include "product/common.hpp"
#include "vgp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace vgp {

using namespace product_detail;

void ProductDist::validate() const
{
    px.validate();
    py.validate();
    if (!(policy.series_tol > 0) || !(policy.tail_switch > 0) || policy.max_terms < 1 || policy.origin_switch < 0)
        throw DomainError("product policy: tolerances and thresholds must be positive");
}

double ProductDist::xi1() const
{
    return std::min(px.lambda_minus() * py.lambda_minus(), px.lambda_plus() * py.lambda_plus());
}

double ProductDist::xi2() const
{
    return std::min(px.lambda_minus() * py.lambda_plus(), px.lambda_plus() * py.lambda_minus());
}

bool ProductDist::half_integer() const
{
    int a = 0, b = 0;
    return half_index(px.m, a) && half_index(py.m, b);
}

double ProductDist::origin_threshold() const
{
    return policy.origin_switch > 0 ? policy.origin_switch : 4e-3 / (px.alpha * py.alpha);
}

bool ProductDist::series_too_costly(double z) const
{
    if (symmetric()) return false;
    return 2.0 * std::sqrt(px.alpha * py.alpha * std::abs(z)) > policy.series_scale_max;
}

ProductDist make_product(double m, double a1, double b1, double n, double a2, double b2)
{
    ProductDist d;
    d.px = {m, a1, b1, 0.0};
    d.py = {n, a2, b2, 0.0};
    d.validate();
    return d;
}

RealResult product_pdf_series(const ProductDist& d, double z)
{
    d.validate();
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    const double x = std::pow(d.px.alpha * d.py.alpha * z / 4.0, 2);
    const double lx = 2.0 * std::log(d.px.alpha * d.py.alpha * std::abs(z) / 4.0);
    return sum_series(d, z, [&](const std::array<double, 4>& b, double lw, double sign, double floor) {
        const MeijerOptions o = series_options(d, lw, floor);
        RealResult r = lx < kLogArgFloor ? g40_04(LogArg{lx}, b, o) : g40_04(x, b, o);
        r.value *= sign;
        return r;
    });
}

RealResult product_pdf_halfint(const ProductDist& d, double z)
{
    d.validate();
    int M = 0, N = 0;
    if (!half_index(d.px.m, M) || !half_index(d.py.m, N))
        throw DomainError("finite-sum density needs m - 1/2 and n - 1/2 to be non-negative integers");
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    const double a1 = d.px.alpha, b1 = d.px.beta, a2 = d.py.alpha, b2 = d.py.beta;
    const double az = std::abs(z);
    // the two exponentials: (λ₁ paired with A = α₂|z| ∓ β₂z)
    const double l1[2] = {a1 - b1, a1 + b1};
    const double A[2] = {a2 * az - b2 * z, a2 * az + b2 * z};
    // ln of the prefactor in the form with 2^{m+n} α₁^{m+1/2} α₂^{n+1/2} (m-1/2)! (n-1/2)!
    const double lp = (d.px.m + 0.5) * std::log(d.px.gamma2()) + (d.py.m + 0.5) * std::log(d.py.gamma2()) -
                      (d.px.m + d.py.m) * std::numbers::ln2 - (d.px.m + 0.5) * std::log(a1) -
                      (d.py.m + 0.5) * std::log(a2) - log_factorial(M) - log_factorial(N);
    double sum = 0.0, abs_sum = 0.0;
    for (int i = 0; i <= M; ++i) {
        for (int j = 0; j <= N; ++j) {
            const double lc = lp + log_factorial(M + i) - log_factorial(i) - log_factorial(M - i) +
                              log_factorial(N + j) - log_factorial(j) - log_factorial(N - j) -
                              i * std::log(2.0 * a1) - j * std::log(2.0 * a2) + (N - j) * std::log(az);
            const int nu = M - N - i + j;
            for (int s = 0; s < 2; ++s) {
                const double arg = 2.0 * std::sqrt(l1[s] * A[s]);
                const double t = std::exp(lc + 0.5 * nu * std::log(A[s] / l1[s]) - arg) * bessel_k_scaled(nu, arg);
                sum += t;
                abs_sum += std::abs(t);
            }
        }
    }
    return {sum, 8.0 * std::numeric_limits<double>::epsilon() * abs_sum * (M + N + 2), Regime::FiniteSum};
}

double product_pdf_asymp(const ProductDist& d, double z)
{
    d.validate();
    if (z == 0.0) throw DomainError("tail asymptotics need z != 0");
    const auto [f1, f2] = product_tail_forms(d, z > 0);
    const double az = std::abs(z);
    // -d/dz of A z^r e^{-a√z}, leading order
    auto dens = [&](const TailForm& f) {
        return f.A * 0.5 * f.a * std::exp((f.r - 0.5) * std::log(az) - f.a * std::sqrt(az));
    };
    return dens(f1) + dens(f2);
}

RealResult product_pdf(const ProductDist& d, double z)
{
    d.validate();
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0 (mode of the distribution)");
    if (d.policy.use_origin_asymptotics && std::abs(z) < d.origin_threshold()) {
        const OriginApprox o = product_pdf_origin(d, z);
        // relative error is of the order of the next logarithmic correction
        return {o.value, std::abs(o.value / std::log(std::abs(z))), Regime::Asymptotic};
    }
    if (d.half_integer()) return product_pdf_halfint(d, z);
    const double xi = (z > 0) ? d.xi1() : d.xi2();
    const double scale = 2.0 * std::sqrt(xi * std::abs(z));
    if (scale > d.policy.tail_switch) return product_pdf_expansion(d, z, d.policy.asymp_order);
    QuadConfig cfg = oracle_quad_config();
    cfg.rel_tol = std::max(d.policy.series_tol, 1e-12);
    if (d.series_too_costly(z)) return quad_pdf(d, z, cfg);
    try {
        return product_pdf_series(d, z);
    } catch (const RegimeError&) {
        // between the residue-series range and the asymptotic range
        return quad_pdf(d, z, cfg);
    }
}

}  // namespace vgp
