#include "product/common.hpp"
#include "vgp/oracle.hpp"

#include <limits>

namespace vgp {

using namespace product_detail;

double product_prob_nonpositive(const ProductDist& d)
{
    d.validate();
    const double p1 = vg_prob_nonpositive(d.px);
    const double p2 = vg_prob_nonpositive(d.py);
    return p1 + p2 - 2.0 * p1 * p2;
}

double product_cdf_symmetric(const ProductDist& d, double z)
{
    d.validate();
    if (!d.symmetric()) throw DomainError("closed-form CDF needs beta1 = beta2 = 0; use product_cdf");
    if (z == 0.0) return 0.5;
    const double m = d.px.m, n = d.py.m;
    const double x = std::pow(d.px.alpha * d.py.alpha * z / 4.0, 2);
    MeijerOptions o;
    o.log_scale = -std::log(2.0 * std::numbers::pi) - log_gamma(m + 0.5) - log_gamma(n + 0.5);
    const double lx = 2.0 * std::log(d.px.alpha * d.py.alpha * std::abs(z) / 4.0);
    const std::array<double, 5> b = {0.5, 0.5, m + 0.5, n + 0.5, 0.0};
    const double g = (lx < kLogArgFloor ? g41_15(LogArg{lx}, 1.0, b, o) : g41_15(x, 1.0, b, o)).value;
    return (z > 0) ? 0.5 + g : 0.5 - g;
}

namespace {

struct FiniteSum {
    int M = 0, N = 0;
    double log_pref = 0.0;
};

FiniteSum finite_sum_setup(const ProductDist& d)
{
    FiniteSum f;
    if (!half_index(d.px.m, f.M) || !half_index(d.py.m, f.N))
        throw DomainError("finite-sum CDF needs m - 1/2 and n - 1/2 to be non-negative integers");
    f.log_pref = log_finite_prefactor(d);
    return f;
}

// Σ_ij c_ij Σ_pairs (l2/l1)^p G̃_{2q,2p}(2√(l1 l2 |z|)) / (l1 l2)^{q+1/2}
double lommel_sum(const ProductDist& d, const FiniteSum& f, const double (&l1)[2], const double (&l2)[2], double az,
                  bool relative = false)
{
    const double a1 = d.px.alpha, a2 = d.py.alpha;
    double sum = 0.0;
    for (int i = 0; i <= f.M; ++i) {
        for (int j = 0; j <= f.N; ++j) {
            const double lc = f.log_pref + log_factorial(f.M + i) - log_factorial(i) - i * std::log(2.0 * a1) +
                              log_factorial(f.N + j) - log_factorial(j) - j * std::log(2.0 * a2);
            const double p = 0.5 * (f.M - f.N - i + j);
            const double q = 0.5 * (f.M + f.N + 1 - i - j);
            for (int s = 0; s < 2; ++s) {
                const double prod = l1[s] * l2[s];
                const double x = 2.0 * std::sqrt(prod * az);
                const double gt = relative ? lommel_g_upper(2 * q, 2 * p, x) : lommel_g(2 * q, 2 * p, x).gt;
                sum += std::exp(lc + p * std::log(l2[s] / l1[s]) - (q + 0.5) * std::log(prod)) * gt;
            }
        }
    }
    return sum;
}

}  // namespace

double product_sf_halfint(const ProductDist& d, double z)
{
    d.validate();
    const FiniteSum f = finite_sum_setup(d);
    const double l1m = d.px.lambda_minus(), l1p = d.px.lambda_plus();
    const double l2m = d.py.lambda_minus(), l2p = d.py.lambda_plus();
    if (z > 0) return lommel_sum(d, f, {l1m, l1p}, {l2m, l2p}, z, true);
    if (z == 0) return 1.0 - product_prob_nonpositive(d);
    return 1.0 - lommel_sum(d, f, {l1m, l1p}, {l2p, l2m}, -z);
}

double product_cdf_halfint(const ProductDist& d, double z)
{
    d.validate();
    const FiniteSum f = finite_sum_setup(d);
    if (z == 0) return product_prob_nonpositive(d);
    const double a1 = d.px.alpha, a2 = d.py.alpha;
    if (d.symmetric()) {
        if (z < 0) return product_sf_halfint(d, -z);
        // ½ + sgn(z) Σ c_ij (α₂/α₁)^p G_{2q,2p}(2√(α₁α₂|z|)) / (α₁α₂)^q, scaled
        const double lp = d.px.m * std::log(a1) + d.py.m * std::log(a2) - (d.px.m + d.py.m) * std::numbers::ln2 -
                          log_factorial(f.M) - log_factorial(f.N);
        const double x = 2.0 * std::sqrt(a1 * a2 * std::abs(z));
        double sum = 0.0;
        for (int i = 0; i <= f.M; ++i) {
            for (int j = 0; j <= f.N; ++j) {
                const double lc = lp + log_factorial(f.M + i) - log_factorial(i) - i * std::log(2.0 * a1) +
                                  log_factorial(f.N + j) - log_factorial(j) - j * std::log(2.0 * a2);
                const double p = 0.5 * (f.M - f.N - i + j);
                const double q = 0.5 * (f.M + f.N + 1 - i - j);
                sum += std::exp(lc + p * std::log(a2 / a1) - q * std::log(a1 * a2)) * lommel_g(2 * q, 2 * p, x).g;
            }
        }
        return (z > 0) ? 0.5 + sum : 0.5 - sum;
    }
    if (z > 0) return 1.0 - lommel_sum(d, f, {d.px.lambda_minus(), d.px.lambda_plus()}, {d.py.lambda_minus(), d.py.lambda_plus()}, z);
    return lommel_sum(d, f, {d.px.lambda_minus(), d.px.lambda_plus()}, {d.py.lambda_plus(), d.py.lambda_minus()}, -z, true);
}

RealResult product_cdf_series(const ProductDist& d, double z)
{
    d.validate();
    const double p0 = product_prob_nonpositive(d);
    if (z == 0.0) return {p0, 0.0, Regime::Closed};
    const double x = std::pow(d.px.alpha * d.py.alpha * z / 4.0, 2);
    const double lz = std::log(std::abs(z) / 2.0);
    const double sz = (z > 0) ? 1.0 : -1.0;
    const double lx = 2.0 * std::log(d.px.alpha * d.py.alpha * std::abs(z) / 4.0);
    // ∫_0^z G40(c y² | b) dy = (z/2) G41(c z² | 1/2; b, -1/2)
    RealResult r = sum_series(d, z, [&](const std::array<double, 4>& b, double lw, double sign, double floor) {
        const MeijerOptions o = series_options(d, lw + lz, floor);
        const std::array<double, 5> bb = {b[0], b[1], b[2], b[3], -0.5};
        RealResult g = lx < kLogArgFloor ? g41_15(LogArg{lx}, 0.5, bb, o) : g41_15(x, 0.5, bb, o);
        g.value *= sign * sz;
        return g;
    });
    r.value += p0;
    r.abs_err += 4.0 * std::numeric_limits<double>::epsilon();
    return r;
}

// beyond this the tail mass is below ~1e-9 and 1 - F loses relative accuracy
constexpr double kTailQuadSwitch = 20.0;

RealResult product_cdf(const ProductDist& d, double z)
{
    d.validate();
    if (z == 0.0) return {product_prob_nonpositive(d), 0.0, Regime::Closed};
    if (d.half_integer()) return {product_cdf_halfint(d, z), 1e-15, Regime::FiniteSum};
    const double xi = (z > 0) ? d.xi1() : d.xi2();
    const double scale = 2.0 * std::sqrt(xi * std::abs(z));
    if (scale > d.policy.tail_switch) {
        RealResult t = product_tail_expansion(d, z, d.policy.asymp_order);
        if (z > 0) t.value = 1.0 - t.value;
        return t;
    }
    if (z < 0 && scale > kTailQuadSwitch) return quad_tail(d, z);
    try {
        if (d.symmetric()) return {product_cdf_symmetric(d, z), 1e-14, Regime::Series};
        if (d.series_too_costly(z)) throw RegimeError("series cost");
        return product_cdf_series(d, z);
    } catch (const RegimeError&) {
        const RealResult t = quad_tail(d, z);
        return {(z > 0) ? 1.0 - t.value : t.value, t.abs_err, Regime::Quadrature};
    }
}

RealResult product_sf(const ProductDist& d, double z)
{
    d.validate();
    if (z > 0) {
        if (d.half_integer()) return {product_sf_halfint(d, z), 1e-16, Regime::FiniteSum};
        const double scale = 2.0 * std::sqrt(d.xi1() * z);
        if (scale > d.policy.tail_switch) return product_tail_expansion(d, z, d.policy.asymp_order);
        if (scale > kTailQuadSwitch) return quad_tail(d, z);
    }
    RealResult r = product_cdf(d, z);
    r.value = 1.0 - r.value;
    return r;
}

}  // namespace vgp
