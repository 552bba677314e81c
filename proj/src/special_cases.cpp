#include "vgp/special_cases.hpp"
#include "vgp/errors.hpp"
#include "vgp/meijer.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/specfun.hpp"

#include <cmath>
#include <numbers>

namespace vgp {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_al(double a, double b)
{
    if (!(a > 0) || !(std::abs(b) < a)) throw DomainError("asymmetric Laplace factor needs |beta| < alpha");
}

void check_positive(double v, const char* what)
{
    if (!(v > 0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

// ½ + c z G^{4,1}_{1,5}(x | ½; b), falling back to the generic route beyond the series range
double g41_cdf(double c, double z, double x, const std::array<double, 5>& b, const ProductDist& d)
{
    if (z == 0.0) return 0.5;
    if (x < 1e-280) return product_cdf(d, z).value;
    try {
        return 0.5 + c * z * g41_15(x, 0.5, b).value;
    } catch (const RegimeError&) {
        return product_cdf(d, z).value;
    }
}

}  // namespace

double al_product_pdf(double a1, double b1, double a2, double b2, double z)
{
    check_al(a1, b1);
    check_al(a2, b2);
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    const double g = (a1 * a1 - b1 * b1) * (a2 * a2 - b2 * b2) / (2.0 * a1 * a2);
    const double az = std::abs(z);
    return g * (bessel_k(0, 2.0 * std::sqrt((a1 - b1) * (a2 * az - b2 * z))) +
                bessel_k(0, 2.0 * std::sqrt((a1 + b1) * (a2 * az + b2 * z))));
}

double al_product_cdf(double a1, double b1, double a2, double b2, double z)
{
    check_al(a1, b1);
    check_al(a2, b2);
    const double p1 = (a1 - b1) / (2.0 * a1), p2 = (a2 - b2) / (2.0 * a2);
    if (z == 0.0) return p1 + p2 - 2.0 * p1 * p2;
    const double g = (a1 * a1 - b1 * b1) * (a2 * a2 - b2 * b2) / (2.0 * a1 * a2);
    const double az = std::abs(z);
    auto piece = [&](double l) {
        const double r = std::sqrt(l);
        return std::sqrt(az) / r * bessel_k(1, 2.0 * r * std::sqrt(az));
    };
    if (z > 0) return 1.0 - g * (piece((a1 - b1) * (a2 - b2)) + piece((a1 + b1) * (a2 + b2)));
    return g * (piece((a1 - b1) * (a2 + b2)) + piece((a1 + b1) * (a2 - b2)));
}

cplx al_product_cf(double a1, double b1, double a2, double b2, double t)
{
    check_al(a1, b1);
    check_al(a2, b2);
    if (t == 0.0) return 1.0;
    if (t < 0) return std::conj(al_product_cf(a1, b1, a2, b2, -t));
    // e^{w/2} W_{-1/2,0}(w) = √w e^w E₁(w)
    const double g = (a1 * a1 - b1 * b1) * (a2 * a2 - b2 * b2) / (4.0 * a1 * a2);
    const cplx I(0.0, 1.0);
    auto term = [&](double l, double s) {
        const cplx w = s * I * l / t;
        return s * I / t * std::exp(w) * expint_e1(w);
    };
    return g * (term((a1 - b1) * (a2 - b2), 1.0) + term((a1 + b1) * (a2 + b2), 1.0) +
                term((a1 - b1) * (a2 + b2), -1.0) + term((a1 + b1) * (a2 - b2), -1.0));
}

double laplace_product_pdf(double a1, double a2, double z)
{
    check_positive(a1, "alpha1");
    check_positive(a2, "alpha2");
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    return a1 * a2 * bessel_k(0, 2.0 * std::sqrt(a1 * a2 * std::abs(z)));
}

double laplace_product_cdf(double a1, double a2, double z)
{
    check_positive(a1, "alpha1");
    check_positive(a2, "alpha2");
    if (z == 0.0) return 0.5;
    const double w = std::sqrt(a1 * a2 * std::abs(z));
    return 0.5 + std::copysign(0.5 - w * bessel_k(1, 2.0 * w), z);
}

double laplace_product_cf(double a1, double a2, double t)
{
    check_positive(a1, "alpha1");
    check_positive(a2, "alpha2");
    if (t == 0.0) return 1.0;
    const double y = a1 * a2 / std::abs(t);
    return y * sici_aux(y).first;
}

double normal2_laplace_pdf(double s1, double s2, double a2, double z)
{
    check_positive(s1, "sigma1");
    check_positive(s2, "sigma2");
    check_positive(a2, "alpha2");
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    const double a1 = 1.0 / (s1 * s2);
    const double r = std::sqrt(2.0 * a1 * a2 * std::abs(z));
    const cplx w = std::polar(r, 0.25 * kPi);
    const cplx v = 2.0 * a1 * a2 / kPi * bessel_k(0.0, w) * bessel_k(0.0, std::conj(w));
    if (std::abs(v.imag()) > 1e-12 * std::abs(v)) throw ConvergenceError("complex K0 pair left an imaginary residue");
    return v.real();
}

double normal2_laplace_cdf(double s1, double s2, double a2, double z)
{
    check_positive(s1, "sigma1");
    check_positive(s2, "sigma2");
    check_positive(a2, "alpha2");
    const double ab = a2 / (s1 * s2);
    return g41_cdf(ab / (8.0 * std::pow(kPi, 1.5)), z, ab * ab * z * z / 16.0, {0.0, 0.0, 0.0, 0.5, -0.5},
                   make_product(0.0, 1.0 / (s1 * s2), 0.0, 0.5, a2, 0.0));
}

double normal2_laplace_cf(double s1, double s2, double a2, double t)
{
    check_positive(s1, "sigma1");
    check_positive(s2, "sigma2");
    check_positive(a2, "alpha2");
    if (t == 0.0) return 1.0;
    const double y = a2 / (s1 * s2 * std::abs(t));
    return 0.5 * kPi * y * struve_k(0.0, y);
}

double vg_laplace_cf(double m, double a1, double a2, double t)
{
    check_positive(a1, "alpha1");
    check_positive(a2, "alpha2");
    const double h = m + 0.5;
    if (!(h > 0) || std::abs(h - std::round(h)) < 1e-12)
        throw DomainError("closed-form CF needs m + 1/2 positive and non-integer; use the Whittaker route");
    if (t == 0.0) return 1.0;
    const double y = a1 * a2 / std::abs(t);
    return std::pow(kPi, 1.5) / (std::cos(kPi * m) * gamma_fn(h)) * std::pow(0.5 * y, m + 1.0) *
           struve_k(-m, y);
}

void CorrelatedNormalPair::validate() const
{
    if (!(sigma_u > 0) || !(sigma_v > 0) || !std::isfinite(sigma_u) || !std::isfinite(sigma_v))
        throw DomainError("normal pair needs positive finite standard deviations");
    if (!(std::abs(rho) < 1)) throw DomainError("normal pair needs |rho| < 1");
}

VGParams CorrelatedNormalPair::to_vg() const
{
    validate();
    VGParams p;
    p.m = 0.0;
    p.alpha = 1.0 / (sigma_u * sigma_v * (1.0 - rho * rho));
    p.beta = rho * p.alpha;
    return p;
}

ProductDist normal4_dist(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2)
{
    ProductDist d;
    d.px = p1.to_vg();
    d.py = p2.to_vg();
    return d;
}

double normal4_pdf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double z)
{
    const ProductDist d = normal4_dist(p1, p2);
    if (p1.rho == 0.0 && p2.rho == 0.0)
        return normal4_independent_pdf(p1.sigma_u * p1.sigma_v * p2.sigma_u * p2.sigma_v, z);
    try {
        return product_pdf_series(d, z).value;
    } catch (const RegimeError&) {
        return product_pdf(d, z).value;
    }
}

double normal4_cdf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double z)
{
    if (p1.rho == 0.0 && p2.rho == 0.0) {
        p1.validate();
        p2.validate();
        return normal4_independent_cdf(p1.sigma_u * p1.sigma_v * p2.sigma_u * p2.sigma_v, z);
    }
    return product_cdf(normal4_dist(p1, p2), z).value;
}

cplx normal4_cf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double t)
{
    if (p1.rho == 0.0 && p2.rho == 0.0) {
        p1.validate();
        p2.validate();
        return normal_product_cf(4, p1.sigma_u * p1.sigma_v * p2.sigma_u * p2.sigma_v, t);
    }
    return product_cf(normal4_dist(p1, p2), t).value;
}

double normal4_independent_pdf(double s, double z)
{
    check_positive(s, "s");
    if (z == 0.0) throw SingularityError("product density is unbounded at z = 0");
    try {
        const MeijerOptions o{.log_scale = -std::log(4.0 * kPi * kPi * s)};
        const double lx = 2.0 * std::log(std::abs(z) / (4.0 * s));
        return (lx < kLogArgFloor ? g40_04(LogArg{lx}, {0.0, 0.0, 0.0, 0.0}, o)
                                  : g40_04(z * z / (16.0 * s * s), {0.0, 0.0, 0.0, 0.0}, o))
            .value;
    } catch (const RegimeError&) {
        const double a = 1.0 / std::sqrt(s);
        return product_pdf(make_product(0.0, a, 0.0, 0.0, a, 0.0), z).value;
    }
}

double normal4_independent_cdf(double s, double z)
{
    check_positive(s, "s");
    const double a = 1.0 / std::sqrt(s);
    return g41_cdf(1.0 / (8.0 * kPi * kPi * s), z, z * z / (16.0 * s * s), {0.0, 0.0, 0.0, 0.0, -0.5},
                   make_product(0.0, a, 0.0, 0.0, a, 0.0));
}

double normal_product_cf(int k, double s, double t)
{
    check_positive(s, "s");
    if (t == 0.0) return 1.0;
    const double st = s * std::abs(t);
    switch (k) {
    case 2: return 1.0 / std::sqrt(1.0 + st * st);
    case 3: {
        const double y = 1.0 / (4.0 * st * st);
        return bessel_k_scaled(0.0, y) / (std::sqrt(2.0 * kPi) * st);
    }
    case 4: {
        const auto [j0, y0] = bessel_j_y(0.0, 1.0 / (2.0 * st));
        return kPi / (4.0 * st) * (j0 * j0 + y0 * y0);
    }
    default: throw DomainError("normal_product_cf supports k = 2, 3, 4");
    }
}

double normal4_cf_nicholson(double s, double t)
{
    check_positive(s, "s");
    if (t == 0.0) return 1.0;
    const double st = s * std::abs(t);
    // u = sinh(x)/(s|t|)
    const double c = 1.0 / st;
    auto f = [c](double u) { return bessel_k(0.0, u) / std::hypot(u, c); };
    QuadConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-15;
    const auto near = integrate_singular(f, 0.0, 1.0, cfg);
    const auto far = integrate_to_infinity(f, 1.0, cfg);
    if (!near.converged || !far.converged) throw ConvergenceError("Nicholson integral did not converge");
    return 2.0 / (kPi * st) * (near.value + far.value);
}

}  // namespace vgp
