#include "vgp/oracle.hpp"
#include "vgp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vgp {

QuadConfig oracle_quad_config()
{
    QuadConfig c;
    c.abs_tol = 1e-300;
    c.rel_tol = 1e-11;
    c.max_subdivisions = 4000;
    return c;
}

namespace {

double density_or_zero(const VGParams& p, double x)
{
    if (x == 0.0 || !std::isfinite(x)) return 0.0;
    return vg_pdf(p, x);
}

}  // namespace

RealResult quad_pdf(const ProductDist& d, double z, const QuadConfig& cfg)
{
    d.validate();
    if (z == 0.0) throw SingularityError("quad_pdf: the product density is unbounded at z = 0");
    const double az = std::abs(z);
    RealResult out;
    out.regime = Regime::Quadrature;
    // x = s e^u, dx/|x| = du; y = z / x
    for (double s : {1.0, -1.0}) {
        const double lx = (s > 0) ? d.px.lambda_minus() : d.px.lambda_plus();
        const double sy = s * (z > 0 ? 1.0 : -1.0);
        const double ly = (sy > 0) ? d.py.lambda_minus() : d.py.lambda_plus();
        // balance of the two exponential rates
        const double centre = 0.5 * std::log(ly * az / lx);
        auto f = [&](double u) {
            const double x = s * std::exp(u);
            return density_or_zero(d.px, x) * density_or_zero(d.py, z / x);
        };
        const auto r = integrate_real_line(f, centre, cfg);
        if (!r.converged) throw ConvergenceError("quad_pdf: tolerance not met");
        out.value += r.value;
        out.abs_err += r.abs_err;
    }
    return out;
}

RealResult quad_tail(const ProductDist& d, double z, const QuadConfig& cfg)
{
    if (z == 0.0) throw DomainError("quad_tail needs z != 0");
    QuadConfig inner = cfg;
    inner.rel_tol = std::max(cfg.rel_tol, 1e-12);
    const double sgn = (z > 0) ? 1.0 : -1.0;
    // y = |z| + w², which absorbs the √y exponential scale
    const double a = std::sqrt(std::abs(z));
    auto f = [&](double w) { return 2.0 * w * quad_pdf(d, sgn * (std::abs(z) + w * w), inner).value; };
    QuadConfig outer = cfg;
    outer.rel_tol = std::max(cfg.rel_tol, 1e-10);
    outer.singularity_pads = {a, 4.0 * a + 4.0};
    const auto r = integrate_to_infinity(f, 0.0, outer);
    if (!r.converged) throw ConvergenceError("quad_tail: tolerance not met");
    return {r.value, r.abs_err, Regime::Quadrature};
}

ComplexResult fourier_cf(const std::function<double(double)>& pdf, double t, double upper_pos, double upper_neg,
                         double tol)
{
    if (t == 0.0) throw DomainError("fourier_cf: use t != 0");
    QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-2 * tol;
    cfg.max_subdivisions = 2000;
    const auto pos = fourier_integral(pdf, t, upper_pos, cfg);
    const auto neg = fourier_integral([&](double z) { return pdf(-z); }, -t, upper_neg, cfg);
    if (!pos.converged || !neg.converged) throw ConvergenceError("fourier_cf: tolerance not met");
    return {pos.value + neg.value, pos.abs_err + neg.abs_err, Regime::Quadrature};
}

std::vector<double> mc_sample_product(const ProductDist& d, std::size_t n, std::uint64_t seed)
{
    d.validate();
    if (n == 0) throw DomainError("mc_sample_product needs n >= 1");
    Rng rng(seed);
    VGSampler sx(d.px), sy(d.py);
    std::vector<double> out(n);
    for (auto& v : out) {
        const double x = sx(rng);
        v = x * sy(rng);
    }
    return out;
}

double ks_distance(std::vector<double>& samples, const std::function<double(double)>& cdf)
{
    if (samples.empty()) throw DomainError("ks_distance needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double dmax = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        dmax = std::max({dmax, f - i / n, (i + 1) / n - f});
    }
    return dmax;
}

}  // namespace vgp
