#include "vgp/quadrature.hpp"
#include "vgp/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace vgp {

QuadResult<double> integrate_singular(const std::function<double(double)>& f, double a, double b,
                                      const QuadConfig& cfg)
{
    thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
    QuadResult<double> out;
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    try {
        out.value = ts.integrate(f, a, b, std::max(cfg.rel_tol, 1e-15), &err, &l1, &levels);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("tanh-sinh quadrature failed: ") + e.what());
    }
    out.abs_err = err * std::max(1.0, l1);
    out.converged = out.abs_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) * 10.0;
    return out;
}

QuadResult<double> integrate_singular_to_infinity(const std::function<double(double)>& f, double a,
                                                  const QuadConfig& cfg)
{
    thread_local boost::math::quadrature::exp_sinh<double> es(12);
    QuadResult<double> out;
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    try {
        out.value = es.integrate(f, a, std::numeric_limits<double>::infinity(),
                                 std::max(cfg.rel_tol, 1e-15), &err, &l1, &levels);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("exp-sinh quadrature failed: ") + e.what());
    }
    out.abs_err = err * std::max(1.0, l1);
    out.converged = out.abs_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) * 10.0;
    return out;
}

QuadResult<std::complex<double>> fourier_integral(const std::function<double(double)>& g, double omega,
                                                  double upper, const QuadConfig& cfg)
{
    QuadResult<std::complex<double>> out;
    const double w = std::abs(omega);
    const double h = (w > 0) ? std::min(upper, std::numbers::pi / w) : upper;

    auto re = integrate_singular([&](double x) { return g(x) * std::cos(omega * x); }, 0.0, h, cfg);
    auto im = integrate_singular([&](double x) { return g(x) * std::sin(omega * x); }, 0.0, h, cfg);
    out.value = {re.value, im.value};
    out.abs_err = re.abs_err + im.abs_err;
    out.converged = re.converged && im.converged;

    QuadConfig piece = cfg;
    piece.singularity_pads.clear();
    auto f = [&](double x) { return g(x) * std::polar(1.0, omega * x); };
    for (double lo = h; lo < upper;) {
        const double hi = std::min(upper, lo + h);
        auto r = integrate(f, lo, hi, piece);
        out.value += r.value;
        out.abs_err += r.abs_err;
        out.evals += r.evals;
        out.converged = out.converged && r.converged;
        lo = hi;
    }
    return out;
}

}  // namespace vgp
