#include "product/common.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <functional>
#include <limits>

namespace vgp {

double product_quantile_asymp(const ProductDist& d, double p)
{
    d.validate();
    if (!(p > 0 && p < 1)) throw DomainError("quantile level must lie in (0, 1)");
    if (p >= 0.5) return std::pow(std::log1p(-p), 2) / (4.0 * d.xi1());
    return -std::pow(std::log(p), 2) / (4.0 * d.xi2());
}

namespace {

double safe_log(double v) { return v > 0 ? std::log(v) : -745.0; }

}  // namespace

double product_quantile(const ProductDist& d, double p, double tol)
{
    d.validate();
    if (!(p > 0 && p < 1)) throw DomainError("quantile level must lie in (0, 1)");
    const double p0 = product_prob_nonpositive(d);
    if (p == p0) return 0.0;
    const bool right = p > p0;
    // mass beyond the quantile on its own side
    const double target = right ? 1.0 - p : p;
    const bool use_log = target < 1e-3;
    std::function<double(double)> h;
    if (right) {
        h = [&](double z) {
            const double s = product_sf(d, z).value;
            return use_log ? safe_log(s) - std::log(target) : s - target;
        };
    } else {
        h = [&](double z) {
            const double f = product_cdf(d, -z).value;
            return use_log ? safe_log(f) - std::log(target) : f - target;
        };
    }
    // h is decreasing on (0, ∞) with h(0+) > 0; bracket around the asymptotic seed
    double seed = std::abs(product_quantile_asymp(d, p));
    if (!(seed > 0) || !std::isfinite(seed)) seed = 1.0;
    double lo = 0.0, hi = std::max(seed, 1e-3);
    while (h(hi) > 0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw ConvergenceError("quantile: bracket expansion failed");
    }
    for (double c = 0.5 * hi; c > lo && c > 1e-12; c *= 0.5) {
        if (h(c) > 0) {
            lo = c;
            break;
        }
        hi = c;
    }
    std::uintmax_t iters = 200;
    auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1e-300, std::abs(a) + std::abs(b)); };
    double root;
    if (lo == 0.0) {
        // h(0) is the full mass on that side minus the target
        const double h0 = right ? (use_log ? safe_log(1.0 - p0) - std::log(target) : 1.0 - p0 - target)
                                : (use_log ? safe_log(p0) - std::log(target) : p0 - target);
        auto hh = [&](double z) { return z == 0.0 ? h0 : h(z); };
        const auto [a, b] = boost::math::tools::toms748_solve(hh, lo, hi, stop, iters);
        root = 0.5 * (a + b);
    } else {
        const auto [a, b] = boost::math::tools::toms748_solve(h, lo, hi, stop, iters);
        root = 0.5 * (a + b);
    }
    return right ? root : -root;
}

}  // namespace vgp
