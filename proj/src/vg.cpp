#include "vgp/vg.hpp"
#include "vgp/errors.hpp"
#include "vgp/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace vgp {

void VGParams::validate() const
{
    if (!std::isfinite(m) || !std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(mu))
        throw DomainError("VG parameters must be finite");
    if (!(m > -0.5)) throw DomainError("VG shape m must exceed -1/2 (got " + std::to_string(m) + ")");
    if (!(alpha > 0)) throw DomainError("VG alpha must be positive");
    if (!(std::abs(beta) < alpha)) throw DomainError("VG requires |beta| < alpha");
    if (mu != 0.0) throw DomainError("VG location mu must be 0");
}

double vg_log_norm(const VGParams& p)
{
    return (p.m + 0.5) * std::log(p.gamma2()) - 0.5 * std::log(std::numbers::pi) -
           p.m * std::log(2.0 * p.alpha) - log_gamma(p.m + 0.5);
}

double vg_pdf(const VGParams& p, double x)
{
    p.validate();
    const double lm = vg_log_norm(p);
    if (x == 0.0) {
        if (p.m <= 0) throw SingularityError("VG density is unbounded at 0 when m <= 0");
        // |x|^m K_m(α|x|) → 2^{m-1} Γ(m) / α^m
        return std::exp(lm + (p.m - 1) * std::numbers::ln2 + log_gamma(p.m) - p.m * std::log(p.alpha));
    }
    const double ax = std::abs(x);
    const double y = p.alpha * ax;
    const double lead = lm + p.beta * x - y + p.m * std::log(ax);
    double k = std::numeric_limits<double>::infinity();
    try {
        k = bessel_k_scaled(p.m, y);
    } catch (const OverflowError&) {
    }
    if (std::isfinite(k) && k > 0 && std::isfinite(lead) && lead > -700) return std::exp(lead) * k;
    const double nu = std::abs(p.m);
    double lk;
    if (std::isfinite(k) && k > 0) {
        lk = std::log(k);
    } else if (nu > 0) {
        // K_ν(y) → Γ(ν)/2 (2/y)^ν
        lk = log_gamma(nu) - std::numbers::ln2 + nu * std::log(2.0 / y) + y;
    } else {
        lk = std::log(-std::log(0.5 * y) - std::numbers::egamma) + y;
    }
    return std::exp(lead + lk);
}

double vg_prob_nonpositive(const VGParams& p)
{
    p.validate();
    if (p.beta == 0.0) return 0.5;
    const double r = p.beta / p.alpha;
    const double x = r * r;
    const double lead = std::exp(log_gamma(p.m + 1) - log_gamma(p.m + 0.5) + (p.m + 0.5) * std::log1p(-x)) /
                        std::sqrt(std::numbers::pi);
    return 0.5 - lead * r * gauss_2f1(1.0, p.m + 1.0, 1.5, x);
}

std::pair<TailLaw, TailLaw> vg_tail_forms(const VGParams& p)
{
    p.validate();
    const double c = std::exp((p.m + 0.5) * std::log(p.gamma2()) - (p.m + 0.5) * std::log(2.0 * p.alpha) -
                              log_gamma(p.m + 0.5));
    TailLaw right{c / p.lambda_minus(), p.m - 0.5, p.lambda_minus(), 1.0};
    TailLaw left{c / p.lambda_plus(), p.m - 0.5, p.lambda_plus(), 1.0};
    return {right, left};
}

VGSampler::VGSampler(const VGParams& p)
    : beta_(p.beta), w_((p.validate(), p.m + 0.5), 2.0 / p.gamma2()), n_(0.0, 1.0)
{
}

double VGSampler::operator()(Rng& rng)
{
    const double w = w_(rng);
    return beta_ * w + std::sqrt(w) * n_(rng);
}

std::vector<double> vg_sample(const VGParams& p, std::size_t count, Rng& rng)
{
    VGSampler s(p);
    std::vector<double> out(count);
    for (auto& v : out) v = s(rng);
    return out;
}

}  // namespace vgp
