#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace vgp {

// VG(m, α, β, 0)
struct VGParams {
    double m = 0.5;
    double alpha = 1.0;
    double beta = 0.0;
    double mu = 0.0;  // only 0 is supported

    void validate() const;  // throws DomainError naming the violated condition
    double gamma2() const { return alpha * alpha - beta * beta; }
    double lambda_plus() const { return alpha + beta; }
    double lambda_minus() const { return alpha - beta; }
};

// ln M_{m,α,β}
double vg_log_norm(const VGParams& p);
double vg_pdf(const VGParams& p, double x);
// P(X <= 0)
double vg_prob_nonpositive(const VGParams& p);

// Tail law A x^r exp(-b x^a)
struct TailLaw {
    double A = 1.0;
    double r = 0.0;
    double b = 1.0;
    double a = 1.0;
};

// (right tail P(X > x), left tail P(X < -x)) as x → ∞
std::pair<TailLaw, TailLaw> vg_tail_forms(const VGParams& p);

using Rng = std::mt19937_64;

// X = βW + √W N with W ~ Gamma(m + 1/2, rate γ²/2)
std::vector<double> vg_sample(const VGParams& p, std::size_t count, Rng& rng);

class VGSampler {
public:
    explicit VGSampler(const VGParams& p);
    double operator()(Rng& rng);

private:
    double beta_;
    std::gamma_distribution<double> w_;
    std::normal_distribution<double> n_;
};

}  // namespace vgp
