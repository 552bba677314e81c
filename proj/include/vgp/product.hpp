#pragma once

#include "vgp/result.hpp"
#include "vgp/vg.hpp"

#include <complex>
#include <string>
#include <utility>

namespace vgp {

struct ProductPolicy {
    double series_tol = 1e-12;
    int max_terms = 400;           // cap on the outer series index
    double origin_switch = 0.0;    // |z| below this may use origin asymptotics; 0 means 4e-3/(α₁α₂)
    double tail_switch = 35.0;     // 2√(ξ|z|) above this uses tail asymptotics
    // 2√(α₁α₂|z|) above this sends the two-sided (β₁β₂ ≠ 0 or one β ≠ 0) series to quadrature
    double series_scale_max = 10.0;
    bool use_origin_asymptotics = false;
    int asymp_order = 4;           // correction order of the tail expansions used past tail_switch
};

// Z = XY with X ~ VG(m, α₁, β₁, 0), Y ~ VG(n, α₂, β₂, 0)
struct ProductDist {
    VGParams px;
    VGParams py;
    ProductPolicy policy;

    void validate() const;
    // min rate products of the right (ξ₁) and left (ξ₂) tails
    double xi1() const;
    double xi2() const;
    bool half_integer() const;
    bool symmetric() const { return px.beta == 0.0 && py.beta == 0.0; }
    double origin_threshold() const;
    // the double series would run in the extended-precision tiers at this z
    bool series_too_costly(double z) const;
};

ProductDist make_product(double m, double a1, double b1, double n, double a2, double b2);

// Tail law A z^r exp(-a√z)
struct TailForm {
    double A = 1.0;
    double r = 0.0;
    double a = 1.0;
};

RealResult product_pdf_series(const ProductDist& d, double z);
RealResult product_pdf_halfint(const ProductDist& d, double z);
RealResult product_pdf(const ProductDist& d, double z);
double product_pdf_asymp(const ProductDist& d, double z);

struct OriginApprox {
    double value = 0.0;
    int case_id = 0;  // 1..5 as classified by (m, n) after ordering
    bool swapped = false;
    std::string tag;
};
OriginApprox product_pdf_origin(const ProductDist& d, double z);

double product_cdf_symmetric(const ProductDist& d, double z);
double product_cdf_halfint(const ProductDist& d, double z);
// P(Z > z) for the half-integer finite sums, without the 1 - F cancellation
double product_sf_halfint(const ProductDist& d, double z);
// P(Z <= 0) + the integrated series
RealResult product_cdf_series(const ProductDist& d, double z);
RealResult product_cdf(const ProductDist& d, double z);
RealResult product_sf(const ProductDist& d, double z);
double product_prob_nonpositive(const ProductDist& d);

ComplexResult product_cf_symmetric(const ProductDist& d, double t);
ComplexResult product_cf_whittaker(const ProductDist& d, double t);
ComplexResult product_cf_quadrature(const ProductDist& d, double t, double tol = 1e-10);
// E[φ_Y(tX)] integrated against the density of X
ComplexResult product_cf_mixture(const ProductDist& d, double t, double tol = 1e-12);
ComplexResult product_cf(const ProductDist& d, double t);

// Combination of two non-negative tails with laws A_i x^{r_i} exp(-b_i x^{a_i})
TailLaw tail_combine(const TailLaw& f1, const TailLaw& f2);
// The two exponential terms of the right tail (z > 0) or the left tail (z < 0)
std::pair<TailForm, TailForm> product_tail_forms(const ProductDist& d, bool right);
double tail_form_value(const TailForm& f, double z);
// P(Z > z) for z > 0, P(Z <= z) for z < 0
double product_tail_asymp(const ProductDist& d, double z);

// Leading terms with the large-argument corrections of both marginals kept to `order`:
// a finite sum of K_ν(2√(λ₁λ₂|z|)) terms per sign pair. order = 0 is the K form of the law above.
RealResult product_tail_expansion(const ProductDist& d, double z, int order = 4);
RealResult product_pdf_expansion(const ProductDist& d, double z, int order = 4);

double solve_tail_equation(double A, double r, double a, double z);
double product_quantile(const ProductDist& d, double p, double tol = 1e-12);
// leading-order (ln(1-p))²/(4ξ₁) or -(ln p)²/(4ξ₂)
double product_quantile_asymp(const ProductDist& d, double p);

}  // namespace vgp
