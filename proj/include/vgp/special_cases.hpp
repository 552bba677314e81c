#pragma once

#include "vgp/product.hpp"

#include <complex>

namespace vgp {

// Asymmetric Laplace factors: X ~ AL(α₁, β₁), Y ~ AL(α₂, β₂), i.e. m = n = 1/2
double al_product_pdf(double a1, double b1, double a2, double b2, double z);
double al_product_cdf(double a1, double b1, double a2, double b2, double z);
std::complex<double> al_product_cf(double a1, double b1, double a2, double b2, double t);

// Symmetric Laplace factors
double laplace_product_pdf(double a1, double a2, double z);
double laplace_product_cdf(double a1, double a2, double z);
double laplace_product_cf(double a1, double a2, double t);

// N(0, σ₁²) · N(0, σ₂²) · Laplace(α₂)
double normal2_laplace_pdf(double s1, double s2, double a2, double z);
double normal2_laplace_cdf(double s1, double s2, double a2, double z);
double normal2_laplace_cf(double s1, double s2, double a2, double t);
// VG(m, α₁, 0, 0) · Laplace(α₂); m + 1/2 must be positive and non-integer
double vg_laplace_cf(double m, double a1, double a2, double t);

struct CorrelatedNormalPair {
    double sigma_u = 1.0;
    double sigma_v = 1.0;
    double rho = 0.0;

    void validate() const;
    // law of U·V
    VGParams to_vg() const;
};

ProductDist normal4_dist(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2);
double normal4_pdf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double z);
double normal4_cdf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double z);
std::complex<double> normal4_cf(const CorrelatedNormalPair& p1, const CorrelatedNormalPair& p2, double t);

// four independent normals with σ₁σ₂σ₃σ₄ = s
double normal4_independent_pdf(double s, double z);
double normal4_independent_cdf(double s, double z);
// CF of a product of k = 2, 3, 4 independent centred normals with σ₁⋯σ_k = s
double normal_product_cf(int k, double s, double t);
// k = 4 CF through the K₀ integral
double normal4_cf_nicholson(double s, double t);

}  // namespace vgp
