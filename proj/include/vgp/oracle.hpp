#pragma once

#include "vgp/product.hpp"
#include "vgp/quadrature.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace vgp {

QuadConfig oracle_quad_config();

// ∫ f_X(x) f_Y(z/x) dx/|x| on x = ±e^u, split at the saddle of each half line
RealResult quad_pdf(const ProductDist& d, double z, const QuadConfig& cfg = oracle_quad_config());

// ∫_z^∞ of quad_pdf for z > 0, ∫_{-∞}^z for z < 0
RealResult quad_tail(const ProductDist& d, double z, const QuadConfig& cfg = oracle_quad_config());

// ∫ e^{itz} pdf(z) dz with the real line cut at ±upper
ComplexResult fourier_cf(const std::function<double(double)>& pdf, double t, double upper_pos, double upper_neg,
                         double tol = 1e-10);

std::vector<double> mc_sample_product(const ProductDist& d, std::size_t n, std::uint64_t seed);

// sup |F_n - F|; `samples` is sorted in place
double ks_distance(std::vector<double>& samples, const std::function<double(double)>& cdf);

}  // namespace vgp
