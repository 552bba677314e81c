#include "check.hpp"
#include "vgp/errors.hpp"
#include "vgp/oracle.hpp"
#include "vgp/specfun.hpp"

#include <algorithm>

using namespace vgp;

TEST_CASE("convolution quadrature on the Laplace product")
{
    // unit Laplace factors: f(z) = K₀(2√|z|), P(Z > z) = √z K₁(2√z)
    const ProductDist d = make_product(0.5, 1, 0, 0.5, 1, 0);
    for (double z : {1e-6, 0.02, 1.0, 30.0, 300.0}) {
        CAPTURE(z);
        CHECK_REL(quad_pdf(d, z).value, bessel_k(0, 2 * std::sqrt(z)), 1e-10);
        CHECK_REL(quad_pdf(d, -z).value, bessel_k(0, 2 * std::sqrt(z)), 1e-10);
        CHECK_REL(quad_tail(d, z).value, std::sqrt(z) * bessel_k(1, 2 * std::sqrt(z)), 1e-9);
    }
    CHECK(quad_pdf(d, 1.0).regime == Regime::Quadrature);
}

TEST_CASE("Fourier quadrature of the Laplace density")
{
    auto f = [](double x) { return 0.5 * std::exp(-std::abs(x)); };
    for (double t : {0.5, 1.0, 3.0}) {
        const auto c = fourier_cf(f, t, 60.0, 60.0, 1e-12);
        CHECK(std::abs(c.value - std::complex<double>(1 / (1 + t * t), 0.0)) < 1e-10);
    }
    CHECK_THROWS_AS(fourier_cf(f, 0.0, 60.0, 60.0), DomainError);
}

TEST_CASE("Kolmogorov-Smirnov distance is the exact supremum")
{
    std::vector<double> one{0.5};
    CHECK(ks_distance(one, [](double x) { return std::clamp(x, 0.0, 1.0); }) == doctest::Approx(0.5));
    std::vector<double> grid;
    for (int i = 1; i <= 4; ++i) grid.push_back(i / 4.0 - 0.125);
    CHECK(ks_distance(grid, [](double x) { return std::clamp(x, 0.0, 1.0); }) == doctest::Approx(0.125));
}

TEST_CASE("Monte Carlo sampler")
{
    const ProductDist d = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    const auto a = mc_sample_product(d, 1000, 11);
    CHECK(a == mc_sample_product(d, 1000, 11));
    CHECK(a != mc_sample_product(d, 1000, 12));

    const ProductDist h = make_product(0.5, 1, 0.5, 1.5, 1, 0.25);
    auto s = mc_sample_product(h, 100000, 5);
    const double ks = ks_distance(s, [&](double z) { return product_cdf(h, z).value; });
    CHECK(ks <= 1.95 / std::sqrt(100000.0));
}

TEST_CASE("Monte Carlo sign probability for the (0.5, 0.5) / (1.5, 1.5) cell")
{
    const ProductDist d = make_product(1.5, 1, 0.5, 1.5, 1, 0.5);
    const auto s = mc_sample_product(d, 1000000, 2024);
    const double p = static_cast<double>(std::count_if(s.begin(), s.end(), [](double z) { return z <= 0; })) / s.size();
    CHECK(std::abs(p - 0.2637) <= 0.0015);
}
