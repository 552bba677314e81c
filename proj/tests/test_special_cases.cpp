#include "check.hpp"
#include "vgp/errors.hpp"
#include "vgp/product.hpp"
#include "vgp/quadrature.hpp"
#include "vgp/special_cases.hpp"
#include "vgp/specfun.hpp"

using namespace vgp;

TEST_CASE("asymmetric Laplace product against the generic route")
{
    const double a1 = 1.3, b1 = 0.2, a2 = 0.8, b2 = -0.3;
    const ProductDist d = make_product(0.5, a1, b1, 0.5, a2, b2);
    for (double z : {-4.0, -0.3, 0.05, 1.0, 6.0}) {
        CAPTURE(z);
        CHECK_REL(al_product_pdf(a1, b1, a2, b2, z), product_pdf(d, z).value, 1e-7);
        CHECK_REL(al_product_cdf(a1, b1, a2, b2, z), product_cdf(d, z).value, 1e-7);
    }
    for (double t : {-2.0, 0.3, 1.0, 5.0})
        CHECK(std::abs(al_product_cf(a1, b1, a2, b2, t) - product_cf(d, t).value) < 1e-7);
    CHECK(al_product_cf(a1, b1, a2, b2, 0.0) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("symmetric Laplace product")
{
    const ProductDist d = make_product(0.5, 1.2, 0, 0.5, 0.7, 0);
    for (double z : {-2.0, 0.1, 3.0}) {
        CHECK_REL(laplace_product_pdf(1.2, 0.7, z), product_pdf(d, z).value, 1e-7);
        CHECK_REL(laplace_product_cdf(1.2, 0.7, z), product_cdf(d, z).value, 1e-7);
    }
    for (double t : {0.2, 1.0, 4.0}) CHECK(std::abs(laplace_product_cf(1.2, 0.7, t) - product_cf(d, t).value.real()) < 1e-7);
    // unit rates: P(Z > z) = √z K₁(2√z)
    for (double z : {0.01, 0.5, 2.0, 30.0})
        CHECK(std::abs(laplace_product_cdf(1, 1, z) - (1 - std::sqrt(z) * bessel_k(1, 2 * std::sqrt(z)))) <= 1e-13);
}

TEST_CASE("two normals times a Laplace factor")
{
    const double s1 = 0.8, s2 = 1.5, a2 = 1.1;
    const ProductDist d = make_product(0.0, 1.0 / (s1 * s2), 0.0, 0.5, a2, 0.0);
    for (double z : {-3.0, -0.05, 0.7, 9.0}) {
        CAPTURE(z);
        // the complex K₀ pair must cancel to a real value; the call throws otherwise
        CHECK_REL(normal2_laplace_pdf(s1, s2, a2, z), product_pdf(d, z).value, 1e-7);
        CHECK_REL(normal2_laplace_cdf(s1, s2, a2, z), product_cdf(d, z).value, 1e-7);
    }
    for (double t : {0.3, 1.0, 3.0})
        CHECK(std::abs(normal2_laplace_cf(s1, s2, a2, t) - product_cf(d, t).value.real()) < 1e-7);
}

TEST_CASE("VG times Laplace characteristic function")
{
    for (double m : {-0.2, 0.3, 1.25})
        for (double t : {0.4, 2.0})
            CHECK(std::abs(vg_laplace_cf(m, 0.9, 1.4, t) - product_cf(make_product(m, 0.9, 0, 0.5, 1.4, 0), t).value.real()) <
                  1e-7);
    CHECK_THROWS_AS(vg_laplace_cf(0.5, 1, 1, 1.0), DomainError);
    CHECK_THROWS_AS(vg_laplace_cf(1.5, 1, 1, 1.0), DomainError);
}

TEST_CASE("correlated normal pair maps to a VG law with matching moments")
{
    const CorrelatedNormalPair p{1.2, 0.9, 0.4};
    const VGParams v = p.to_vg();
    CHECK(v.m == 0.0);
    const double g2 = v.gamma2();
    CHECK_REL(v.beta / g2, p.rho * p.sigma_u * p.sigma_v, 1e-14);
    const double var = 1 / g2 + 2 * v.beta * v.beta / (g2 * g2);
    const double su = p.sigma_u * p.sigma_v;
    CHECK_REL(var, su * su * (1 + p.rho * p.rho), 1e-14);
    CHECK_THROWS_AS(CorrelatedNormalPair({1, 1, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS(CorrelatedNormalPair({0, 1, 0.0}).validate(), DomainError);
}

TEST_CASE("four normals")
{
    const CorrelatedNormalPair u{1.2, 0.9, 0.4}, v{0.7, 1.1, -0.25};
    const ProductDist d = normal4_dist(u, v);
    for (double z : {-2.0, 0.3, 1.5}) {
        CHECK_REL(normal4_pdf(u, v, z), product_pdf(d, z).value, 1e-7);
        CHECK_REL(normal4_cdf(u, v, z), product_cdf(d, z).value, 1e-7);
    }
    CHECK(std::abs(normal4_cf(u, v, 0.8) - product_cf(d, 0.8).value) < 1e-7);

    const CorrelatedNormalPair a{1.1, 0.8, 0.0}, b{0.9, 1.3, 0.0};
    const double s = 1.1 * 0.8 * 0.9 * 1.3;
    for (double z : {0.05, 0.8, 4.0}) {
        CHECK_REL(normal4_pdf(a, b, z), normal4_pdf(a, b, -z), 1e-15);
        CHECK_REL(normal4_pdf(a, b, z), normal4_independent_pdf(s, z), 1e-12);
        CHECK_REL(normal4_cdf(a, b, z), normal4_independent_cdf(s, z), 1e-12);
    }
    auto f = [&](double z) { return normal4_independent_pdf(s, z); };
    const double half = integrate_singular(f, 0.0, 1.0).value + integrate_to_infinity(f, 1.0).value;
    CHECK(std::abs(2 * half - 1.0) < 1e-9);
}

TEST_CASE("products of normals: characteristic functions")
{
    for (double t : {0.2, 1.0, 3.0}) {
        const double s = 1.3;
        CHECK_REL(normal_product_cf(2, s, t), 1 / std::sqrt(1 + s * s * t * t), 1e-15);
        CHECK(std::abs(normal_product_cf(4, s, t) - normal4_cf_nicholson(s, t)) < 1e-10);
        CHECK(std::abs(normal_product_cf(4, s, t) - product_cf(make_product(0, 1 / std::sqrt(s), 0, 0, 1 / std::sqrt(s), 0), t).value.real()) <
              1e-7);
    }
    // E[(1 + s²t²W²)^{-1/2}], W standard normal, by mpmath
    CHECK_REL(normal_product_cf(3, 1.3, 0.2), 0.97029133348404315, 1e-13);
    CHECK_REL(normal_product_cf(3, 1.3, 1.0), 0.72710094915417053, 1e-13);
    CHECK_REL(normal_product_cf(3, 1.3, 3.0), 0.43930116063759299, 1e-13);
    CHECK(normal_product_cf(3, 1.0, 0.0) == 1.0);
    CHECK_THROWS_AS(normal_product_cf(5, 1.0, 1.0), DomainError);
}
