#include "check.hpp"
#include "vgp/errors.hpp"
#include "vgp/oracle.hpp"
#include "vgp/product.hpp"
#include "vgp/quadrature.hpp"

using namespace vgp;

namespace {

// convolution integrals evaluated with mpmath at 20 digits
struct PdfRef {
    double m, a1, b1, n, a2, b2, z, v;
};
const PdfRef pdf_refs[] = {
    {0.8, 1.3, 0.4, 1.7, 0.9, -0.3, -1.5, 0.095527904234703519},
    {0.8, 1.3, 0.4, 1.7, 0.9, -0.3, 0.4, 0.20662959794535152},
    {0.8, 1.3, 0.4, 1.7, 0.9, -0.3, 3, 0.029269803513620946},
    {0, 1, 0, 2, 1, 0, -1.5, 0.064739449473865625},
    {0, 1, 0, 2, 1, 0, 0.4, 0.27139298864630337},
    {0, 1, 0, 2, 1, 0, 3, 0.021520529985663346},
    {-0.25, 1, 0, 1, 1, 0, -1.5, 0.03362772416321311},
    {-0.25, 1, 0, 1, 1, 0, 0.4, 0.21260896856539659},
    {-0.25, 1, 0, 1, 1, 0, 3, 0.0087603686145641061},
    {1.5, 1, 0.3, 0.5, 1, -0.4, -1.5, 0.091949593956433611},
    {1.5, 1, 0.3, 0.5, 1, -0.4, 0.4, 0.2130617513770948},
    {1.5, 1, 0.3, 0.5, 1, -0.4, 3, 0.027277141206610197},
};

}  // namespace

TEST_CASE("density against frozen convolution integrals")
{
    for (const PdfRef& r : pdf_refs) {
        CAPTURE(r.m);
        CAPTURE(r.n);
        CAPTURE(r.z);
        CHECK_REL(product_pdf(make_product(r.m, r.a1, r.b1, r.n, r.a2, r.b2), r.z).value, r.v, 1e-11);
    }
}

TEST_CASE("sign probability spot values")
{
    CHECK(std::abs(product_prob_nonpositive(make_product(0, 1, 0.25, 0, 1, 0.25)) - 0.4871) <= 1e-4);
    CHECK(std::abs(product_prob_nonpositive(make_product(1.5, 1, 0.5, 1.5, 1, 0.5)) - 0.2637) <= 1e-4);
    CHECK(std::abs(product_prob_nonpositive(make_product(1.5, 1, 0.75, 3, 1, 0.75)) - 0.0521) <= 1e-4);
    // half-integer shapes give rationals: p = 81/256 per factor
    CHECK_REL(product_prob_nonpositive(make_product(1.5, 1, 0.25, 1.5, 1, 0.25)), 0.432586669921875, 1e-14);
    CHECK(product_prob_nonpositive(make_product(0.3, 1, 0.0, 2, 1, 0.6)) == 0.5);
}

TEST_CASE("origin is singular, cdf(0) is P(Z <= 0)")
{
    const ProductDist d = make_product(0.5, 1, 0, 0.5, 1, 0);
    CHECK_THROWS_AS(product_pdf(d, 0.0), SingularityError);
    CHECK(product_cdf(d, 0.0).value == 0.5);
    const ProductDist g = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    CHECK(product_cdf(g, 0.0).value == product_prob_nonpositive(g));
}

TEST_CASE("dispatch reports the regime used")
{
    CHECK(product_pdf(make_product(1.5, 1, 0.3, 0.5, 1, 0), 1.0).regime == Regime::FiniteSum);
    CHECK(product_pdf(make_product(0.3, 1, 0.0, 0.8, 1, 0), 1.0).regime == Regime::Series);
    CHECK(product_pdf(make_product(0.3, 1, 0.0, 0.8, 1, 0), 800.0).regime == Regime::Asymptotic);
    CHECK(product_pdf(make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3), 60.0).regime == Regime::Quadrature);
    CHECK(product_cdf(make_product(0.3, 1, 0.0, 0.8, 1, 0), 2.0).regime == Regime::Series);
}

TEST_CASE("series and finite sums agree")
{
    for (double b1 : {0.0, 0.3, -0.4})
        for (double b2 : {0.0, 0.3, -0.4})
            for (double z : {-5.0, -0.1, 1.0}) {
                const ProductDist d = make_product(1.5, 1, b1, 2.5, 1, b2);
                CHECK_REL(product_pdf_series(d, z).value, product_pdf_halfint(d, z).value, 1e-10);
            }
}

TEST_CASE("density matches convolution quadrature in every regime")
{
    const ProductDist d = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    for (double z : {-30.0, -3.0, -0.02, 0.3, 4.0, 25.0}) {
        CAPTURE(z);
        CHECK_REL(product_pdf(d, z).value, quad_pdf(d, z).value, 1e-9);
    }
    const ProductDist s = make_product(0.7, 1.0, 0.0, 0.5, 1.0, 0.0);
    for (double z : {0.01, 2.0, 50.0}) CHECK_REL(product_pdf(s, z).value, quad_pdf(s, z).value, 1e-9);
}

TEST_CASE("reflection in the sign of beta1")
{
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
            const ProductDist a = make_product(0.8, 1.3, 0.4 * s1, 1.2, 0.9, 0.3 * s2);
            const ProductDist b = make_product(0.8, 1.3, -0.4 * s1, 1.2, 0.9, 0.3 * s2);
            for (double z : {0.2, 1.7}) CHECK_REL(product_pdf(a, z).value, product_pdf(b, -z).value, 1e-11);
        }
}

TEST_CASE("density decreases away from the origin on both sides")
{
    const double grid[] = {0.01, 0.1, 0.5, 1, 2, 5};
    for (const ProductDist& d : {make_product(0.5, 1, 0.5, 0.5, 1, 0.25), make_product(2, 1, 0, 1, 1, 0),
                                 make_product(-0.25, 1, 0.2, 0.8, 1.5, -0.6)})
        for (double s : {1.0, -1.0})
            for (int i = 0; i < 5; ++i) CHECK(product_pdf(d, s * grid[i]).value > product_pdf(d, s * grid[i + 1]).value);
}

TEST_CASE("distribution function")
{
    const ProductDist d = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    double prev = 0.0;
    for (double z : {-50.0, -5.0, -1.0, -0.01, 0.01, 1.0, 5.0, 50.0}) {
        const double f = product_cdf(d, z).value;
        CHECK(f > prev);
        CHECK(f < 1.0);
        prev = f;
    }
    for (double z : {-2.0, 0.5, 3.0}) {
        const double h = 1e-4 * std::abs(z);
        const double fd = (product_cdf(d, z + h).value - product_cdf(d, z - h).value) / (2 * h);
        CHECK_REL(fd, product_pdf(d, z).value, 1e-5);
        CHECK(std::abs(product_cdf(d, z).value + product_sf(d, z).value - 1.0) < 1e-13);
    }
    CHECK_REL(product_sf(d, 40.0).value, quad_tail(d, 40.0).value, 1e-8);
}

TEST_CASE("characteristic function")
{
    const ProductDist g = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    const ProductDist s = make_product(0.8, 1.3, 0.0, 1.7, 0.9, 0.0);
    const ProductDist w = make_product(0.5, 1.0, 0.2, 1.5, 1.0, -0.3);
    for (const ProductDist* d : {&g, &s, &w}) {
        CHECK(product_cf(*d, 0.0).value == std::complex<double>(1.0, 0.0));
        for (double t : {0.5, 2.0}) {
            const auto p = product_cf(*d, t).value;
            CHECK(std::abs(p) <= 1.0);
            CHECK(std::abs(p - std::conj(product_cf(*d, -t).value)) < 1e-14);
        }
    }
    CHECK(product_cf(s, 1.3).value.imag() == 0.0);
    CHECK(std::abs(product_cf(w, 1.1).value - product_cf_mixture(w, 1.1).value) < 1e-12);
    CHECK(std::abs(product_cf(s, 1.1).value - product_cf_mixture(s, 1.1).value) < 1e-12);
}

TEST_CASE("quantiles invert the distribution function")
{
    const ProductDist d = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    for (double p : {0.01, 0.3, 0.5, 0.97}) {
        const double q = product_quantile(d, p);
        CHECK(std::abs(product_cdf(d, q).value - p) <= 1e-9);
    }
    CHECK_THROWS_AS(product_quantile(d, 1.0), DomainError);
    CHECK(product_quantile_asymp(d, 1 - 1e-9) > 0.0);
}

TEST_CASE("origin approximations are classified by shape")
{
    struct C {
        double m, n;
        int id;
    };
    for (const C& c : {C{0.5, 1.5, 1}, C{0, 1, 2}, C{0, 0, 3}, C{-0.25, 0.5, 4}, C{-0.25, -0.25, 5}}) {
        const OriginApprox o = product_pdf_origin(make_product(c.m, 1, 0, c.n, 1.3, 0), 1e-8);
        CHECK(o.case_id == c.id);
        CHECK(o.value > 0.0);
    }
    CHECK(product_pdf_origin(make_product(1, 1, 0, 0, 1, 0), 1e-6).swapped);
}

TEST_CASE("tail expansions")
{
    const ProductDist d = make_product(1, 1, 0.3, 2, 1, 0.1);
    const double z = 400.0 / d.xi1();
    CHECK_REL(product_tail_expansion(d, z).value, quad_tail(d, z).value, 1e-4);
    CHECK_REL(product_pdf_expansion(d, z).value, quad_pdf(d, z).value, 1e-4);
    // leading law is within its expected O(1/scale) error
    CHECK_REL(product_tail_asymp(d, z), quad_tail(d, z).value, 0.2);
    const ProductDist h = make_product(0.5, 1, 0, 0.5, 1, 0);
    CHECK_REL(product_tail_asymp(h, 900.0), product_sf(h, 900.0).value, 0.01);
}

TEST_CASE("density integrates to one")
{
    const ProductDist d = make_product(0.8, 1.3, 0.4, 1.7, 0.9, -0.3);
    auto f = [&](double z) { return product_pdf(d, z).value; };
    QuadConfig c;
    c.rel_tol = 1e-10;
    const double right = integrate_singular(f, 0.0, 1.0, c).value + integrate_to_infinity(f, 1.0, c).value;
    const double left = integrate_singular([&](double z) { return f(-z); }, 0.0, 1.0, c).value +
                        integrate_to_infinity([&](double z) { return f(-z); }, 1.0, c).value;
    CHECK(std::abs(right + left - 1.0) < 1e-8);
    CHECK(std::abs(left - product_prob_nonpositive(d)) < 1e-8);
}

TEST_CASE("invalid parameters are rejected")
{
    CHECK_THROWS_AS(make_product(-0.5, 1, 0, 0.5, 1, 0), DomainError);
    CHECK_THROWS_AS(make_product(0.5, 1, 1.2, 0.5, 1, 0), DomainError);
    CHECK_THROWS_AS(make_product(0.5, 1, 0, 0.5, 0, 0), DomainError);
}

TEST_CASE("arguments below the double range of z^2")
{
    // m = -1/4 < n: f ~ C |z|^{2m}, so successive decades scale by exactly 10^{-2m·Δ}
    const ProductDist d = make_product(-0.25, 1, 0, 0.5, 1, 0);
    CHECK_REL(product_pdf(d, 1e-200).value / product_pdf(d, 1e-100).value, 1e50, 1e-10);
    const ProductDist g = make_product(0.3, 1, 0.2, 1.2, 1, -0.1);
    double prev = 0.0;
    for (double z : {1e-100, 1e-160, 1e-250, 1e-300}) {
        const double f = product_pdf(g, z).value;
        CHECK(f > prev);
        prev = f;
        CHECK(std::abs(product_cdf(g, z).value - product_prob_nonpositive(g)) < 1e-15);
    }
}
