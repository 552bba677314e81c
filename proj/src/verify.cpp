#include "vgp/verify.hpp"
#include "vgp/errors.hpp"
#include "vgp/meijer.hpp"
#include "vgp/oracle.hpp"
#include "vgp/product.hpp"
#include "vgp/special_cases.hpp"
#include "vgp/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace vgp {

namespace {

struct Set {
    double m, a1, b1, n, a2, b2;
    ProductDist dist() const { return make_product(m, a1, b1, n, a2, b2); }
};

std::string describe(const Set& s)
{
    std::ostringstream o;
    o << "(m=" << s.m << ", a1=" << s.a1 << ", b1=" << s.b1 << ", n=" << s.n << ", a2=" << s.a2 << ", b2=" << s.b2
      << ")";
    return o.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// max over a set of evaluations; an exception fails the check and is reported
CheckResult max_check(const std::string& name, double limit, const std::function<double(std::string&)>& body)
{
    CheckResult c;
    c.name = name;
    c.limit = limit;
    try {
        c.measured = body(c.detail);
        c.passed = c.measured <= limit;
    } catch (const std::exception& e) {
        c.passed = false;
        c.measured = INFINITY;
        c.detail = e.what();
    }
    return c;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(bool quick)
{
    std::vector<CheckResult> out;
    const std::vector<Set> sets = {
        {0.5, 1.0, 0.0, 0.5, 1.0, 0.0},   {1.5, 1.0, 0.3, 0.5, 1.0, -0.4}, {0.0, 1.0, 0.0, 2.0, 1.0, 0.0},
        {-0.25, 1.0, 0.0, 1.0, 1.0, 0.0}, {0.8, 1.3, 0.4, 1.7, 0.9, -0.3},
    };
    const std::vector<double> zgrid = quick ? std::vector<double>{-2.0, -0.3, 0.3, 2.0}
                                            : std::vector<double>{-6.0, -2.0, -0.7, -0.1, 0.05, 0.4, 1.0, 3.0, 8.0};

    out.push_back(max_check("meijer reduction identities", 1e-9, [](std::string& d) {
        double w = 0.0;
        for (const auto& r : reduction_residuals({0.1, 0.5, 1.0, 5.0, 20.0})) {
            if (r.max_rel > w) d = r.name;
            w = std::max(w, r.max_rel);
        }
        return w;
    }));

    out.push_back(max_check("dual-path density (series vs finite sum)", 1e-8, [&](std::string& d) {
        double w = 0.0;
        const std::vector<double> shapes = quick ? std::vector<double>{0.5, 1.5} : std::vector<double>{0.5, 1.5, 2.5};
        for (double m : shapes)
            for (double n : shapes)
                for (double b1 : {0.0, -0.4})
                    for (double b2 : {0.0, 0.3})
                        for (double z : {-1.0, 0.1, 5.0}) {
                            const ProductDist p = make_product(m, 1.0, b1, n, 1.0, b2);
                            const double e = rel(product_pdf_series(p, z).value, product_pdf_halfint(p, z).value);
                            if (e > w) d = describe({m, 1, b1, n, 1, b2});
                            w = std::max(w, e);
                        }
        return w;
    }));

    out.push_back(max_check("density vs convolution quadrature", 1e-5, [&](std::string& d) {
        double w = 0.0;
        for (const Set& s : sets)
            for (double z : zgrid) {
                const double e = rel(product_pdf(s.dist(), z).value, quad_pdf(s.dist(), z).value);
                if (e > w) d = describe(s);
                w = std::max(w, e);
            }
        return w;
    }));

    out.push_back(max_check("cdf(0) equals P(Z<=0)", 1e-15, [&](std::string&) {
        double w = 0.0;
        for (const Set& s : sets)
            w = std::max(w, std::abs(product_cdf(s.dist(), 0.0).value - product_prob_nonpositive(s.dist())));
        return w;
    }));

    out.push_back(max_check("reflection f(b1,b2;z) = f(-b1,b2;-z)", 1e-10, [&](std::string& d) {
        double w = 0.0;
        for (const Set& s : sets)
            for (double sg1 : {1.0, -1.0})
                for (double sg2 : {1.0, -1.0})
                    for (double z : {-1.5, 0.2, 2.5}) {
                        const Set a{s.m, s.a1, sg1 * s.b1, s.n, s.a2, sg2 * s.b2};
                        const Set b{s.m, s.a1, -sg1 * s.b1, s.n, s.a2, sg2 * s.b2};
                        const double e = rel(product_pdf(a.dist(), z).value, product_pdf(b.dist(), -z).value);
                        if (e > w) d = describe(a);
                        w = std::max(w, e);
                    }
        return w;
    }));

    out.push_back(max_check("unimodal at the origin (violations)", 0.0, [&](std::string& d) {
        double bad = 0.0;
        const double grid[] = {0.01, 0.1, 0.5, 1.0, 2.0, 5.0};
        for (const Set& s : sets)
            for (double sg : {1.0, -1.0})
                for (int i = 0; i + 1 < 6; ++i)
                    if (!(product_pdf(s.dist(), sg * grid[i]).value > product_pdf(s.dist(), sg * grid[i + 1]).value)) {
                        bad += 1.0;
                        d = describe(s);
                    }
        return bad;
    }));

    out.push_back(max_check("cf: phi(0)=1, |phi|<=1, phi(-t)=conj, real when beta=0", 1e-12, [&](std::string& d) {
        double w = 0.0;
        for (const Set& s : sets) {
            w = std::max(w, std::abs(product_cf(s.dist(), 0.0).value - 1.0));
            for (double t : {0.3, 1.0, 4.0}) {
                const auto p = product_cf(s.dist(), t).value, q = product_cf(s.dist(), -t).value;
                double e = std::max(std::abs(p - std::conj(q)), std::abs(p) - 1.0);
                if (s.dist().symmetric()) e = std::max(e, std::abs(p.imag()));
                if (e > w) d = describe(s);
                w = std::max(w, e);
            }
        }
        return w;
    }));

    out.push_back(max_check("cdf derivative matches density", 1e-5, [&](std::string& d) {
        double w = 0.0;
        for (const Set& s : sets)
            for (double z : {-1.7, 0.6, 2.2}) {
                const double h = 1e-4 * std::abs(z);
                const double fd = (product_cdf(s.dist(), z + h).value - product_cdf(s.dist(), z - h).value) / (2 * h);
                const double e = rel(fd, product_pdf(s.dist(), z).value);
                if (e > w) d = describe(s);
                w = std::max(w, e);
            }
        return w;
    }));

    out.push_back(max_check("tail expansion vs quadrature tail (|ratio-1|)", 0.02, [&](std::string& d) {
        double w = 0.0;
        for (const Set& s : sets) {
            const ProductDist p = s.dist();
            for (double sg : {1.0, -1.0}) {
                const double xi = sg > 0 ? p.xi1() : p.xi2();
                const double z = sg * 400.0 / xi;  // 2√(ξ|z|) = 40
                const double e = std::abs(product_tail_expansion(p, z).value / quad_tail(p, z).value - 1.0);
                if (e > w) d = describe(s);
                w = std::max(w, e);
            }
        }
        return w;
    }));

    out.push_back(max_check("special cases vs generic route", 1e-7, [&](std::string& d) {
        double w = 0.0;
        auto upd = [&](double e, const char* what) {
            if (e > w) d = what;
            w = std::max(w, e);
        };
        for (double z : {-3.0, -0.2, 0.4, 2.0}) {
            const ProductDist al = make_product(0.5, 1.3, 0.2, 0.5, 0.8, -0.3);
            upd(rel(al_product_pdf(1.3, 0.2, 0.8, -0.3, z), product_pdf(al, z).value), "AL pdf");
            upd(rel(al_product_cdf(1.3, 0.2, 0.8, -0.3, z), product_cdf(al, z).value), "AL cdf");
            const ProductDist lp = make_product(0.5, 1.2, 0.0, 0.5, 0.7, 0.0);
            upd(rel(laplace_product_pdf(1.2, 0.7, z), product_pdf(lp, z).value), "Laplace pdf");
            upd(rel(laplace_product_cdf(1.2, 0.7, z), product_cdf(lp, z).value), "Laplace cdf");
            const ProductDist nl = make_product(0.0, 1.0 / (0.8 * 1.5), 0.0, 0.5, 1.1, 0.0);
            upd(rel(normal2_laplace_pdf(0.8, 1.5, 1.1, z), product_pdf(nl, z).value), "normal-normal-Laplace pdf");
            upd(rel(normal2_laplace_cdf(0.8, 1.5, 1.1, z), product_cdf(nl, z).value), "normal-normal-Laplace cdf");
            const CorrelatedNormalPair u{1.2, 0.9, 0.4}, v{0.7, 1.1, -0.25};
            const ProductDist n4 = normal4_dist(u, v);
            upd(rel(normal4_pdf(u, v, z), quad_pdf(n4, z).value), "correlated normals pdf");
            upd(rel(normal4_independent_pdf(1.3, z), product_pdf(make_product(0, 1 / std::sqrt(1.3), 0, 0,
                                                                              1 / std::sqrt(1.3), 0), z).value),
                "independent normals pdf");
        }
        for (double t : {0.4, 1.0, 2.5}) {
            const ProductDist al = make_product(0.5, 1.3, 0.2, 0.5, 0.8, -0.3);
            upd(std::abs(al_product_cf(1.3, 0.2, 0.8, -0.3, t) - product_cf(al, t).value), "AL cf");
            upd(std::abs(laplace_product_cf(1.2, 0.7, t) - product_cf(make_product(0.5, 1.2, 0, 0.5, 0.7, 0), t).value
                                                                .real()),
                "Laplace cf");
            upd(std::abs(normal2_laplace_cf(0.8, 1.5, 1.1, t) -
                         product_cf(make_product(0.0, 1.0 / 1.2, 0.0, 0.5, 1.1, 0.0), t).value.real()),
                "normal-normal-Laplace cf");
            upd(std::abs(vg_laplace_cf(0.3, 0.9, 1.4, t) -
                         product_cf(make_product(0.3, 0.9, 0.0, 0.5, 1.4, 0.0), t).value.real()),
                "VG-Laplace cf");
            upd(std::abs(normal_product_cf(4, 1.3, t) - normal4_cf_nicholson(1.3, t)), "four normals cf");
        }
        return w;
    }));

    return out;
}

}  // namespace vgp
