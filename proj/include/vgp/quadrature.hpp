#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <type_traits>
#include <vector>

namespace vgp {

struct QuadConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_subdivisions = 2000;
    std::vector<double> singularity_pads;  // extra breakpoints
};

template <class T>
struct QuadResult {
    T value{};
    double abs_err = 0.0;
    int evals = 0;
    bool converged = true;
};

namespace quad_detail {

inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478000, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
double magnitude(const T& v)
{
    return std::abs(v);
}

template <class T>
struct Piece {
    double a, b;
    T value;
    double err;
    bool operator<(const Piece& o) const { return err < o.err; }
};

template <class F, class T>
Piece<T> kronrod21(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const T fc = f(c);
    T k = fc * kWgk[10];
    T g = T{};
    for (int j = 0; j < 10; ++j) {
        const double dx = h * kXgk[j];
        const T s = f(c - dx) + f(c + dx);
        k += s * kWgk[j];
        if (j % 2 == 1) g += s * kWg[j / 2];
    }
    return {a, b, k * h, magnitude(T((k - g) * h))};
}

}  // namespace quad_detail

// Globally adaptive 21-point Gauss-Kronrod on [a, b]; f may return double or complex.
template <class F>
auto integrate(F&& f, double a, double b, const QuadConfig& cfg = {})
{
    using T = std::decay_t<decltype(f(a))>;
    using quad_detail::Piece;
    QuadResult<T> out;
    if (a == b) return out;

    std::vector<double> cuts{a};
    for (double p : cfg.singularity_pads)
        if ((p - a) * (p - b) < 0) cuts.push_back(p);
    cuts.push_back(b);
    std::sort(cuts.begin() + 1, cuts.end() - 1, [&](double u, double v) { return (u < v) == (a < b); });

    std::priority_queue<Piece<T>> heap;
    T total{};
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto p = quad_detail::kronrod21<F, T>(f, cuts[i], cuts[i + 1]);
        out.evals += 21;
        total += p.value;
        err += p.err;
        heap.push(p);
    }
    int pieces = static_cast<int>(heap.size());
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * quad_detail::magnitude(total))) {
        if (pieces >= cfg.max_subdivisions) {
            out.converged = false;
            break;
        }
        Piece<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            out.converged = false;
            heap.push(worst);
            break;
        }
        auto l = quad_detail::kronrod21<F, T>(f, worst.a, mid);
        auto r = quad_detail::kronrod21<F, T>(f, mid, worst.b);
        out.evals += 42;
        total += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++pieces;
    }
    // re-sum to shed accumulated rounding from the running updates
    total = T{};
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    out.value = total;
    out.abs_err = err;
    return out;
}

// ∫_a^∞ through the map x = a + t/(1-t)
template <class F>
auto integrate_to_infinity(F&& f, double a, const QuadConfig& cfg = {})
{
    using T = std::decay_t<decltype(f(a))>;
    auto g = [&](double t) -> T {
        if (t >= 1.0) return T{};
        const double u = 1.0 - t;
        const double x = a + t / u;
        const T v = f(x);
        if (v == T{}) return v;
        return v / (u * u);
    };
    QuadConfig c = cfg;
    c.singularity_pads.clear();
    for (double p : cfg.singularity_pads)
        if (p > a) c.singularity_pads.push_back((p - a) / (1.0 + p - a));
    return integrate(g, 0.0, 1.0, c);
}

// ∫_{-∞}^∞ as two half lines split at `centre`
template <class F>
auto integrate_real_line(F&& f, double centre, const QuadConfig& cfg = {})
{
    auto right = integrate_to_infinity(f, centre, cfg);
    auto reflected = [&](double x) { return f(2.0 * centre - x); };
    QuadConfig c = cfg;
    c.singularity_pads.clear();
    for (double p : cfg.singularity_pads)
        if (p < centre) c.singularity_pads.push_back(2.0 * centre - p);
    auto left = integrate_to_infinity(reflected, centre, c);
    right.value += left.value;
    right.abs_err += left.abs_err;
    right.evals += left.evals;
    right.converged = right.converged && left.converged;
    return right;
}

// Tanh-sinh on [a, b] for integrands with endpoint singularities (real valued).
QuadResult<double> integrate_singular(const std::function<double(double)>& f, double a, double b,
                                      const QuadConfig& cfg = {});

// exp-sinh on [a, ∞) for real integrands that may be singular at a.
QuadResult<double> integrate_singular_to_infinity(const std::function<double(double)>& f, double a,
                                                  const QuadConfig& cfg = {});

// ∫_0^{upper} g(x) e^{iωx} dx, splitting at half periods; the first piece tolerates
// an integrable singularity of g at 0.
QuadResult<std::complex<double>> fourier_integral(const std::function<double(double)>& g, double omega,
                                                  double upper, const QuadConfig& cfg = {});

}  // namespace vgp
