#include "meijer/engine.hpp"
#include "vgp/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace vgp {

namespace {

constexpr double kSnap = 1e-12;

bool near_integer(double v, long& n)
{
    const double r = std::round(v);
    if (std::abs(v - r) > kSnap) return false;
    n = static_cast<long>(r);
    return true;
}

}  // namespace

std::vector<PoleGroup> pole_groups(std::span<const double> b)
{
    std::vector<PoleGroup> groups;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        bool placed = false;
        for (auto& g : groups) {
            long d = 0;
            if (near_integer(b[i] - b[g.members.front().first], d)) {
                g.members.emplace_back(i, 0);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back(PoleGroup{0.0, {{i, 0}}});
    }
    for (auto& g : groups) {
        double base = b[g.members.front().first];
        for (auto& mbr : g.members) base = std::min(base, b[mbr.first]);
        g.base = base;
        for (auto& mbr : g.members) mbr.second = static_cast<int>(std::lround(b[mbr.first] - base));
    }
    return groups;
}

namespace meijer_detail {

Plan make_plan(const MeijerParams& p)
{
    if (p.m < 1 || p.m > static_cast<int>(p.b.size()) || p.n < 0 || p.n > static_cast<int>(p.a.size()))
        throw DomainError("meijer: inconsistent orders");
    for (double v : p.a)
        if (!std::isfinite(v)) throw DomainError("meijer: non-finite parameter");
    for (double v : p.b)
        if (!std::isfinite(v)) throw DomainError("meijer: non-finite parameter");

    const std::span<const double> bnum(p.b.data(), p.m);
    for (int i = 0; i < p.n; ++i)
        for (double bj : bnum) {
            long d = 0;
            if (near_integer(p.a[i] - bj, d) && d >= 1)
                throw DomainError("meijer: a-parameter and b-parameter poles cannot be separated");
        }

    // canonical form: every parameter within kSnap of (group base + integer) is stored as such,
    // so all groups see one consistent parameter set
    const std::vector<PoleGroup> groups = pole_groups(bnum);
    struct Canon {
        double base;
        long offset;
    };
    auto canon = [&](double v) {
        for (const PoleGroup& g : groups) {
            long d = 0;
            if (near_integer(v - g.base, d)) return Canon{g.base, d};
        }
        return Canon{v, 0};
    };
    std::vector<Canon> bc(p.b.size()), ac(p.a.size());
    for (std::size_t j = 0; j < p.b.size(); ++j) bc[j] = canon(p.b[j]);
    for (std::size_t j = 0; j < p.a.size(); ++j) ac[j] = canon(p.a[j]);

    Plan plan;
    for (const PoleGroup& g : groups) {
        GroupPlan gp;
        gp.base = g.base;
        gp.order_cap = g.max_order();
        for (auto& mbr : g.members) gp.max_offset = std::max(gp.max_offset, mbr.second);
        auto add = [&](int dir, int power, Canon c, double k0) {
            Factor f;
            f.dir = dir;
            f.power = power;
            f.param_base = c.base;
            f.param_offset = c.offset;
            f.k0 = k0;
            f.c0 = k0 - dir * ((c.base - g.base) + static_cast<double>(c.offset));
            if (c.base == g.base) {
                f.integral = true;
                f.n0 = static_cast<long>(f.c0);
            } else {
                f.integral = near_integer(f.c0, f.n0);
            }
            gp.factors.push_back(f);
        };
        for (int j = 0; j < p.m; ++j) add(-1, 1, bc[j], 0.0);
        for (int j = 0; j < p.n; ++j) add(1, 1, ac[j], 1.0);
        for (std::size_t j = p.m; j < p.b.size(); ++j) add(1, -1, bc[j], 1.0);
        for (std::size_t j = p.n; j < p.a.size(); ++j) add(-1, -1, ac[j], 0.0);
        plan.groups.push_back(std::move(gp));
    }
    return plan;
}

namespace {

using mp50 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;
using mp100 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                            boost::multiprecision::et_off>;

constexpr int kMaxOrder = 8;

// sign * m * 2^e with m in [1/2, 1)
template <class Real>
struct Scaled {
    Real m = 1;
    long e = 0;
    int sign = 1;

    void normalize()
    {
        using std::frexp;
        int ex = 0;
        m = frexp(m, &ex);
        e += ex;
    }
    void mul(const Real& v)
    {
        if (v < 0) sign = -sign;
        m *= (v < 0 ? Real(-v) : v);
        normalize();
    }
    void div(const Real& v)
    {
        if (v < 0) sign = -sign;
        m /= (v < 0 ? Real(-v) : v);
        normalize();
    }
    void mul_exp(const Real& log_v)
    {
        using std::exp;
        using std::floor;
        const Real ln2 = boost::math::constants::ln_two<Real>();
        const Real k = floor(log_v / ln2);
        m *= exp(log_v - k * ln2);
        e += static_cast<long>(k);
        normalize();
    }
    Real value() const
    {
        using std::ldexp;
        if (e > std::numeric_limits<int>::max()) return sign * std::numeric_limits<Real>::infinity();
        if (e < std::numeric_limits<int>::min()) return Real(0);
        return sign * ldexp(m, static_cast<int>(e));
    }
};

// Arguments below 1 are moved up by the recurrence first: the multiprecision
// digamma in older Boost releases mishandles negative arguments.
template <class Real>
Real lgamma_signed(const Real& x, int& sign)
{
    using std::abs;
    using std::log;
    Real shift = 0;
    Real y = x;
    int sg = 1;
    while (y < 1) {
        shift += log(abs(y));
        if (y < 0) sg = -sg;
        y += 1;
    }
    int s2 = 1;
    const Real v = boost::math::lgamma(y, &s2) - shift;
    sign = sg * s2;
    return v;
}

template <class Real>
Real polygamma_any(int n, const Real& x)
{
    using std::pow;
    Real corr = 0;
    Real y = x;
    while (y < 1) {
        corr += pow(y, -(n + 1));
        y += 1;
    }
    const Real base = (n == 0) ? boost::math::digamma(y) : boost::math::polygamma(n, y);
    if (n == 0) return base - corr;
    // ψ^{(n)}(y) = ψ^{(n)}(x) + (-1)^n n! Σ (x+k)^{-(n+1)}
    Real f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return base - ((n % 2 == 0) ? Real(1) : Real(-1)) * f * corr;
}

template <class Real>
double to_double(const Real& v)
{
    return static_cast<double>(v);
}

template <class Real>
struct GroupState {
    Scaled<Real> c;
    std::array<Real, kMaxOrder> s{};  // s[r]: coefficient of ε^r in the log of the regular part
    int eps_power = 0;
    int order = 1;

    // multiply the running product by (v + dir ε)^expo
    void linear(const Real& v, bool v_zero, int expo, int dir)
    {
        if (v_zero) {
            eps_power += expo;
            if (dir < 0) c.sign = -c.sign;
            return;
        }
        if (expo > 0) c.mul(v);
        else c.div(v);
        if (order > 1) {
            const Real q = Real(dir) / v;
            Real pw = q;
            for (int r = 1; r < order; ++r) {
                const Real t = pw / r;
                s[r] += (r % 2 == 1) ? Real(expo * t) : Real(-expo * t);
                pw *= q;
            }
        }
    }

    // coefficient of ε^{n} in exp(Σ_{r≥1} s_r ε^r)
    Real exp_coeff(int n) const
    {
        std::array<Real, kMaxOrder> e{};
        e[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Real acc = 0;
            for (int r = 1; r <= k; ++r) acc += Real(r) * s[r] * e[k - r];
            e[k] = acc / k;
        }
        return e[n];
    }
};

template <class Real>
struct FactorState {
    Factor f;
    long n = 0;  // current integer argument
    Real u = 0;  // current real argument
};

template <class Real>
TierOutcome run(const Plan& plan, double x_d, double lnx_d, double log_scale, int max_terms)
{
    using std::abs;
    using std::log;
    // x_d = 0: the argument is exp(lnx_d), below the double range
    const Real x = x_d;
    const Real lnx = x_d > 0 ? Real(log(x)) : Real(lnx_d);
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real euler = boost::math::constants::euler<Real>();

    Real total = 0, abs_total = 0, tail = 0;
    int terms = 0;
    bool converged = true;

    for (const GroupPlan& g : plan.groups) {
        const int order = std::min(g.order_cap, kMaxOrder - 1);
        if (g.order_cap >= kMaxOrder) throw DomainError("meijer: pole multiplicity too high");
        GroupState<Real> st;
        st.order = order;
        std::vector<FactorState<Real>> fs;
        fs.reserve(g.factors.size());

        for (const Factor& f : g.factors) {
            FactorState<Real> s{f, 0, 0};
            if (!f.integral) {
                const Real c0 = Real(f.k0) - f.dir * ((Real(f.param_base) - Real(g.base)) + Real(f.param_offset));
                int sg = 1;
                const Real lg = lgamma_signed(c0, sg);
                st.c.mul_exp(f.power * lg);
                if (sg < 0) st.c.sign = -st.c.sign;
                Real fact = 1, dpow = 1;
                for (int r = 1; r < order; ++r) {
                    fact *= r;
                    dpow *= f.dir;
                    const Real psi = polygamma_any(r - 1, c0);
                    st.s[r] += f.power * psi * dpow / fact;
                }
                s.u = c0;
            } else {
                // Γ(1 + δ), δ = dir ε
                Real dpow = 1;
                for (int r = 1; r < order; ++r) {
                    dpow *= f.dir;
                    const Real coeff = (r == 1) ? Real(-euler) : Real(((r % 2 == 0) ? 1 : -1) * boost::math::zeta(Real(r)) / r);
                    st.s[r] += f.power * coeff * dpow;
                }
                const long n0 = f.n0;
                if (n0 >= 1) {
                    for (long l = 1; l < n0; ++l) st.linear(Real(l), false, f.power, f.dir);
                } else {
                    for (long l = n0; l <= 0; ++l) st.linear(Real(l), l == 0, -f.power, f.dir);
                }
                s.n = n0;
            }
            fs.push_back(s);
        }
        st.c.mul_exp(Real(g.base) * lnx + Real(log_scale));
        if (order > 1) st.s[1] += lnx;

        Real group_sum = 0, max_term = 0, prev = 0;
        int quiet = 0;
        for (int k = 0;; ++k) {
            Real term = 0;
            const int p = -st.eps_power;
            if (p > order) throw DomainError("meijer: internal pole order mismatch");
            if (p >= 1) term = -st.c.value() * (p > 1 ? st.exp_coeff(p - 1) : Real(1));
            group_sum += term;
            const Real at = abs(term);
            abs_total += at;
            if (at > max_term) max_term = at;
            ++terms;

            if (k > g.max_offset + 2) {
                if (at <= eps * max_term && at <= prev) ++quiet;
                else quiet = 0;
                if (quiet >= 3 || (max_term == 0 && k > g.max_offset + 12)) {
                    tail += at + prev;
                    break;
                }
            }
            prev = at;
            if (terms >= max_terms) {
                converged = false;
                tail += at;
                break;
            }
            // advance to the pole base + k + 1
            if (x_d > 0)
                st.c.mul(x);
            else
                st.c.mul_exp(lnx);
            for (auto& s : fs) {
                const Factor& f = s.f;
                if (f.dir > 0) {
                    if (f.integral) {
                        st.linear(Real(s.n), s.n == 0, f.power, 1);
                        s.n += 1;
                    } else {
                        st.linear(s.u, false, f.power, 1);
                        s.u += 1;
                    }
                } else {
                    if (f.integral) {
                        st.linear(Real(s.n - 1), s.n - 1 == 0, -f.power, -1);
                        s.n -= 1;
                    } else {
                        s.u -= 1;
                        st.linear(s.u, false, -f.power, -1);
                    }
                }
            }
        }
        total += group_sum;
    }
    TierOutcome out;
    out.value = to_double(total);
    out.abs_sum = to_double(abs_total);
    out.tail = to_double(tail);
    out.eps = to_double(eps);
    out.terms = terms;
    out.converged = converged;
    return out;
}

}  // namespace

TierOutcome run_double(const Plan& plan, double x, double lx, double ls, int mt) { return run<double>(plan, x, lx, ls, mt); }
TierOutcome run_long_double(const Plan& plan, double x, double lx, double ls, int mt) { return run<long double>(plan, x, lx, ls, mt); }
TierOutcome run_mp50(const Plan& plan, double x, double lx, double ls, int mt) { return run<mp50>(plan, x, lx, ls, mt); }
TierOutcome run_mp100(const Plan& plan, double x, double lx, double ls, int mt) { return run<mp100>(plan, x, lx, ls, mt); }

}  // namespace meijer_detail
}  // namespace vgp
