#include "meijer/engine.hpp"
#include "vgp/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace vgp {

void MeijerOrders::validate() const
{
    std::size_t na = 0, nb = 0;
    switch (kind) {
    case MeijerKind::G40_04: na = 0; nb = 4; break;
    case MeijerKind::G41_15: na = 1; nb = 5; break;
    case MeijerKind::G31_13: na = 1; nb = 3; break;
    }
    if (a_params.size() != na || b_params.size() != nb) throw DomainError("meijer: wrong parameter count for kind");
    for (double v : a_params)
        if (!std::isfinite(v)) throw DomainError("meijer: non-finite parameter");
    for (double v : b_params)
        if (!std::isfinite(v)) throw DomainError("meijer: non-finite parameter");
}

MeijerParams to_params(const MeijerOrders& o)
{
    o.validate();
    MeijerParams p;
    p.a = o.a_params;
    p.b = o.b_params;
    switch (o.kind) {
    case MeijerKind::G40_04: p.m = 4; p.n = 0; break;
    case MeijerKind::G41_15: p.m = 4; p.n = 1; break;
    case MeijerKind::G31_13: p.m = 3; p.n = 1; break;
    }
    return p;
}

double residue_scale(const MeijerParams& params, double x)
{
    const double d = static_cast<double>(params.b.size()) - static_cast<double>(params.a.size());
    if (d <= 0) return 0.0;
    return d * std::pow(x, 1.0 / d);
}

namespace {

// x > 0, or x = 0 with the argument carried as lx
RealResult run_tiers(const MeijerParams& params, double x, double lx, const MeijerOptions& opt)
{
    using namespace meijer_detail;
    const double scale = x > 0 ? residue_scale(params, x) : 0.0;
    if (opt.check_regime && scale > opt.regime_threshold) {
        std::ostringstream msg;
        msg << "meijer: residue series scale " << scale << " exceeds " << opt.regime_threshold
            << " at x = " << x << "; use the asymptotic regime";
        throw RegimeError(msg.str());
    }
    const Plan plan = make_plan(params);

    using Runner = TierOutcome (*)(const Plan&, double, double, double, int);
    constexpr Runner tiers[] = {run_double, run_long_double, run_mp50, run_mp100};
    constexpr double tier_eps[] = {std::numeric_limits<double>::epsilon(),
                                   std::numeric_limits<long double>::epsilon(), 1e-50, 1e-100};

    TierOutcome best;
    double best_err = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 4; ++t) {
        if (t > 0 && std::isfinite(best.abs_sum) && best.abs_sum > 0) {
            // skip tiers whose rounding floor already misses the target
            // optimistic magnitude: the true value is at most |value| + err
            const double target = std::max(opt.rel_tol * (std::abs(best.value) + best_err), opt.abs_tol);
            if (t < 3 && 16.0 * tier_eps[t] * best.abs_sum > 0.25 * target) continue;
        }
        TierOutcome r = tiers[t](plan, x, lx, opt.log_scale, opt.max_terms);
        if (!r.converged) throw ConvergenceError("meijer: residue series exceeded the term budget");
        const double err = 16.0 * r.eps * r.abs_sum + r.tail;
        best = r;
        best_err = err;
        if (!std::isfinite(r.value)) {
            if (t == 3) throw OverflowError("meijer: value outside double range");
            continue;
        }
        if (err <= std::max(opt.rel_tol * std::abs(r.value), opt.abs_tol)) break;
    }
    if (!(best_err <= std::max(opt.rel_tol * std::abs(best.value), opt.abs_tol)))
        throw ConvergenceError("meijer: cancellation exceeds the highest precision tier");
    return {best.value, best_err, Regime::Series};
}

}  // namespace

RealResult meijer_g_general(const MeijerParams& params, double x, const MeijerOptions& opt)
{
    if (!(x > 0)) throw DomainError("meijer: argument must be positive");
    return run_tiers(params, x, std::log(x), opt);
}

RealResult meijer_g_general(const MeijerParams& params, LogArg x, const MeijerOptions& opt)
{
    if (!std::isfinite(x.value)) throw DomainError("meijer: log argument must be finite");
    if (x.value > kLogArgFloor) return meijer_g_general(params, std::exp(x.value), opt);
    return run_tiers(params, 0.0, x.value, opt);
}

RealResult meijer_g(const MeijerOrders& orders, double x, const MeijerOptions& opt)
{
    return meijer_g_general(to_params(orders), x, opt);
}

RealResult g40_04(LogArg x, const std::array<double, 4>& b, const MeijerOptions& opt)
{
    return meijer_g_general(to_params(MeijerOrders{MeijerKind::G40_04, {}, {b.begin(), b.end()}}), x, opt);
}

RealResult g41_15(LogArg x, double a1, const std::array<double, 5>& b, const MeijerOptions& opt)
{
    return meijer_g_general(to_params(MeijerOrders{MeijerKind::G41_15, {a1}, {b.begin(), b.end()}}), x, opt);
}

RealResult g40_04(double x, const std::array<double, 4>& b, const MeijerOptions& opt)
{
    return meijer_g(MeijerOrders{MeijerKind::G40_04, {}, {b.begin(), b.end()}}, x, opt);
}

RealResult g41_15(double x, double a1, const std::array<double, 5>& b, const MeijerOptions& opt)
{
    return meijer_g(MeijerOrders{MeijerKind::G41_15, {a1}, {b.begin(), b.end()}}, x, opt);
}

RealResult g31_13(double x, double a1, const std::array<double, 3>& b, const MeijerOptions& opt)
{
    return meijer_g(MeijerOrders{MeijerKind::G31_13, {a1}, {b.begin(), b.end()}}, x, opt);
}

}  // namespace vgp
