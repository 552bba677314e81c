#pragma once

#include <complex>
#include <string_view>

namespace vgp {

enum class Regime { Series, FiniteSum, Asymptotic, Quadrature, Closed };

constexpr std::string_view to_string(Regime r)
{
    switch (r) {
    case Regime::Series: return "series";
    case Regime::FiniteSum: return "finite-sum";
    case Regime::Asymptotic: return "asymptotic";
    case Regime::Quadrature: return "quadrature";
    case Regime::Closed: return "closed-form";
    }
    return "unknown";
}

template <class T>
struct EvalResult {
    T value{};
    double abs_err = 0.0;
    Regime regime = Regime::Series;
};

using RealResult = EvalResult<double>;
using ComplexResult = EvalResult<std::complex<double>>;

}  // namespace vgp
