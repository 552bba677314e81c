#pragma once

#include <complex>
#include <utility>

namespace vgp {

// Gamma family. Real arguments throw DomainError at the poles.
double gamma_fn(double x);
double log_gamma(double x);  // ln|Γ(x)|
int gamma_sign(double x);
double digamma(double x);
double polygamma(int n, double x);
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> gamma_fn(std::complex<double> z);

// K_ν(x), x > 0. Half-integer orders use the terminating elementary sum.
double bessel_k(double nu, double x);
// K_{m+1/2}(x) from the finite sum
double bessel_k_halfint(int m, double x);
// e^x K_ν(x)
double bessel_k_scaled(double nu, double x);
// principal branch, Re z > 0
std::complex<double> bessel_k(double nu, std::complex<double> z);

double bessel_j(double nu, double x);  // also at x = 0
std::pair<double, double> bessel_j_y(double nu, double x);

double struve_h(double nu, double x);
// 𝐊_ν = 𝐇_ν − Y_ν
double struve_k(double nu, double x);

// normalised modified Lommel function t̃_{μ,ν}
double lommel_t_normalized(double mu, double nu, double x);

struct LommelPair {
    double g;
    double gt;  // 1 - g
};
LommelPair lommel_g(double mu, double nu, double x);
// 1 - G_{μ,ν}(x) without the cancellation, by direct integration of the upper tail
double lommel_g_upper(double mu, double nu, double x);

std::complex<double> whittaker_w(double kappa, double mu, std::complex<double> z);

double gauss_2f1(double a, double b, double c, double x);

struct SiCiE1 {
    double si;
    double ci;
    double e1;
};
SiCiE1 si_ci_e1(double x);
std::complex<double> expint_e1(std::complex<double> z);
// auxiliary functions f(x) = Ci(x) sin x - (Si(x) - π/2) cos x and
// g(x) = -Ci(x) cos x - (Si(x) - π/2) sin x
std::pair<double, double> sici_aux(double x);

}  // namespace vgp
