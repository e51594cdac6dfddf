#pragma once

#include <stdexcept>

namespace cesaro {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Gamma function on the real line (Lanczos; reflection for x < 1/2).
/// Throws std::domain_error at poles (x = 0, -1, -2, ...).
double gamma_fn(double x);

/// Euler beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_fn(double a, double b);

/// Regularized incomplete beta I_x(a,b), a,b > 0, x in [0,1].
/// Continued fraction (Lentz), abs accuracy ~1e-14.
double reg_inc_beta(double a, double b, double x);

/// Gamma(0,x) = E_1(x) = int_x^inf e^{-u}/u du, x > 0.
/// Series below 1, continued fraction above; abs error <= 1e-12.
double incomplete_gamma_zero(double x);

/// sum_{n>=0} e^{-n^2/4}, truncated at n = 40 (tail < 1e-170).
double gaussian_lattice_sum();

} // namespace cesaro
