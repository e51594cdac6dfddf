#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    long max_eval = 2'000'000;
};

template <typename T>
struct QuadResult {
    T value{};
    double error = 0.0;  // absolute error estimate
    long evals = 0;
    bool converged = true;
};

/// Thrown when the evaluation budget runs out before the tolerance is met;
/// carries the partial value and the residual estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double partial, double residual)
        : std::runtime_error(what), partial_value(partial), residual_estimate(residual) {}
    double partial_value;
    double residual_estimate;
};

/// One Gauss-Kronrod 7-15 panel on [a,b]; error from the embedded Gauss rule.
QuadResult<double> gk15(const std::function<double(double)>& f, double a, double b);
QuadResult<std::complex<double>> gk15_complex(const std::function<std::complex<double>(double)>& f,
                                              double a, double b);

/// Adaptive bisection to tolerance; worst-interval-first, deterministic.
/// Throws QuadratureError once max_eval is exhausted.
QuadResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                             const QuadOptions& opt = {});
QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadOptions& opt = {});

/// Adaptive integration over [a,b] split at the given interior breakpoints.
QuadResult<double> integrate_split(const std::function<double(double)>& f, double a, double b,
                                   std::span<const double> breakpoints, const QuadOptions& opt = {});

/// Pairwise (tree) summation; deterministic and accurate for long panel lists.
double pairwise_sum(std::span<const double> v);

} // namespace cesaro
