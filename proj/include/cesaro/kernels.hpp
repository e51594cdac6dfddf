#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cesaro/quadrature.hpp"

namespace cesaro {

/// Exponent of the truncated power kernel |.|^{-beta} chi_(0,1].
class PowerLawExponent {
public:
    enum class Regime { sub_critical, critical, super_critical };

    explicit PowerLawExponent(double beta);
    double value() const { return beta_; }
    Regime regime() const;

private:
    double beta_;
};

/// Nonnegative density f in L^1. Three kinds:
///   indicator_unit   chi_(0,1]
///   power_law_delta  x^{delta-1} chi_(0,1], 0 < delta < 1
///   tabulated        piecewise-linear samples on a grid in [0,inf)
struct DensityFunction {
    enum class Kind { indicator_unit, power_law_delta, tabulated };

    Kind kind = Kind::indicator_unit;
    double delta = 0.0;
    std::vector<double> grid;
    std::vector<double> values;
    double l1_norm = 1.0;

    static DensityFunction indicator_unit();
    static DensityFunction power_law(double delta);
    static DensityFunction tabulated_fn(std::vector<double> grid, std::vector<double> values);

    double operator()(double x) const;
    double support_lo() const;
    double support_hi() const;
};

struct SpectralWeightParams {
    int rank = 0;
    std::vector<double> potential;
    int truncation = 0;
};

/// Bounded weight g >= 0; sup over [0,1] verified on a 1e4 grid at construction.
struct BoundedWeight {
    enum class Kind { constant_one, spectral_density, tabulated };

    Kind kind = Kind::constant_one;
    std::function<double(double)> eval;  // spectral_density only
    std::optional<SpectralWeightParams> spectral_params;
    std::vector<double> grid;
    std::vector<double> values;
    double sup_norm = 1.0;

    static BoundedWeight one();
    static BoundedWeight spectral(std::function<double(double)> density,
                                  SpectralWeightParams params);
    static BoundedWeight tabulated_fn(std::vector<double> grid, std::vector<double> values);

    double operator()(double x) const;
};

/// d mu(x) = K_{beta,f}(x) g(x) dx on a compact support.
class SingularMeasure {
public:
    SingularMeasure(PowerLawExponent beta, DensityFunction f, BoundedWeight g);

    const PowerLawExponent& beta() const { return beta_; }
    const DensityFunction& f() const { return f_; }
    const BoundedWeight& g() const { return g_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

    double density(double x) const;  // K(x) g(x)
    /// x -> a+ behavior of the density is ~(x-a)^{left_edge_exponent}.
    double left_edge_exponent() const { return edge_exp_; }
    const std::vector<double>& breakpoints() const { return breaks_; }

    /// integral of the density over [lo,hi] (clipped to the support),
    /// singularity-substituted at the left edge.
    double integrate(double lo, double hi, double rel_tol = 1e-9) const;

private:
    PowerLawExponent beta_;
    DensityFunction f_;
    BoundedWeight g_;
    double lo_, hi_;
    double edge_exp_;
    std::vector<double> breaks_;
};

/// K_{beta,f}(x) = int_0^1 y^{-beta} f(x-y) dy. Closed form for the analytic
/// kinds, exact per-cell integration for tabulated f. Rejects non-finite x.
double kernel_eval(const PowerLawExponent& beta, const DensityFunction& f, double x);

/// Same convolution for complex piecewise-linear data (proof-side checks).
std::complex<double> kernel_eval_complex(const PowerLawExponent& beta,
                                         std::span<const double> grid,
                                         std::span<const std::complex<double>> values, double x);

/// mu(R) to relative accuracy 1e-8.
double measure_mass(const SingularMeasure& mu);

/// mu(B(x,eps)) with the open ball B(x,eps)=(x-eps,x+eps); eps in (0,1).
double ball_mass(const SingularMeasure& mu, double x, double eps);

/// Cumulative masses mu([support_lo, p]) for an ascending list of points.
std::vector<double> measure_cdf(const SingularMeasure& mu, std::span<const double> points);

/// Least-squares slope of log max_x mu(B(x,eps)) against log eps:
/// an empirical estimate (not a certificate) of the optimal uniform Holder
/// exponent. Throws if fewer than 3 scales give positive mass.
double estimate_holder_exponent(const SingularMeasure& mu, std::span<const double> eps_grid,
                                std::span<const double> x_grid);

} // namespace cesaro
