#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cesaro/kernels.hpp"

namespace cesaro {

/// Time/frequency convention of a transform or average.
///   fourier_2pi : kernel e^{-2 pi i s x}
///   angular     : kernel e^{-i s x}
enum class Convention { fourier_2pi, angular };

/// Cached constants attached to one exponent beta.
struct OscillatoryConstants {
    double beta = 0.0;
    double m_beta = 0.0;                 // max_eta |I(beta,eta)|^2
    double eta_star = 0.0;               // maximizing eta
    double gamma_one_minus_beta = 0.0;   // Gamma(1-beta)
};

/// I(beta,eta) = int_0^eta e^{-iu} u^{-beta} du, beta in [0,1), eta >= 0.
/// Maclaurin series for small eta; for large eta the value is
/// Gamma(1-beta) e^{-i pi (1-beta)/2} minus a tail evaluated on a rotated
/// contour (exact, not asymptotic) or by integration-by-parts recursion.
/// Absolute error <= ~1e-12 throughout.
std::complex<double> phase_integral(double beta, double eta);

/// M_beta by coarse scan over eta in (0,200] (step 0.01) plus golden-section
/// refinement to 1e-10 in eta. Errors out if the scan maximum does not
/// provably dominate the eta > 200 tail.
OscillatoryConstants compute_m_beta(double beta);

/// f_hat(s) = int e^{-2 pi i s x} f(x) dx, closed form; analytic kinds only.
std::complex<double> density_fourier(const DensityFunction& f, double s);

/// K_hat(s) = {(2 pi |s|)^{beta-1} I(beta, 2 pi |s|)} f_hat (conjugated for
/// s < 0); rejects s = 0 (use measure_mass).
std::complex<double> kernel_fourier_analytic(const PowerLawExponent& beta,
                                             std::complex<double> f_hat, double s);

/// mu_hat(s) = int e^{-2 pi i s x} dmu(x) by quadrature over the support:
/// singularity-substituted head plus panels of width <= 1/(4|s|).
std::complex<double> measure_fourier_transform(const SingularMeasure& mu, double s,
                                               long max_eval = 8'000'000);

struct CesaroOptions {
    double panel_width = 0.25;   // fourier-convention s panels
    long max_eval = 400'000'000; // budget on density evaluations
};

/// A(t) = (1/t) int_0^t |mu_hat(s)|^2 ds in the given convention.
/// Uses the closed-form transform when g == 1 and f is analytic, otherwise the
/// quadrature transform per node. Reports budget exhaustion with the partial
/// value and a residual estimate.
double cesaro_average(const SingularMeasure& mu, double t,
                      Convention conv = Convention::fourier_2pi, const CesaroOptions& opt = {});

struct CesaroCurve {
    std::vector<double> t;
    std::vector<double> value;
    Convention convention = Convention::fourier_2pi;
    double beta = 0.0;
};

/// A(t) on an ascending grid, accumulated incrementally over [0, t_max].
CesaroCurve build_cesaro_curve(const SingularMeasure& mu, std::span<const double> t_grid,
                               Convention conv = Convention::fourier_2pi,
                               const CesaroOptions& opt = {});

/// Geometric grid, points_per_decade log-uniform points from t0 up to t1.
std::vector<double> geometric_grid(double t0, double t1, int points_per_decade = 16);

} // namespace cesaro
