#include "cesaro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cesaro/special.hpp"

namespace cesaro {

namespace {

constexpr double critical_tol = 1e-12;

void check_grid(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() < 2 || grid.size() != values.size())
        throw std::invalid_argument("tabulated function: need matching grid/values, >= 2 samples");
    if (grid.front() < 0.0)
        throw std::invalid_argument("tabulated function: grid must start at >= 0");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("tabulated function: grid must be strictly increasing");
}

double lerp_eval(const std::vector<double>& grid, const std::vector<double>& values, double x) {
    if (x < grid.front() || x > grid.back()) return 0.0;
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    size_t i = (it == grid.begin()) ? 0 : static_cast<size_t>(it - grid.begin() - 1);
    if (i + 1 >= grid.size()) i = grid.size() - 2;
    double t = (x - grid[i]) / (grid[i + 1] - grid[i]);
    return values[i] + t * (values[i + 1] - values[i]);
}

double trapezoid_l1(const std::vector<double>& grid, const std::vector<double>& values) {
    double s = 0.0;
    for (size_t i = 1; i < grid.size(); ++i)
        s += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
    return s;
}

// int_{y1}^{y2} y^{-beta} (A - B y) dy, 0 <= y1 <= y2
template <typename T>
T power_cell_integral(double beta, double y1, double y2, T A, T B) {
    const double e1 = 1.0 - beta, e2 = 2.0 - beta;
    double p1 = std::pow(y2, e1) - std::pow(y1, e1);
    double p2 = std::pow(y2, e2) - std::pow(y1, e2);
    return A * (p1 / e1) - B * (p2 / e2);
}

// Shared convolution driver for piecewise-linear data.
template <typename T>
T convolve_tabulated(double beta, std::span<const double> grid, std::span<const T> values,
                     double x) {
    // y ranges over (0,1] with x - y inside [grid.front(), grid.back()]
    double ylo = std::max(0.0, x - grid.back());
    double yhi = std::min(1.0, x - grid.front());
    if (!(yhi > ylo)) return T{};
    T acc{};
    // walk cells of u = x - y from high u (y = ylo) down
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        double ya = std::max(ylo, x - grid[i + 1]);
        double yb = std::min(yhi, x - grid[i]);
        if (!(yb > ya)) continue;
        T m = (values[i + 1] - values[i]) * (1.0 / (grid[i + 1] - grid[i]));
        T A = values[i] + m * (x - grid[i]);
        acc += power_cell_integral<T>(beta, ya, yb, A, m);
    }
    return acc;
}

} // namespace

PowerLawExponent::PowerLawExponent(double beta) : beta_(beta) {
    if (!(beta >= 0.0) || !(beta < 1.0))
        throw std::invalid_argument("PowerLawExponent: beta must lie in [0,1)");
}

PowerLawExponent::Regime PowerLawExponent::regime() const {
    if (std::abs(beta_ - 0.5) <= critical_tol) return Regime::critical;
    return beta_ < 0.5 ? Regime::sub_critical : Regime::super_critical;
}

DensityFunction DensityFunction::indicator_unit() {
    DensityFunction f;
    f.kind = Kind::indicator_unit;
    f.l1_norm = 1.0;
    return f;
}

DensityFunction DensityFunction::power_law(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("DensityFunction::power_law: delta must lie in (0,1)");
    DensityFunction f;
    f.kind = Kind::power_law_delta;
    f.delta = delta;
    f.l1_norm = 1.0 / delta;
    return f;
}

DensityFunction DensityFunction::tabulated_fn(std::vector<double> grid, std::vector<double> values) {
    check_grid(grid, values);
    for (double v : values)
        if (!(v >= 0.0)) throw std::invalid_argument("DensityFunction: samples must be >= 0");
    DensityFunction f;
    f.kind = Kind::tabulated;
    f.grid = std::move(grid);
    f.values = std::move(values);
    f.l1_norm = trapezoid_l1(f.grid, f.values);
    return f;
}

double DensityFunction::operator()(double x) const {
    switch (kind) {
        case Kind::indicator_unit:
            return (x > 0.0 && x <= 1.0) ? 1.0 : 0.0;
        case Kind::power_law_delta:
            return (x > 0.0 && x <= 1.0) ? std::pow(x, delta - 1.0) : 0.0;
        case Kind::tabulated:
            return lerp_eval(grid, values, x);
    }
    return 0.0;
}

double DensityFunction::support_lo() const {
    return kind == Kind::tabulated ? grid.front() : 0.0;
}

double DensityFunction::support_hi() const {
    return kind == Kind::tabulated ? grid.back() : 1.0;
}

BoundedWeight BoundedWeight::one() {
    BoundedWeight g;
    g.kind = Kind::constant_one;
    g.sup_norm = 1.0;
    return g;
}

BoundedWeight BoundedWeight::spectral(std::function<double(double)> density,
                                      SpectralWeightParams params) {
    if (!density) throw std::invalid_argument("BoundedWeight::spectral: empty evaluator");
    BoundedWeight g;
    g.kind = Kind::spectral_density;
    g.eval = std::move(density);
    g.spectral_params = std::move(params);
    double sup = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        double v = g.eval(i / 10000.0);
        if (!(v >= 0.0)) throw std::invalid_argument("BoundedWeight: negative density on [0,1]");
        sup = std::max(sup, v);
    }
    g.sup_norm = sup;
    return g;
}

BoundedWeight BoundedWeight::tabulated_fn(std::vector<double> grid, std::vector<double> values) {
    check_grid(grid, values);
    for (double v : values)
        if (!(v >= 0.0)) throw std::invalid_argument("BoundedWeight: samples must be >= 0");
    BoundedWeight g;
    g.kind = Kind::tabulated;
    g.grid = std::move(grid);
    g.values = std::move(values);
    g.sup_norm = *std::max_element(g.values.begin(), g.values.end());
    return g;
}

double BoundedWeight::operator()(double x) const {
    switch (kind) {
        case Kind::constant_one:
            return 1.0;
        case Kind::spectral_density:
            return eval(x);
        case Kind::tabulated:
            return lerp_eval(grid, values, x);
    }
    return 0.0;
}

double kernel_eval(const PowerLawExponent& beta, const DensityFunction& f, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("kernel_eval: non-finite x");
    const double b = beta.value();
    switch (f.kind) {
        case DensityFunction::Kind::indicator_unit: {
            if (x <= 0.0 || x >= 2.0) return 0.0;
            double ylo = std::max(0.0, x - 1.0), yhi = std::min(1.0, x);
            double e = 1.0 - b;
            return (std::pow(yhi, e) - std::pow(ylo, e)) / e;
        }
        case DensityFunction::Kind::power_law_delta: {
            if (x <= 0.0 || x >= 2.0) return 0.0;
            double d = f.delta;
            double head = std::pow(x, d - b);
            if (x <= 1.0) return beta_fn(1.0 - b, d) * head;
            double z2 = 1.0 / x, z1 = (x - 1.0) / x;
            double B = beta_fn(1.0 - b, d);
            return head * B * (reg_inc_beta(1.0 - b, d, z2) - reg_inc_beta(1.0 - b, d, z1));
        }
        case DensityFunction::Kind::tabulated:
            return convolve_tabulated<double>(b, f.grid, f.values, x);
    }
    return 0.0;
}

std::complex<double> kernel_eval_complex(const PowerLawExponent& beta,
                                         std::span<const double> grid,
                                         std::span<const std::complex<double>> values, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("kernel_eval_complex: non-finite x");
    if (grid.size() < 2 || grid.size() != values.size())
        throw std::invalid_argument("kernel_eval_complex: bad tabulation");
    return convolve_tabulated<std::complex<double>>(beta.value(), grid, values, x);
}

SingularMeasure::SingularMeasure(PowerLawExponent beta, DensityFunction f, BoundedWeight g)
    : beta_(std::move(beta)), f_(std::move(f)), g_(std::move(g)) {
    lo_ = std::max(0.0, f_.support_lo());
    hi_ = 1.0 + f_.support_hi();
    if (f_.kind == DensityFunction::Kind::power_law_delta)
        edge_exp_ = f_.delta - beta_.value();
    else
        edge_exp_ = 1.0 - beta_.value();
    // kinks of K: shifts of f's knots by the kernel window {0,1}
    std::vector<double> pts;
    auto add = [&](double p) {
        if (p > lo_ && p < hi_) pts.push_back(p);
    };
    if (f_.kind == DensityFunction::Kind::tabulated) {
        for (double gp : f_.grid) {
            add(gp);
            add(gp + 1.0);
        }
    } else {
        add(1.0);
    }
    if (g_.kind == BoundedWeight::Kind::tabulated)
        for (double gp : g_.grid) add(gp);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    breaks_ = std::move(pts);
}

double SingularMeasure::density(double x) const {
    return kernel_eval(beta_, f_, x) * g_(x);
}

double SingularMeasure::integrate(double lo, double hi, double rel_tol) const {
    lo = std::max(lo, lo_);
    hi = std::min(hi, hi_);
    if (!(hi > lo)) return 0.0;
    QuadOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 0.0;
    auto rho = [this](double x) { return density(x); };
    double head = 0.0;
    double cut = lo;
    if (lo <= lo_ + 1e-300) {
        // leading segment up to the first breakpoint: substitute x = a + w^p so
        // the (x-a)^{edge_exp} behavior integrates smoothly
        double seg_hi = hi;
        for (double bp : breaks_)
            if (bp > lo_) {
                seg_hi = std::min(seg_hi, bp);
                break;
            }
        double p = 1.0 / (1.0 + edge_exp_);
        double wmax = std::pow(seg_hi - lo_, 1.0 / p);
        auto sub = [&](double w) {
            double dx = std::pow(w, p);
            return density(lo_ + dx) * p * std::pow(w, p - 1.0);
        };
        head = integrate_split(sub, 0.0, wmax, {}, opt).value;
        cut = seg_hi;
        if (cut >= hi) return head;
    }
    return head + integrate_split(rho, cut, hi, breaks_, opt).value;
}

double measure_mass(const SingularMeasure& mu) {
    return mu.integrate(mu.support_lo(), mu.support_hi(), 1e-9);
}

double ball_mass(const SingularMeasure& mu, double x, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("ball_mass: eps outside (0,1)");
    return mu.integrate(x - eps, x + eps, 1e-8);
}

std::vector<double> measure_cdf(const SingularMeasure& mu, std::span<const double> points) {
    std::vector<double> out(points.size(), 0.0);
    double acc = 0.0;
    double prev = mu.support_lo();
    for (size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && points[i] < points[i - 1])
            throw std::invalid_argument("measure_cdf: points must be ascending");
        double p = std::min(points[i], mu.support_hi());
        if (p > prev) {
            acc += mu.integrate(prev, p, 1e-8);
            prev = p;
        }
        out[i] = acc;
    }
    return out;
}

double estimate_holder_exponent(const SingularMeasure& mu, std::span<const double> eps_grid,
                                std::span<const double> x_grid) {
    if (eps_grid.size() < 8)
        throw std::invalid_argument("estimate_holder_exponent: need >= 8 scales");
    for (double e : eps_grid)
        if (!(e > 0.0) || !(e < 1.0))
            throw std::invalid_argument("estimate_holder_exponent: eps outside (0,1)");
    // all ball endpoints, one cdf sweep
    std::vector<double> pts;
    pts.reserve(2 * eps_grid.size() * x_grid.size());
    for (double x : x_grid)
        for (double e : eps_grid) {
            pts.push_back(std::max(x - e, mu.support_lo()));
            pts.push_back(std::min(x + e, mu.support_hi()));
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> cdf = measure_cdf(mu, pts);
    auto F = [&](double p) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        return cdf[static_cast<size_t>(it - pts.begin())];
    };
    std::vector<double> lx, ly;
    for (double e : eps_grid) {
        double m = 0.0;
        for (double x : x_grid)
            m = std::max(m, F(std::min(x + e, mu.support_hi())) -
                                F(std::max(x - e, mu.support_lo())));
        if (m > 0.0) {
            lx.push_back(std::log(e));
            ly.push_back(std::log(m));
        }
    }
    if (lx.size() < 3)
        throw std::runtime_error("estimate_holder_exponent: fewer than 3 usable scales");
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace cesaro
