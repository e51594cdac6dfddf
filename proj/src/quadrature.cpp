#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

namespace {

// Kronrod-15 abscissae on [0,1] half (symmetric) and weights; Gauss-7 weights
// on the shared nodes (odd Kronrod indices).
constexpr double kx[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kw[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double gw[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename T>
struct Panel {
    double a, b;
    T value;
    double error;
};

template <typename T, typename F>
Panel<T> gk15_panel(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T resk{};  // Kronrod
    T resg{};  // Gauss
    for (int j = 0; j < 8; ++j) {
        T fv;
        if (j == 7) {
            fv = f(c);
        } else {
            fv = f(c - h * kx[j]) + f(c + h * kx[j]);
        }
        resk += kw[j] * fv;
        if (j % 2 == 1) resg += gw[j / 2] * fv;
    }
    resk *= h;
    resg *= h;
    return {a, b, resk, std::abs(resk - resg)};
}

template <typename T>
std::pair<T, double> totals(const std::vector<Panel<T>>& stack) {
    T v{};
    double e = 0.0;
    for (const auto& p : stack) {
        v += p.value;
        e += p.error;
    }
    return {v, e};
}

template <typename T, typename F>
QuadResult<T> adaptive(const F& f, std::vector<Panel<T>> stack, const QuadOptions& opt) {
    long evals = static_cast<long>(stack.size()) * 15;
    auto [value, error] = totals(stack);
    int since_resum = 0;
    for (;;) {
        if (error <= opt.abs_tol || error <= opt.rel_tol * std::abs(value)) {
            auto [v, e] = totals(stack);  // fresh sum, running totals drift
            if (e <= opt.abs_tol || e <= opt.rel_tol * std::abs(v)) return {v, e, evals, true};
            value = v;
            error = e;
            since_resum = 0;
        }
        if (evals + 30 > opt.max_eval)
            throw QuadratureError("quadrature budget exceeded", std::abs(value), error);
        auto worst = std::max_element(stack.begin(), stack.end(),
                                      [](const Panel<T>& x, const Panel<T>& y) {
                                          return x.error < y.error;
                                      });
        Panel<T> p = *worst;
        double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {
            auto [v, e] = totals(stack);  // interval at float resolution
            return {v, e, evals, false};
        }
        *worst = gk15_panel<T>(f, p.a, mid);
        stack.push_back(gk15_panel<T>(f, mid, p.b));
        value += worst->value + stack.back().value - p.value;
        error += worst->error + stack.back().error - p.error;
        if (error < 0.0 || ++since_resum >= 256) {
            std::tie(value, error) = totals(stack);
            since_resum = 0;
        }
        evals += 30;
    }
}

} // namespace

QuadResult<double> gk15(const std::function<double(double)>& f, double a, double b) {
    auto p = gk15_panel<double>(f, a, b);
    return {p.value, p.error, 15, true};
}

QuadResult<std::complex<double>> gk15_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b) {
    auto p = gk15_panel<std::complex<double>>(f, a, b);
    return {p.value, p.error, 15, true};
}

QuadResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                             const QuadOptions& opt) {
    if (a == b) return {0.0, 0.0, 0, true};
    std::vector<Panel<double>> stack{gk15_panel<double>(f, a, b)};
    return adaptive(f, std::move(stack), opt);
}

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadOptions& opt) {
    if (a == b) return {{0.0, 0.0}, 0.0, 0, true};
    std::vector<Panel<std::complex<double>>> stack{gk15_panel<std::complex<double>>(f, a, b)};
    return adaptive(f, std::move(stack), opt);
}

QuadResult<double> integrate_split(const std::function<double(double)>& f, double a, double b,
                                   std::span<const double> breakpoints, const QuadOptions& opt) {
    if (a == b) return {0.0, 0.0, 0, true};
    std::vector<double> pts{a};
    for (double x : breakpoints)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    std::vector<Panel<double>> stack;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i]) stack.push_back(gk15_panel<double>(f, pts[i], pts[i + 1]));
    return adaptive(f, std::move(stack), opt);
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

} // namespace cesaro
