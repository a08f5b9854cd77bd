#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

// Self-contained numerical kernels: adaptive Simpson quadrature, central
// finite differences with one Richardson step, and bracketed bisection.
// Everything here is deterministic; no randomized rules.

namespace qwell::numerics {

struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_depth = 50;
};

struct RootConfig {
    double abs_tol = 1e-12;
    int max_iter = 200;
};

inline void validate(const QuadratureConfig& cfg) {
    if (cfg.rel_tol < 1e-14 || cfg.rel_tol > 1e-4)
        throw std::invalid_argument("quadrature rel_tol must lie in [1e-14, 1e-4]");
    if (cfg.max_depth < 10)
        throw std::invalid_argument("quadrature max_depth must be >= 10");
}

inline void validate(const RootConfig& cfg) {
    if (cfg.abs_tol <= 0.0)
        throw std::invalid_argument("root abs_tol must be > 0");
}

namespace detail {

inline double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double abs_tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw NonConvergenceError("integrand non-finite in [" + std::to_string(a) +
                                  ", " + std::to_string(b) + "]");
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * abs_tol)
        return left + right + err / 15.0;
    if (depth <= 0)
        throw NonConvergenceError("quadrature depth exhausted on [" +
                                  std::to_string(a) + ", " + std::to_string(b) + "]");
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
}

} // namespace detail

// Oriented integral of f over [a, b]; negative when b < a.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadratureConfig& cfg = {}) {
    validate(cfg);
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw NonConvergenceError("integrand non-finite at initial nodes");
    const double whole = detail::simpson(fa, fm, fb, b - a);
    const double scale = std::max(std::abs(whole), 1e-300);
    return detail::adapt(f, a, b, fa, fm, fb, whole, cfg.rel_tol * scale,
                         cfg.max_depth);
}

// Central difference at steps h and h/2 combined by Richardson extrapolation;
// O(h^4) on smooth f.
inline double derivative(const std::function<double(double)>& f, double x,
                         double rel_step = 1e-6) {
    if (rel_step <= 0.0 || rel_step > 1e-2)
        throw std::invalid_argument("derivative rel_step must lie in (0, 1e-2]");
    const double h = rel_step * std::max(std::abs(x), 1.0);
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    const double d = (4.0 * d2 - d1) / 3.0;
    if (!std::isfinite(d))
        throw NonConvergenceError("non-finite evaluation in derivative");
    return d;
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     const RootConfig& cfg = {}) {
    validate(cfg);
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("bisect: no sign change on bracket");
    for (int i = 0; i < cfg.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= cfg.abs_tol) return mid;
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    throw NonConvergenceError("bisect: max_iter exceeded");
}

} // namespace qwell::numerics
