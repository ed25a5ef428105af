#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace orq {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Log-spaced grid with `n` points covering [lo, hi], lo > 0.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// Largest x in [lo, hi] with pred(x) true, assuming pred is true on a
/// left segment and false afterwards. Bisection on log(x), `iters` steps.
double bisect_threshold(double lo, double hi, int iters,
                        const std::function<bool(double)>& pred);

/// Minimize a unimodal-ish f over log-spaced x in [lo, hi]: coarse scan
/// (points_per_decade) followed by golden-section refinement between the
/// neighbours of the best scan point. f may return +inf.
struct Min1D {
    double x = 0.0;
    double value = kInf;
};
Min1D minimize_log_scan(double lo, double hi, int points_per_decade,
                        const std::function<double(double)>& f,
                        int golden_iters = 120);

/// Maximize f over a log grid, then golden-refine around the best point.
Min1D maximize_log_scan(double lo, double hi, int points_per_decade,
                        const std::function<double(double)>& f,
                        int golden_iters = 120);

/// Polynomial (Richardson-style) extrapolation of f(u) to u = 0 given
/// samples (u_i, f_i) with distinct u_i; Neville's scheme.
double extrapolate_to_zero(const std::vector<double>& u,
                           const std::vector<double>& f);

/// Adaptive Simpson quadrature of f over [a,b]; splits until the local
/// error estimate is below tol or depth exceeds max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 60);

}  // namespace orq
