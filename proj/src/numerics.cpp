#include "orq/numerics.hpp"

#include <algorithm>
#include <cassert>

namespace orq {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    assert(lo > 0 && hi > lo && n >= 2);
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

double bisect_threshold(double lo, double hi, int iters,
                        const std::function<bool(double)>& pred) {
    double llo = std::log(lo), lhi = std::log(hi);
    if (!pred(lo)) return lo;
    if (pred(hi)) return hi;
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (llo + lhi);
        if (pred(std::exp(mid)))
            llo = mid;
        else
            lhi = mid;
    }
    return std::exp(llo);
}

namespace {

Min1D golden_refine(double la, double lb, const std::function<double(double)>& f,
                    int iters) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = lb - gr * (lb - la);
    double x2 = la + gr * (lb - la);
    double f1 = f(std::exp(x1));
    double f2 = f(std::exp(x2));
    for (int i = 0; i < iters && lb - la > 1e-14; ++i) {
        if (f1 <= f2) {
            lb = x2;
            x2 = x1;
            f2 = f1;
            x1 = lb - gr * (lb - la);
            f1 = f(std::exp(x1));
        } else {
            la = x1;
            x1 = x2;
            f1 = f2;
            x2 = la + gr * (lb - la);
            f2 = f(std::exp(x2));
        }
    }
    Min1D r;
    if (f1 <= f2) {
        r.x = std::exp(x1);
        r.value = f1;
    } else {
        r.x = std::exp(x2);
        r.value = f2;
    }
    return r;
}

}  // namespace

Min1D minimize_log_scan(double lo, double hi, int points_per_decade,
                        const std::function<double(double)>& f,
                        int golden_iters) {
    const double decades = std::log10(hi / lo);
    const std::size_t n =
        std::max<std::size_t>(3, std::size_t(decades * points_per_decade) + 1);
    auto grid = log_grid(lo, hi, n);
    std::size_t best = 0;
    double bestv = kInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double v = f(grid[i]);
        if (v < bestv) {
            bestv = v;
            best = i;
        }
    }
    Min1D coarse{grid[best], bestv};
    if (!std::isfinite(bestv)) return coarse;
    const double la = std::log(grid[best > 0 ? best - 1 : 0]);
    const double lb = std::log(grid[std::min(best + 1, grid.size() - 1)]);
    if (lb <= la) return coarse;
    Min1D fine = golden_refine(la, lb, f, golden_iters);
    return fine.value < coarse.value ? fine : coarse;
}

Min1D maximize_log_scan(double lo, double hi, int points_per_decade,
                        const std::function<double(double)>& f,
                        int golden_iters) {
    auto neg = [&f](double x) {
        double v = f(x);
        return std::isfinite(v) ? -v : kInf;
    };
    Min1D r = minimize_log_scan(lo, hi, points_per_decade, neg, golden_iters);
    r.value = -r.value;
    return r;
}

double extrapolate_to_zero(const std::vector<double>& u,
                           const std::vector<double>& f) {
    assert(u.size() == f.size() && !u.empty());
    std::vector<double> p = f;
    const std::size_t n = u.size();
    // Neville tableau evaluated at 0.
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i)
            p[i] = (u[i + k] * p[i] - u[i] * p[i + 1]) / (u[i + k] - u[i]);
    return p[0];
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace orq
