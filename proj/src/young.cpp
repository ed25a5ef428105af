#include "orq/young.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace orq {

namespace {

const double kE2 = std::exp(2.0);  // e^2

double psi_e_eval(double t) {
    if (t <= 2.0) return (kE2 / 4.0) * t * t;
    return std::exp(t);
}

double cosh1_eval(double t) {
    // expm1-based so tiny arguments keep full relative precision
    if (t > 700.0) return std::exp(t) / 2.0;  // overflows to +inf past ~710
    return 0.5 * (std::expm1(t) + std::expm1(-t));
}

double llogl1_eval(double t) { return t * std::log1p(t); }

double zyg_llogl_eval(double t) { return t <= 1.0 ? 0.0 : t * std::log(t); }

double zyg_exp_eval(double t) { return t <= 1.0 ? t : std::exp(t - 1.0); }

/// solve f(t) = y for strictly increasing f by bisection in log t
double bisect_inverse(double y, double lo, double hi,
                      const std::function<double(double)>& f) {
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (llo + lhi);
        if (f(std::exp(mid)) <= y)
            llo = mid;
        else
            lhi = mid;
    }
    return std::exp(0.5 * (llo + lhi));
}

}  // namespace

YoungFunction YoungFunction::psi_e() {
    YoungFunction f;
    f.kind_ = YoungKind::PsiE;
    return f;
}
YoungFunction YoungFunction::cosh_minus_one() {
    YoungFunction f;
    f.kind_ = YoungKind::CoshMinusOne;
    return f;
}
YoungFunction YoungFunction::l_log_l_plus_one() {
    YoungFunction f;
    f.kind_ = YoungKind::LLogLPlusOne;
    return f;
}
YoungFunction YoungFunction::zygmund_llogl() {
    YoungFunction f;
    f.kind_ = YoungKind::ZygmundLLogL;
    return f;
}
YoungFunction YoungFunction::zygmund_exp() {
    YoungFunction f;
    f.kind_ = YoungKind::ZygmundExp;
    return f;
}
YoungFunction YoungFunction::power(double p, double scale) {
    if (p < 1.0 || scale <= 0.0)
        throw std::invalid_argument("power Young function needs p >= 1, scale > 0");
    YoungFunction f;
    f.kind_ = YoungKind::Power;
    f.p_ = p;
    f.scale_ = scale;
    return f;
}

YoungFunction YoungFunction::tabulated(std::vector<double> t,
                                       std::vector<double> y,
                                       double zero_below, double inf_above) {
    if (t.size() != y.size())
        throw std::invalid_argument("tabulated: size mismatch");
    YoungFunction f;
    f.kind_ = YoungKind::Tabulated;
    f.tab_t_ = std::move(t);
    f.tab_y_ = std::move(y);
    f.zero_below_ = zero_below;
    f.inf_above_ = inf_above;
    return f;
}

double YoungFunction::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("Young function: negative argument");
    if (t == 0.0) return 0.0;
    switch (kind_) {
        case YoungKind::PsiE:
            return psi_e_eval(t);
        case YoungKind::CoshMinusOne:
            return cosh1_eval(t);
        case YoungKind::LLogLPlusOne:
            return llogl1_eval(t);
        case YoungKind::ZygmundLLogL:
            return zyg_llogl_eval(t);
        case YoungKind::ZygmundExp:
            return zyg_exp_eval(t);
        case YoungKind::Power:
            return scale_ * std::pow(t, p_);
        case YoungKind::Tabulated:
            return eval_tabulated(t);
    }
    return kInf;
}

double YoungFunction::eval_tabulated(double t) const {
    if (t > inf_above_) return kInf;
    if (t <= zero_below_) return 0.0;
    const auto& T = tab_t_;
    const auto& Y = tab_y_;
    if (T.empty()) return (t <= zero_below_) ? 0.0 : kInf;
    const double lt = std::log(t);
    if (t <= T.front()) {
        if (zero_below_ > 0.0) {
            // bridge between the zero plateau and the first knot
            double w = (t - zero_below_) / (T.front() - zero_below_);
            return std::max(0.0, w) * Y.front();
        }
        // extrapolate the first segment's log-log slope
        if (T.size() < 2) return Y.front();
        double s = (std::log(Y[1]) - std::log(Y[0])) /
                   (std::log(T[1]) - std::log(T[0]));
        return std::exp(std::log(Y[0]) + s * (lt - std::log(T[0])));
    }
    if (t >= T.back()) {
        if (T.size() < 2) return Y.back();
        std::size_t n = T.size();
        double s = (std::log(Y[n - 1]) - std::log(Y[n - 2])) /
                   (std::log(T[n - 1]) - std::log(T[n - 2]));
        double lv = std::log(Y[n - 1]) + s * (lt - std::log(T[n - 1]));
        return lv > 709.0 ? kInf : std::exp(lv);
    }
    auto it = std::upper_bound(T.begin(), T.end(), t);
    std::size_t j = std::size_t(it - T.begin());
    std::size_t i = j - 1;
    double w = (lt - std::log(T[i])) / (std::log(T[j]) - std::log(T[i]));
    double lv = (1.0 - w) * std::log(Y[i]) + w * std::log(Y[j]);
    return std::exp(lv);
}

double YoungFunction::inverse(double y) const {
    if (y < 0.0) throw std::domain_error("Young inverse: negative argument");
    switch (kind_) {
        case YoungKind::PsiE:
            if (y <= kE2) return (2.0 / std::exp(1.0)) * std::sqrt(y);
            return std::log(y);
        case YoungKind::CoshMinusOne:
            if (y == 0.0) return 0.0;
            if (y > 1e150) return std::log(2.0) + std::log(y);
            return std::acosh(1.0 + y);
        case YoungKind::LLogLPlusOne: {
            if (y == 0.0) return 0.0;
            return bisect_inverse(y, 1e-300, 1e300, llogl1_eval);
        }
        case YoungKind::ZygmundLLogL: {
            if (y <= 0.0) return 1.0;  // sup of the zero set
            return bisect_inverse(y, 1.0, 1e300, zyg_llogl_eval);
        }
        case YoungKind::ZygmundExp:
            return y <= 1.0 ? y : 1.0 + std::log(y);
        case YoungKind::Power:
            return std::pow(y / scale_, 1.0 / p_);
        case YoungKind::Tabulated:
            return inverse_tabulated(y);
    }
    return 0.0;
}

double YoungFunction::inverse_tabulated(double y) const {
    const auto& T = tab_t_;
    const auto& Y = tab_y_;
    if (T.empty()) return zero_below_;  // indicator-type conjugate
    if (y <= 0.0) return zero_below_ > 0.0 ? zero_below_ : 0.0;
    if (y >= Y.back()) {
        if (std::isfinite(inf_above_) && inf_above_ <= T.back())
            return inf_above_;
        if (T.size() < 2) return T.back();
        std::size_t n = T.size();
        double s = (std::log(Y[n - 1]) - std::log(Y[n - 2])) /
                   (std::log(T[n - 1]) - std::log(T[n - 2]));
        double lt = std::log(T[n - 1]) + (std::log(y) - std::log(Y[n - 1])) / s;
        double t = std::exp(lt);
        return std::min(t, inf_above_);
    }
    if (y <= Y.front()) {
        if (zero_below_ > 0.0) {
            double w = y / Y.front();
            return zero_below_ + w * (T.front() - zero_below_);
        }
        if (T.size() < 2) return T.front();
        double s = (std::log(Y[1]) - std::log(Y[0])) /
                   (std::log(T[1]) - std::log(T[0]));
        return std::exp(std::log(T[0]) + (std::log(y) - std::log(Y[0])) / s);
    }
    auto it = std::lower_bound(Y.begin(), Y.end(), y);
    std::size_t j = std::size_t(it - Y.begin());
    if (j == 0) return T[0];
    std::size_t i = j - 1;
    if (Y[j] == Y[i]) return T[j];
    double w = (std::log(y) - std::log(Y[i])) / (std::log(Y[j]) - std::log(Y[i]));
    return std::exp((1.0 - w) * std::log(T[i]) + w * std::log(T[j]));
}

double YoungFunction::finite_threshold() const {
    if (kind_ == YoungKind::Tabulated) return inf_above_;
    return kInf;
}

std::string YoungFunction::name() const {
    switch (kind_) {
        case YoungKind::PsiE:
            return "psi_e";
        case YoungKind::CoshMinusOne:
            return "cosh_minus_one";
        case YoungKind::LLogLPlusOne:
            return "l_log_l_plus_one";
        case YoungKind::ZygmundLLogL:
            return "zygmund_llogl";
        case YoungKind::ZygmundExp:
            return "zygmund_exp";
        case YoungKind::Power:
            return "power(p=" + std::to_string(p_) + ")";
        case YoungKind::Tabulated:
            return "tabulated";
    }
    return "?";
}

std::optional<YoungFunction> young_from_name(const std::string& name) {
    if (name == "psi_e") return YoungFunction::psi_e();
    if (name == "cosh_minus_one") return YoungFunction::cosh_minus_one();
    if (name == "l_log_l_plus_one") return YoungFunction::l_log_l_plus_one();
    if (name == "zygmund_llogl") return YoungFunction::zygmund_llogl();
    if (name == "zygmund_exp") return YoungFunction::zygmund_exp();
    if (name.rfind("power_", 0) == 0) {
        try {
            double p = std::stod(name.substr(6));
            return YoungFunction::power(p);
        } catch (...) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Conjugation

namespace {

/// sup_v (u v - phi(v)) over v > 0; may return +inf. The objective is
/// concave for convex phi, so the maximizer is located by bisection on the
/// sign of the difference quotient; a log-neighbourhood sweep then guards
/// against the kinks of piecewise interpolants.
double conjugate_value(const YoungFunction& phi, double u, double slope_inf) {
    if (u <= 0.0) return 0.0;
    if (std::isfinite(slope_inf) && u > slope_inf * (1.0 + 1e-12)) return kInf;
    const double vlo = 1e-14, vhi = 1e306;
    auto slope_exceeds_u = [&](double v) {
        const double h = 1e-6;
        double p1 = phi(v);
        double p2 = phi(v * (1.0 + h));
        if (!std::isfinite(p2)) return true;
        double q = (p2 - p1) / (v * h);
        return q >= u;
    };
    if (!slope_exceeds_u(vhi)) return kInf;  // still climbing at the top
    double llo = std::log(vlo), lhi = std::log(vhi);
    if (!slope_exceeds_u(vlo)) {
        for (int i = 0; i < 200 && lhi - llo > 1e-12; ++i) {
            double mid = 0.5 * (llo + lhi);
            if (slope_exceeds_u(std::exp(mid)))
                lhi = mid;
            else
                llo = mid;
        }
    } else {
        lhi = llo;  // maximum at or below vlo
    }
    const double lc = 0.5 * (llo + lhi);
    double best = 0.0;
    for (int k = -30; k <= 30; ++k) {
        double v = std::exp(lc + 0.01 * k);
        double pv = phi(v);
        if (!std::isfinite(pv)) continue;
        double g = u * v - pv;
        if (g > best) best = g;
    }
    return best;
}

}  // namespace

YoungFunction YoungFunction::complementary() const {
    if (kind_ == YoungKind::Power) {
        if (p_ == 1.0) {
            // conjugate of c*t is the indicator of [0, c]
            return tabulated({}, {}, scale_, scale_);
        }
        double q = p_ / (p_ - 1.0);
        double cq = (1.0 - 1.0 / p_) * std::pow(scale_ * p_, -1.0 / (p_ - 1.0));
        return power(q, cq);
    }

    const YoungFunction& phi = *this;
    // asymptotic slope; +inf for superlinear growth
    double slope_inf = kInf;
    {
        double v = 1e12;
        double pv = phi(v);
        slope_inf = std::isfinite(pv) ? pv / v : kInf;
        if (std::isfinite(slope_inf)) {
            double pv2 = phi(1e13);
            if (!std::isfinite(pv2) || pv2 / 1e13 > 2.0 * slope_inf)
                slope_inf = kInf;  // still growing superlinearly
        }
    }
    // threshold below which the conjugate vanishes: inf_v phi(v)/v
    double u0 = 0.0;
    {
        auto ratio = [&](double v) {
            double pv = phi(v);
            return std::isfinite(pv) ? pv / v : kInf;
        };
        Min1D m = minimize_log_scan(1e-10, 1e10, 10, ratio, 150);
        if (m.value > 1e-8) u0 = m.value;
    }

    std::vector<double> us;
    const double hi = 1e8;
    if (u0 > 0.0) {
        for (int k = 9; k >= 1; --k) us.push_back(u0 * (1.0 + std::pow(10.0, -k)));
        auto rest = log_grid(u0 * 1.2, hi, 1024);
        us.insert(us.end(), rest.begin(), rest.end());
    } else {
        us = log_grid(1e-8, hi, 1024);
    }

    std::vector<double> ys(us.size());
    double inf_above = kInf;
    for (std::size_t i = 0; i < us.size(); ++i) {
        ys[i] = conjugate_value(phi, us[i], slope_inf);
        if (!std::isfinite(ys[i]) && !std::isfinite(inf_above))
            inf_above = us[i > 0 ? i - 1 : 0];
    }
    // drop non-finite / non-positive knots, keep monotone
    std::vector<double> t2, y2;
    for (std::size_t i = 0; i < us.size(); ++i) {
        if (std::isfinite(ys[i]) && ys[i] > 0.0 &&
            (y2.empty() || ys[i] > y2.back())) {
            t2.push_back(us[i]);
            y2.push_back(ys[i]);
        }
    }

    // adaptive refinement: subdivide where log-log interpolation misses the
    // directly computed conjugate (exponential-growth regions need it)
    const double rel_tol = 1e-7;
    const std::size_t max_knots = 60000;
    std::vector<double> T = t2, Y = y2;
    std::size_t i = 0;
    while (i + 1 < T.size() && T.size() < max_knots) {
        double tm = std::exp(0.5 * (std::log(T[i]) + std::log(T[i + 1])));
        double interp = std::exp(0.5 * (std::log(Y[i]) + std::log(Y[i + 1])));
        double truth = conjugate_value(phi, tm, slope_inf);
        bool bad = std::isfinite(truth) && truth > 0.0 &&
                   std::abs(interp - truth) > rel_tol * truth;
        if (bad && T[i + 1] / T[i] > 1.0 + 1e-9) {
            T.insert(T.begin() + long(i) + 1, tm);
            Y.insert(Y.begin() + long(i) + 1, truth);
        } else {
            ++i;
        }
    }
    return tabulated(std::move(T), std::move(Y), u0, inf_above);
}

YoungFunction::Validation YoungFunction::validate() const {
    Validation v;
    const YoungFunction& f = *this;
    if (f(0.0) != 0.0) {
        v.ok = false;
        v.reason = "Phi(0) != 0";
        return v;
    }
    auto grid = log_grid(1e-6, 1e3, 181);
    double prev = 0.0;
    bool nonconst = false;
    double first_finite = -1.0;
    for (double t : grid) {
        double y = f(t);
        if (y < prev - 1e-12 * (1.0 + std::abs(prev))) {
            v.ok = false;
            v.reason = "not nondecreasing";
            return v;
        }
        if (std::isfinite(y)) {
            if (first_finite < 0) first_finite = y;
            if (y > first_finite) nonconst = true;
            prev = y;
        } else {
            prev = kInf;
        }
    }
    if (!nonconst) {
        v.ok = false;
        v.reason = "constant on the sampled grid";
        return v;
    }
    // midpoint convexity on sampled pairs (arithmetic midpoint)
    for (std::size_t i = 0; i < grid.size(); i += 3) {
        for (std::size_t j = i + 1; j < grid.size(); j += 7) {
            double a = grid[i], b = grid[j];
            double fa = f(a), fb = f(b);
            if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
            double fm = f(0.5 * (a + b));
            double defect = fm - 0.5 * (fa + fb);
            double tol = 1e-12 * (1.0 + std::abs(fa) + std::abs(fb));
            v.worst_convexity_defect = std::max(v.worst_convexity_defect, defect);
            if (defect > tol) {
                v.ok = false;
                v.reason = "midpoint convexity violated";
                return v;
            }
        }
    }
    return v;
}

EquivalenceResult equivalent(const YoungFunction& f1, const YoungFunction& f2,
                             double b_lo, double b_hi) {
    // x-grid per the fixed design plus guard points beyond both ends so that
    // a scale witness cannot pass purely by pushing the mismatch off-grid
    std::vector<double> xs = log_grid(1e-6, 1e6, 400);
    for (double g : {1e-8, 1e-7, 1e7, 1e8}) xs.push_back(g);

    auto dominates = [&xs](const YoungFunction& fa, const YoungFunction& fb,
                           double b) {
        // fa(b x) >= fb(x) on the grid; inf dominates inf
        for (double x : xs) {
            double lhs = fa(b * x);
            double rhs = fb(x);
            if (std::isinf(rhs) && !std::isinf(lhs)) return false;
            if (std::isinf(rhs) || std::isinf(lhs)) continue;
            if (lhs < rhs * (1.0 - 1e-13)) return false;
        }
        return true;
    };

    const int ppd = 10;
    const int nb = int(std::log10(b_hi / b_lo) * ppd) + 1;
    EquivalenceResult r;
    for (int i = 0; i < nb; ++i) {
        double b = b_lo * std::pow(10.0, double(i) / ppd);
        if (r.b1 == 0.0 && dominates(f1, f2, b)) r.b1 = b;
        if (r.b2 == 0.0 && dominates(f2, f1, b)) r.b2 = b;
        if (r.b1 != 0.0 && r.b2 != 0.0) break;
    }
    r.equivalent = (r.b1 != 0.0 && r.b2 != 0.0);
    r.inconclusive = !r.equivalent;
    return r;
}

}  // namespace orq
