#include "orq/orlicz.hpp"

#include <algorithm>
#include <cmath>

#include "orq/parallel.hpp"

namespace orq {

namespace {

/// integral Phi(f/lambda) over (0, inf), exact per step; may be +inf
double modular(const StepFunction& f, const YoungFunction& phi, double lambda) {
    double acc = 0.0;
    for (const auto& s : f.steps()) {
        double v = phi(s.value / lambda);
        if (!std::isfinite(v)) return kInf;
        acc += v * s.width;
        if (!std::isfinite(acc)) return kInf;
    }
    return acc;
}

}  // namespace

double luxemburg_norm(const StepFunction& f, const YoungFunction& phi) {
    if (f.empty()) return 0.0;
    const double lo = 1e-12, hi = 1e12;
    auto ok = [&](double lam) { return modular(f, phi, lam) <= 1.0; };
    if (!ok(hi)) return kInf;
    if (ok(lo)) return lo;
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (llo + lhi);
        if (ok(std::exp(mid)))
            lhi = mid;
        else
            llo = mid;
    }
    return std::exp(lhi);
}

double luxemburg_norm(const MeasurableElement& a,
                      const WeightedTraceAlgebra& alg,
                      const YoungFunction& phi) {
    return luxemburg_norm(mu(a, alg), phi);
}

double orlicz_amemiya_norm(const StepFunction& f, const YoungFunction& phi) {
    if (f.empty()) return 0.0;
    auto objective = [&](double k) {
        double m = modular(f, phi, 1.0 / k);
        if (!std::isfinite(m)) return kInf;
        return (1.0 + m) / k;
    };
    Min1D m = minimize_log_scan(1e-315, 1e315, 4, objective, 300);
    return m.value;
}

double orlicz_amemiya_norm(const MeasurableElement& a,
                           const WeightedTraceAlgebra& alg,
                           const YoungFunction& phi) {
    return orlicz_amemiya_norm(mu(a, alg), phi);
}

namespace {

/// Luxemburg norm of an indicator via the exact identity 1/Phi^{-1}(1/t);
/// equals the bisection route (cross-checked in tests) but stays stable at
/// extreme widths where the bisection bracket would clip.
double fundamental_lux_closed(const YoungFunction& phi, double t) {
    double inv = phi.inverse(1.0 / t);
    return inv > 0.0 ? 1.0 / inv : kInf;
}

double fundamental_orlicz(const YoungFunction& phi, double t) {
    auto objective = [&](double k) {
        double v = phi(k);
        if (!std::isfinite(v)) return kInf;
        return (1.0 + t * v) / k;
    };
    Min1D m = minimize_log_scan(1e-315, 1e315, 4, objective, 300);
    return m.value;
}

}  // namespace

double fundamental_function(const YoungFunction& phi, double t,
                            OrliczNormKind norm) {
    if (t <= 0.0) return 0.0;
    if (norm == OrliczNormKind::Luxemburg)
        return luxemburg_norm(StepFunction::indicator(t), phi);
    return orlicz_amemiya_norm(StepFunction::indicator(t), phi);
}

namespace {

double fund_fast(const YoungFunction& phi, double t, OrliczNormKind norm) {
    return norm == OrliczNormKind::Luxemburg ? fundamental_lux_closed(phi, t)
                                             : fundamental_orlicz(phi, t);
}

}  // namespace

double dilation_function(const YoungFunction& phi, double s,
                         OrliczNormKind norm) {
    if (s <= 0.0) return 0.0;
    auto quotient = [&](double t) {
        double num = fund_fast(phi, s * t, norm);
        double den = fund_fast(phi, t, norm);
        if (!(den > 0.0) || !std::isfinite(den) || !std::isfinite(num))
            return 0.0;
        return num / den;
    };
    // keep both t and s*t inside the double range
    const double lo = std::max(1e-280, 1e-300 / std::min(1.0, s));
    const double hi = std::min(1e280, 1e300 / std::max(1.0, s));
    Min1D sup = maximize_log_scan(lo, hi, 4, quotient, 150);
    double best = sup.value;

    // Richardson limits at both ends in u = 1/log t; quotients of slowly
    // varying fundamental functions approach their sup only at 0+ or inf.
    for (int side = 0; side < 2; ++side) {
        std::vector<double> us, qs;
        for (double ex : {140.0, 190.0, 240.0, 280.0}) {
            double t = side == 0 ? std::pow(10.0, -ex) : std::pow(10.0, ex);
            if (t < lo || t > hi) continue;
            double q = quotient(t);
            if (q <= 0.0 || !std::isfinite(q)) continue;
            us.push_back(1.0 / std::log(t));
            qs.push_back(q);
        }
        if (us.size() >= 3) {
            double lim = extrapolate_to_zero(us, qs);
            if (std::isfinite(lim)) best = std::max(best, lim);
        }
    }
    return best;
}

FundamentalIndices fundamental_indices(const YoungFunction& phi,
                                       OrliczNormKind norm) {
    FundamentalIndices out;
    auto index_at = [&](double s) {
        double m = dilation_function(phi, s, norm);
        return std::log(m) / std::log(s);
    };
    double lo_min = kInf, lo_max = -kInf, hi_min = kInf, hi_max = -kInf;
    for (int k = 2; k <= 8; ++k) {
        double rl = index_at(std::pow(10.0, -double(k)));
        double ru = index_at(std::pow(10.0, double(k)));
        lo_min = std::min(lo_min, rl);
        lo_max = std::max(lo_max, rl);
        hi_min = std::min(hi_min, ru);
        hi_max = std::max(hi_max, ru);
        if (k == 8) {
            out.beta_lower = rl;
            out.beta_upper = ru;
        }
    }
    out.spread_lower = lo_max - lo_min;
    out.spread_upper = hi_max - hi_min;
    out.converged = out.spread_lower < 0.05 && out.spread_upper < 0.05;
    return out;
}

FundamentalData fundamental_data(const YoungFunction& phi, OrliczNormKind norm,
                                 int points) {
    FundamentalData d;
    for (double t : log_grid(1e-6, 1e6, std::size_t(points)))
        d.phi_samples.emplace_back(t, fundamental_function(phi, t, norm));
    for (double s : log_grid(1e-4, 1e4, std::size_t(points)))
        d.M_samples.emplace_back(s, dilation_function(phi, s, norm));
    d.indices = fundamental_indices(phi, norm);
    return d;
}

DsOperator ds_operator(const Matrix& rho, const YoungFunction& phi, double s) {
    if (s > 0.0) throw std::domain_error("ds_operator: s must be <= 0");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    if (es.eigenvalues()(0) <= 0.0)
        throw std::domain_error("ds_operator: rho must be positive definite");
    YoungFunction conj = phi.complementary();
    const double grow = std::exp(-s);
    Vector d(rho.rows());
    double norm = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        double lam = es.eigenvalues()(i);
        double num = fundamental_orlicz(conj, lam);
        double den = fundamental_orlicz(conj, grow * lam);
        double val = num / den;
        d(i) = val;
        norm = std::max(norm, std::abs(val));
    }
    DsOperator out;
    out.matrix = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    out.operator_norm = norm;
    return out;
}

EmbeddingReport embedding_inequality_check(const YoungFunction& phi,
                                           int samples, std::uint64_t seed) {
    EmbeddingReport rep;
    const int n_paper = 4;
    auto idx = fundamental_indices(phi, OrliczNormKind::Luxemburg);
    rep.beta_upper = idx.beta_upper;
    if (!(idx.beta_upper < 1.0)) {
        rep.applicable = false;
        return rep;
    }
    rep.applicable = true;
    YoungFunction conj = phi.complementary();
    auto cidx = fundamental_indices(conj, OrliczNormKind::Orlicz);
    rep.beta_lower_conj = cidx.beta_lower;
    const double gamma =
        (double(n_paper - 1) / n_paper) * rep.beta_lower_conj;

    // largest grid t0 <= 1 with Mtilde(t) <= t^gamma for all grid t <= t0
    double t0 = 0.0;
    for (double t : log_grid(1e-6, 1.0, 61)) {
        double m = dilation_function(conj, t, OrliczNormKind::Orlicz);
        if (m <= std::pow(t, gamma) * (1.0 + 1e-9))
            t0 = t;
        else
            break;
    }
    if (t0 <= 0.0) t0 = 1e-6;
    rep.t0 = t0;
    rep.constant = std::pow(t0, gamma) / gamma + std::log(1.0 / t0);

    Rng rng(seed);
    rep.max_ratio = 0.0;
    rep.violations = 0;
    for (int i = 0; i < samples; ++i) {
        int m = rng.uniform_int(1, 8);
        std::vector<StepFunction::Step> steps;
        for (int j = 0; j < m; ++j)
            steps.push_back({std::exp(rng.uniform(-6.0, 4.0)),
                             std::exp(rng.uniform(-6.0, 2.0))});
        StepFunction f(steps);
        double nrm = luxemburg_norm(f, phi);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) continue;
        StepFunction g = f.scaled(1.0 / nrm);
        double lhs = l1_linf_norm(g);
        double rhs = lambda_infty_quasinorm(g);
        if (rhs <= 0.0) continue;
        double ratio = lhs / rhs;
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        if (lhs > rep.constant * rhs * (1.0 + 1e-9)) ++rep.violations;
    }
    return rep;
}

}  // namespace orq
