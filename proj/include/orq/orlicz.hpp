#pragma once

#include <vector>

#include "orq/rearrangement.hpp"
#include "orq/step_function.hpp"
#include "orq/young.hpp"

namespace orq {

enum class OrliczNormKind { Luxemburg, Orlicz };

/// Luxemburg norm inf{lambda > 0 : integral Phi(mu_t(f)/lambda) dt <= 1},
/// by monotone bisection on lambda in [1e-12, 1e12]. Zero input gives 0;
/// +inf if no lambda in the bracket admits a finite modular <= 1.
double luxemburg_norm(const StepFunction& f, const YoungFunction& phi);
double luxemburg_norm(const MeasurableElement& a,
                      const WeightedTraceAlgebra& alg, const YoungFunction& phi);

/// Orlicz norm via the Amemiya formula inf_{k>0} (1 + integral Phi(k mu))/k
/// (golden-section search over log k).
double orlicz_amemiya_norm(const StepFunction& f, const YoungFunction& phi);
double orlicz_amemiya_norm(const MeasurableElement& a,
                           const WeightedTraceAlgebra& alg,
                           const YoungFunction& phi);

/// Norm of an indicator of measure t.
double fundamental_function(const YoungFunction& phi, double t,
                            OrliczNormKind norm = OrliczNormKind::Luxemburg);

/// Dilation function M(s) = sup_{t>0} fund(s t)/fund(t). The sup combines a
/// wide log grid with golden refinement and Richardson limits at both ends
/// (the sup of quotients like log t / log(st) is only approached as t -> 0).
double dilation_function(const YoungFunction& phi, double s,
                         OrliczNormKind norm = OrliczNormKind::Luxemburg);

struct FundamentalIndices {
    double beta_lower = 0.0;
    double beta_upper = 0.0;
    double spread_lower = 0.0;  // spread of log M(s)/log s across the s ladder
    double spread_upper = 0.0;
    bool converged = true;
};

/// Lower/upper fundamental indices as limits of log M(s)/log s along
/// s = 10^{-k} and s = 10^{+k}, k = 2..8; the k = 8 value is reported and
/// the across-k spread recorded.
FundamentalIndices fundamental_indices(
    const YoungFunction& phi, OrliczNormKind norm = OrliczNormKind::Luxemburg);

/// FundamentalData bundle of the spec: sampled fundamental and dilation
/// tables plus the indices.
struct FundamentalData {
    std::vector<std::pair<double, double>> phi_samples;  // (t, fund(t))
    std::vector<std::pair<double, double>> M_samples;    // (s, M(s))
    FundamentalIndices indices;
};
FundamentalData fundamental_data(const YoungFunction& phi,
                                 OrliczNormKind norm = OrliczNormKind::Luxemburg,
                                 int points = 33);

/// d_s = fund*(e^{-s} rho)^{-1} fund*(rho) by functional calculus on a
/// positive definite rho, where fund* is the Orlicz-norm fundamental
/// function of the complementary function. s <= 0.
struct DsOperator {
    Matrix matrix;
    double operator_norm = 0.0;
};
DsOperator ds_operator(const Matrix& rho, const YoungFunction& phi, double s);

struct EmbeddingReport {
    bool applicable = false;  // upper index < 1
    double beta_upper = 0.0;
    double beta_lower_conj = 0.0;
    double t0 = 1.0;
    double constant = 0.0;   // bracketed-integral constant
    double max_ratio = 0.0;  // worst l1_linf / lambda_infty over the samples
    int violations = 0;
};

/// Checks l1_linf_norm(f) <= C * lambda_infty_quasinorm(f) over random step
/// functions scaled into the Luxemburg unit ball of phi; C is the bracketed
/// integral with n = 4 and the numerically estimated lower index of the
/// complementary function under the Orlicz norm.
EmbeddingReport embedding_inequality_check(const YoungFunction& phi,
                                           int samples, std::uint64_t seed);

}  // namespace orq
