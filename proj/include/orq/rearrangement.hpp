#pragma once

#include <vector>

#include "orq/matutil.hpp"
#include "orq/step_function.hpp"

namespace orq {

/// Finite direct sum of matrix blocks with strictly positive trace weights:
/// tau(a) = sum_k w_k Tr(a_k). A desk-scale semifinite (M, tau).
struct WeightedTraceAlgebra {
    struct Block {
        int dim = 1;
        double weight = 1.0;
    };
    std::vector<Block> blocks;

    WeightedTraceAlgebra() = default;
    explicit WeightedTraceAlgebra(std::vector<Block> b);
    static WeightedTraceAlgebra simple(int dim, double weight = 1.0) {
        return WeightedTraceAlgebra({{dim, weight}});
    }

    std::size_t block_count() const { return blocks.size(); }
    double trace_of_identity() const;
};

/// Per-block matrices over a WeightedTraceAlgebra.
struct MeasurableElement {
    std::vector<Matrix> blocks;

    static MeasurableElement zero(const WeightedTraceAlgebra& alg);
    void check_shape(const WeightedTraceAlgebra& alg) const;

    MeasurableElement scaled(Complex c) const;
    MeasurableElement adjoint() const;
    friend MeasurableElement operator+(const MeasurableElement& a,
                                       const MeasurableElement& b);
    friend MeasurableElement operator-(const MeasurableElement& a,
                                       const MeasurableElement& b);
    friend MeasurableElement operator*(const MeasurableElement& a,
                                       const MeasurableElement& b);
};

Complex trace(const WeightedTraceAlgebra& alg, const MeasurableElement& a);

/// Generalized singular value function mu(a): singular values of each block
/// contribute a step of that block's trace weight; merged nonincreasing.
StepFunction mu(const MeasurableElement& a, const WeightedTraceAlgebra& alg);

/// Canonical norm of (L^inf + L^1) on the unit interval: integral of mu
/// over (0,1).
double l1_linf_norm(const StepFunction& f);

/// sup_{0 < t <= 1} t mu_t(f), computed exactly from breakpoints.
double lambda_infty_quasinorm(const StepFunction& f);

}  // namespace orq
