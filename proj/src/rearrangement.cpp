#include "orq/rearrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace orq {

WeightedTraceAlgebra::WeightedTraceAlgebra(std::vector<Block> b)
    : blocks(std::move(b)) {
    for (const auto& blk : blocks)
        if (blk.dim < 1 || blk.weight <= 0.0)
            throw std::invalid_argument("WeightedTraceAlgebra: bad block");
}

double WeightedTraceAlgebra::trace_of_identity() const {
    double s = 0.0;
    for (const auto& b : blocks) s += b.weight * b.dim;
    return s;
}

MeasurableElement MeasurableElement::zero(const WeightedTraceAlgebra& alg) {
    MeasurableElement a;
    for (const auto& b : alg.blocks)
        a.blocks.push_back(Matrix::Zero(b.dim, b.dim));
    return a;
}

void MeasurableElement::check_shape(const WeightedTraceAlgebra& alg) const {
    if (blocks.size() != alg.blocks.size())
        throw std::invalid_argument("MeasurableElement: block count mismatch");
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].rows() != alg.blocks[k].dim ||
            blocks[k].cols() != alg.blocks[k].dim)
            throw std::invalid_argument("MeasurableElement: shape mismatch");
        if (!blocks[k].allFinite())
            throw std::invalid_argument("MeasurableElement: non-finite entries");
    }
}

MeasurableElement MeasurableElement::scaled(Complex c) const {
    MeasurableElement out = *this;
    for (auto& b : out.blocks) b *= c;
    return out;
}

MeasurableElement MeasurableElement::adjoint() const {
    MeasurableElement out = *this;
    for (auto& b : out.blocks) b = b.adjoint().eval();
    return out;
}

MeasurableElement operator+(const MeasurableElement& a,
                            const MeasurableElement& b) {
    MeasurableElement out = a;
    for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] += b.blocks[k];
    return out;
}

MeasurableElement operator-(const MeasurableElement& a,
                            const MeasurableElement& b) {
    MeasurableElement out = a;
    for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] -= b.blocks[k];
    return out;
}

MeasurableElement operator*(const MeasurableElement& a,
                            const MeasurableElement& b) {
    MeasurableElement out = a;
    for (std::size_t k = 0; k < out.blocks.size(); ++k)
        out.blocks[k] = (a.blocks[k] * b.blocks[k]).eval();
    return out;
}

Complex trace(const WeightedTraceAlgebra& alg, const MeasurableElement& a) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < alg.blocks.size(); ++k)
        s += alg.blocks[k].weight * a.blocks[k].trace();
    return s;
}

StepFunction mu(const MeasurableElement& a, const WeightedTraceAlgebra& alg) {
    a.check_shape(alg);
    std::vector<StepFunction::Step> steps;
    for (std::size_t k = 0; k < alg.blocks.size(); ++k) {
        const Matrix& m = a.blocks[k];
        Eigen::JacobiSVD<Matrix> svd(m);
        const auto& sv = svd.singularValues();
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            steps.push_back({sv(i), alg.blocks[k].weight});
    }
    return StepFunction(std::move(steps));
}

double l1_linf_norm(const StepFunction& f) { return f.integral(1.0); }

double lambda_infty_quasinorm(const StepFunction& f) {
    // On each run [W_{k-1}, W_k) the map t -> t mu_t increases, so the sup
    // over (0,1] is attained at run right-endpoints clipped to 1.
    double best = 0.0;
    double acc = 0.0;
    for (const auto& s : f.steps()) {
        double left = acc;
        acc += s.width;
        if (left >= 1.0) break;
        best = std::max(best, std::min(acc, 1.0) * s.value);
    }
    return best;
}

}  // namespace orq
