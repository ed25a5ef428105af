#pragma once

#include <utility>
#include <vector>

namespace orq {

/// A nonincreasing step function on (0, infinity) stored as (value, width)
/// runs; identically 0 beyond the total width. Canonical form has strictly
/// decreasing positive values and positive widths.
class StepFunction {
  public:
    struct Step {
        double value = 0.0;
        double width = 0.0;
    };

    StepFunction() = default;
    explicit StepFunction(std::vector<Step> steps) : steps_(std::move(steps)) {
        canonicalize();
    }
    static StepFunction indicator(double width, double value = 1.0) {
        return StepFunction({{value, width}});
    }

    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    double total_width() const;
    double max_value() const { return steps_.empty() ? 0.0 : steps_[0].value; }

    /// Right-continuous evaluation: value of the run containing t.
    double at(double t) const;

    StepFunction scaled(double c) const;

    /// Pointwise sum of two nonincreasing step functions (still a step
    /// function with merged breakpoints).
    friend StepFunction step_add(const StepFunction& a, const StepFunction& b);

    /// a(t) <= b(t) + tol for all t (checked on merged breakpoints).
    friend bool step_leq(const StepFunction& a, const StepFunction& b,
                         double tol);

    /// max_t (a(t) - b(t)) over merged runs.
    friend double step_max_excess(const StepFunction& a, const StepFunction& b);

    /// Exact integral over (0, upto).
    double integral(double upto) const;

  private:
    void canonicalize();
    std::vector<Step> steps_;
};

}  // namespace orq
