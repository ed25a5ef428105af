#include "orq/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orq {

void StepFunction::canonicalize() {
    for (auto& s : steps_) {
        if (s.value < 0.0 || s.width < 0.0 || !std::isfinite(s.value) ||
            !std::isfinite(s.width))
            throw std::invalid_argument("StepFunction: invalid step");
    }
    std::stable_sort(steps_.begin(), steps_.end(),
                     [](const Step& a, const Step& b) { return a.value > b.value; });
    std::vector<Step> out;
    for (const auto& s : steps_) {
        if (s.width == 0.0 || s.value == 0.0) continue;
        if (!out.empty() &&
            std::abs(out.back().value - s.value) <=
                1e-12 * (1.0 + std::abs(out.back().value))) {
            out.back().width += s.width;
        } else {
            out.push_back(s);
        }
    }
    steps_ = std::move(out);
}

double StepFunction::total_width() const {
    double w = 0.0;
    for (const auto& s : steps_) w += s.width;
    return w;
}

double StepFunction::at(double t) const {
    if (t < 0.0) throw std::domain_error("StepFunction::at: negative t");
    double acc = 0.0;
    for (const auto& s : steps_) {
        acc += s.width;
        if (t < acc) return s.value;
    }
    return 0.0;
}

StepFunction StepFunction::scaled(double c) const {
    if (c < 0.0) throw std::domain_error("StepFunction::scaled: negative factor");
    std::vector<Step> out = steps_;
    for (auto& s : out) s.value *= c;
    return StepFunction(std::move(out));
}

double StepFunction::integral(double upto) const {
    double acc = 0.0, pos = 0.0;
    for (const auto& s : steps_) {
        if (pos >= upto) break;
        double w = std::min(s.width, upto - pos);
        acc += s.value * w;
        pos += s.width;
    }
    return acc;
}

StepFunction step_add(const StepFunction& a, const StepFunction& b) {
    std::vector<double> cuts{0.0};
    double acc = 0.0;
    for (const auto& s : a.steps()) cuts.push_back(acc += s.width);
    acc = 0.0;
    for (const auto& s : b.steps()) cuts.push_back(acc += s.width);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<StepFunction::Step> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        out.push_back({a.at(mid) + b.at(mid), cuts[i + 1] - cuts[i]});
    }
    return StepFunction(std::move(out));
}

namespace {

double max_excess_impl(const StepFunction& a, const StepFunction& b) {
    std::vector<double> cuts{0.0};
    double acc = 0.0;
    for (const auto& s : a.steps()) cuts.push_back(acc += s.width);
    acc = 0.0;
    for (const auto& s : b.steps()) cuts.push_back(acc += s.width);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        worst = std::max(worst, a.at(mid) - b.at(mid));
    }
    return worst;
}

}  // namespace

double step_max_excess(const StepFunction& a, const StepFunction& b) {
    return max_excess_impl(a, b);
}

bool step_leq(const StepFunction& a, const StepFunction& b, double tol) {
    return max_excess_impl(a, b) <= tol;
}

}  // namespace orq
