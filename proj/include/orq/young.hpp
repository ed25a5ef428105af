#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orq/numerics.hpp"

namespace orq {

enum class YoungKind {
    PsiE,           // (e^2/4) t^2 on [0,2], e^t beyond
    CoshMinusOne,   // cosh(t) - 1
    LLogLPlusOne,   // t log(t+1)
    ZygmundLLogL,   // t log^+ t
    ZygmundExp,     // t on [0,1], e^{t-1} beyond
    Power,          // scale * t^p, p >= 1
    Tabulated,      // piecewise log-log interpolant
};

/// A Young's function: convex, Phi(0) = 0, nondecreasing to infinity,
/// non-constant on (0,inf). Values live in the extended reals; +inf is legal
/// and absorbing. Immutable after construction.
class YoungFunction {
  public:
    static YoungFunction psi_e();
    static YoungFunction cosh_minus_one();
    static YoungFunction l_log_l_plus_one();
    static YoungFunction zygmund_llogl();
    static YoungFunction zygmund_exp();
    static YoungFunction power(double p, double scale = 1.0);
    /// knots (t_i, y_i) strictly increasing, y finite positive; the function
    /// is 0 on [0, zero_below] and +inf above inf_above.
    static YoungFunction tabulated(std::vector<double> t, std::vector<double> y,
                                   double zero_below = 0.0,
                                   double inf_above = kInf);

    /// Phi(t). Throws std::domain_error for t < 0. May return +inf.
    double operator()(double t) const;

    /// Generalized right-continuous inverse sup{t : Phi(t) <= y}.
    double inverse(double y) const;

    /// Legendre conjugate Phi*(u) = sup_v (uv - Phi(v)). Closed form for
    /// power kinds, tabulated (adaptive log grid) otherwise.
    YoungFunction complementary() const;

    YoungKind kind() const { return kind_; }
    double param_p() const { return p_; }
    double param_scale() const { return scale_; }
    std::string name() const;

    /// Threshold above which the value is +inf (kInf if everywhere finite).
    double finite_threshold() const;

    const std::vector<double>& knots_t() const { return tab_t_; }
    const std::vector<double>& knots_y() const { return tab_y_; }
    double zero_below() const { return zero_below_; }

    struct Validation {
        bool ok = true;
        std::string reason;
        double worst_convexity_defect = 0.0;
    };
    /// Checks the Young axioms on a sampled grid.
    Validation validate() const;

  private:
    YoungFunction() = default;

    double eval_tabulated(double t) const;
    double inverse_tabulated(double y) const;

    YoungKind kind_ = YoungKind::Power;
    double p_ = 2.0;
    double scale_ = 1.0;
    // tabulated data
    std::vector<double> tab_t_, tab_y_;  // knots, log-log interpolated
    double zero_below_ = 0.0;
    double inf_above_ = kInf;
};

/// Construct a builtin from a shorthand like "psi_e" or "power_2".
std::optional<YoungFunction> young_from_name(const std::string& name);

struct EquivalenceResult {
    bool equivalent = false;
    double b1 = 0.0;  // F1(b1 x) >= F2(x) on the test grid
    double b2 = 0.0;  // F2(b2 x) >= F1(x) on the test grid
    bool inconclusive = false;  // grid exhausted without witnesses
};

/// Grid search for equivalence witnesses in the sense F1 ~ F2 iff
/// F1(b1 x) >= F2(x) and F2(b2 x) >= F1(x) for all x. A miss means
/// "not proven equivalent", never a disproof.
EquivalenceResult equivalent(const YoungFunction& f1, const YoungFunction& f2,
                             double b_lo = 1e-6, double b_hi = 1e6);

}  // namespace orq
