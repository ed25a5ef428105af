#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orq/numerics.hpp"
#include "orq/young.hpp"

using namespace orq;

namespace {

const double kE = std::exp(1.0);

// Independent oracle for the conjugate of psi_e, derived by direct
// stationarity: sup_v (uv - (e^2/4)v^2) = u^2/e^2 while the maximiser stays
// below 2, and sup_{v>2} (uv - e^v) = u log u - u beyond.
double psi_e_conj_oracle(double u) {
    if (u <= kE * kE) return u * u / (kE * kE);
    return u * std::log(u) - u;
}

}  // namespace

TEST_CASE("builtins satisfy the Young axioms") {
    for (auto f : {YoungFunction::psi_e(), YoungFunction::cosh_minus_one(),
                   YoungFunction::l_log_l_plus_one(),
                   YoungFunction::zygmund_llogl(), YoungFunction::zygmund_exp(),
                   YoungFunction::power(2.0), YoungFunction::power(1.0),
                   YoungFunction::power(4.0 / 3.0)}) {
        auto v = f.validate();
        INFO(f.name(), ": ", v.reason);
        CHECK(v.ok);
    }
}

TEST_CASE("evaluate: pinned values") {
    CHECK(YoungFunction::psi_e()(2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-12));
    CHECK(YoungFunction::cosh_minus_one()(0.0) == 0.0);
    CHECK(YoungFunction::zygmund_exp()(1.0) == doctest::Approx(1.0));
    CHECK(YoungFunction::zygmund_exp()(0.25) == doctest::Approx(0.25));
    CHECK(YoungFunction::power(2.0)(3.0) == doctest::Approx(9.0));
    CHECK(YoungFunction::zygmund_llogl()(0.5) == 0.0);
    CHECK(YoungFunction::l_log_l_plus_one()(1.0) == doctest::Approx(std::log(2.0)));
    CHECK_THROWS_AS(YoungFunction::psi_e()(-1.0), std::domain_error);
}

TEST_CASE("evaluate survives tiny arguments without cancellation") {
    auto c1 = YoungFunction::cosh_minus_one();
    CHECK(c1(2e-8) == doctest::Approx(2e-16).epsilon(1e-10));
}

TEST_CASE("inverse: pinned values and round trip") {
    auto pe = YoungFunction::psi_e();
    CHECK(pe.inverse(std::exp(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(YoungFunction::power(3.0).inverse(8.0) ==
          doctest::Approx(2.0).epsilon(1e-12));

    for (auto f : {YoungFunction::psi_e(), YoungFunction::cosh_minus_one(),
                   YoungFunction::l_log_l_plus_one(),
                   YoungFunction::zygmund_llogl(), YoungFunction::zygmund_exp(),
                   YoungFunction::power(2.0)}) {
        for (double y : log_grid(1e-6, 1e6, 49)) {
            double t = f.inverse(y);
            double back = f(t);
            INFO(f.name(), " y=", y);
            CHECK(back == doctest::Approx(y).epsilon(1e-10));
        }
    }
}

TEST_CASE("inverse is monotone on a grid") {
    for (auto f : {YoungFunction::psi_e(), YoungFunction::zygmund_exp(),
                   YoungFunction::l_log_l_plus_one()}) {
        double prev = -1.0;
        for (double y : log_grid(1e-8, 1e8, 97)) {
            double t = f.inverse(y);
            CHECK(t >= prev - 1e-12 * (1.0 + std::abs(prev)));
            prev = t;
        }
    }
}

TEST_CASE("complementary: power self-duality and indicator conjugate") {
    // t^2/2 is Legendre self-conjugate
    auto f = YoungFunction::power(2.0, 0.5);
    auto g = f.complementary();
    CHECK(g.kind() == YoungKind::Power);
    CHECK(g.param_p() == doctest::Approx(2.0));
    CHECK(g.param_scale() == doctest::Approx(0.5));
    // conjugate of t is 0 on [0,1], +inf beyond
    auto ind = YoungFunction::power(1.0).complementary();
    CHECK(ind(0.5) == 0.0);
    CHECK(ind(1.0) == 0.0);
    CHECK(std::isinf(ind(1.0 + 1e-9)));
    CHECK(ind.inverse(5.0) == doctest::Approx(1.0));
}

TEST_CASE("complementary of psi_e matches the stationarity oracle") {
    auto conj = YoungFunction::psi_e().complementary();
    for (double u : log_grid(1e-6, 1e6, 101)) {
        double got = conj(u);
        double want = psi_e_conj_oracle(u);
        INFO("u=", u);
        CHECK(got == doctest::Approx(want).epsilon(2e-6));
    }
}

TEST_CASE("the Zygmund pair are conjugates of each other") {
    auto a = YoungFunction::zygmund_exp().complementary();
    auto llogl = YoungFunction::zygmund_llogl();
    for (double u : log_grid(1e-4, 1e6, 81)) {
        double want = llogl(u);
        double got = a(u);
        if (want == 0.0) {
            CHECK(got <= 1e-8 * (1.0 + u));
        } else {
            CHECK(got == doctest::Approx(want).epsilon(2e-6));
        }
    }
}

TEST_CASE("Young's inequality for cosh-1 on a 200x200 grid") {
    auto phi = YoungFunction::cosh_minus_one();
    auto conj = phi.complementary();
    auto grid = log_grid(1e-4, 1e2, 200);
    int violations = 0;
    for (double u : grid)
        for (double v : grid) {
            double bound = phi(u) + conj(v);
            if (!std::isfinite(bound)) continue;
            if (u * v > bound * (1.0 + 1e-7) + 1e-12) ++violations;
        }
    CHECK(violations == 0);
}

TEST_CASE("conjugate involution on builtins with finite conjugate") {
    for (auto f : {YoungFunction::psi_e(), YoungFunction::cosh_minus_one(),
                   YoungFunction::zygmund_exp()}) {
        auto back = f.complementary().complementary();
        for (double t : log_grid(1e-5, 1e2, 61)) {
            double want = f(t);
            double got = back(t);
            INFO(f.name(), " t=", t);
            if (want == 0.0) {
                CHECK(got <= 1e-9 * (1.0 + t));
            } else {
                CHECK(got == doctest::Approx(want).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("equivalence: psi_e ~ cosh-1 with witnesses") {
    auto r = equivalent(YoungFunction::psi_e(), YoungFunction::cosh_minus_one());
    CHECK(r.equivalent);
    // the witnesses actually witness
    auto pe = YoungFunction::psi_e();
    auto c1 = YoungFunction::cosh_minus_one();
    for (double x : log_grid(1e-6, 200.0, 97)) {
        CHECK(pe(r.b1 * x) >= c1(x) * (1.0 - 1e-12));
        CHECK(c1(r.b2 * x) >= pe(x) * (1.0 - 1e-12));
    }
}

TEST_CASE("equivalence: scaling pair t^2 vs 5 t^2") {
    auto r = equivalent(YoungFunction::power(2.0),
                        YoungFunction::power(2.0, 5.0));
    CHECK(r.equivalent);
    CHECK(r.b1 <= 1.0 + 1e-12);          // F1(x) >= F2(x/sqrt5) needs no dilation
    CHECK(r.b2 >= std::sqrt(5.0) * 0.9); // about sqrt(5)
    CHECK(r.b2 <= std::sqrt(5.0) * 1.3);
}

TEST_CASE("equivalence: t vs t^2 is not proven (behaviour at 0+ and inf)") {
    auto r = equivalent(YoungFunction::power(1.0), YoungFunction::power(2.0));
    CHECK_FALSE(r.equivalent);
    CHECK(r.inconclusive);
}

TEST_CASE("equivalence is reflexive and symmetric on the builtin set") {
    std::vector<YoungFunction> fs = {
        YoungFunction::psi_e(), YoungFunction::cosh_minus_one(),
        YoungFunction::power(2.0), YoungFunction::zygmund_exp()};
    for (const auto& f : fs) {
        auto r = equivalent(f, f);
        CHECK(r.equivalent);
    }
    auto ab = equivalent(fs[0], fs[1]);
    auto ba = equivalent(fs[1], fs[0]);
    CHECK(ab.equivalent == ba.equivalent);
}

TEST_CASE("young_from_name shorthands") {
    CHECK(young_from_name("psi_e").has_value());
    CHECK(young_from_name("power_2")->param_p() == doctest::Approx(2.0));
    CHECK_FALSE(young_from_name("nope").has_value());
}
