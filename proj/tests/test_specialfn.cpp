#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qhatm/specialfn.hpp"

using namespace qhatm;

TEST_CASE("gamma at integer and half-integer arguments") {
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
}

TEST_CASE("gamma recurrence over (0.1, 40]") {
    for (double x = 0.1; x <= 40.0; x += 0.37) {
        double lhs = gamma_fn(x + 1.0);
        double rhs = x * gamma_fn(x);
        CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
    }
}

TEST_CASE("gamma rejects the non-positive axis") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("rl_integral_oracle basics") {
    auto one = [](double) { return 1.0; };
    CHECK(rl_integral_oracle(one, 1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rl_integral_oracle(one, 0.5, 1.0) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-9));
    auto lin = [](double t) { return t; };
    CHECK(rl_integral_oracle(lin, 0.5, 1.0) ==
          doctest::Approx(0.7522527780636751).epsilon(1e-9));
}

TEST_CASE("rl_integral_oracle power rule, p in 0..3") {
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        for (int p = 0; p <= 3; ++p) {
            for (double t : {0.5, 1.0, 2.0}) {
                auto f = [p](double x) { return std::pow(x, p); };
                double expected =
                    gamma_fn(p + 1.0) / gamma_fn(p + alpha + 1.0) * std::pow(t, p + alpha);
                CHECK(std::abs(rl_integral_oracle(f, alpha, t) - expected) < 1e-8);
            }
        }
    }
}

TEST_CASE("rl_integral_oracle domain errors") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(rl_integral_oracle(one, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(rl_integral_oracle(one, 0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(rl_integral_oracle(one, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rl_integral_oracle(one, 1.5, 1.0), std::domain_error);
}

TEST_CASE("caputo_oracle basics") {
    auto zero = [](double) { return 0.0; };  // f' of a constant
    for (double alpha : {0.25, 0.5, 0.75})
        CHECK(std::abs(caputo_oracle(zero, alpha, 1.3)) < 1e-14);
    auto one = [](double) { return 1.0; };  // f(t) = t
    CHECK(caputo_oracle(one, 0.5, 1.0) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-9));
    auto two_t = [](double t) { return 2.0 * t; };  // f(t) = t^2
    CHECK(caputo_oracle(two_t, 0.5, 1.0) ==
          doctest::Approx(1.5045055561469002).epsilon(1e-9));
}

TEST_CASE("caputo_oracle domain errors") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(caputo_oracle(one, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(caputo_oracle(one, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(caputo_oracle(one, 0.0, 1.0), std::domain_error);
}

TEST_CASE("round trip J^alpha(D^alpha f) = f - f(0)") {
    // corpus: smooth functions with evaluable first derivatives
    struct Fn {
        double (*f)(double);
        double (*fp)(double);
    };
    Fn corpus[] = {
        {[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); }},
        {[](double t) { return std::exp(0.5 * t); },
         [](double t) { return 0.5 * std::exp(0.5 * t); }},
        {[](double t) { return t * t * t + 2.0 * t; },
         [](double t) { return 3.0 * t * t + 2.0; }},
    };
    // the outer integrand behaves like x^(1-alpha) at the lower endpoint, so
    // the outer quadrature needs fine panels to clear 1e-6
    QuadratureSpec fine;
    fine.panel_count = 512;
    QuadratureSpec inner;  // the inner derivative also accumulates into the sum
    inner.panel_count = 64;
    for (const auto& fn : corpus) {
        for (double alpha : {0.25, 0.5, 0.75}) {
            for (double t : {0.1, 0.5, 1.0}) {
                auto d = [&](double x) { return caputo_oracle(fn.fp, alpha, x, inner); };
                double lhs = rl_integral_oracle(d, alpha, t, fine);
                // 5e-6: composite Gauss converges slowly through the
                // integrand's x^(1-alpha) cusp even at 512 panels
                CHECK(std::abs(lhs - (fn.f(t) - fn.f(0.0))) < 5e-6);
            }
        }
    }
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec bad;
    bad.panel_count = 0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = QuadratureSpec{};
    bad.nodes_per_panel = 1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = QuadratureSpec{};
    bad.endpoint_substitution_exponent = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    // exponent must also satisfy p*alpha >= 1 at use time
    auto one = [](double) { return 1.0; };
    QuadratureSpec shallow;
    shallow.endpoint_substitution_exponent = 1.0;
    CHECK_THROWS_AS(rl_integral_oracle(one, 0.25, 1.0, shallow), std::domain_error);
}
