#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "frozen_values.hpp"
#include "sharp/errors.hpp"
#include "sharp/quadrature.hpp"

using namespace sharp::quad;

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();

double closed_damped_sine() {
    return 3.0 / 13.0 - std::exp(-20.0) * (2.0 * std::sin(30.0) + 3.0 * std::cos(30.0)) / 13.0;
}

struct Case {
    Integrand f;
    double oracle;
    bool semi;
    DecayEnvelope env;
};

std::vector<Case> derived_suite() {
    return {
        {[](double k) { return std::exp(-2.0 * k) * std::sin(3.0 * k); }, closed_damped_sine(), false, {}},
        {[](double k) { return std::exp(-k) / (1.0 + k * k); }, frozen::exp_over_lorentz, true, {1.0, 1.0, 0.0}},
    };
}

IntegralResult run(const Case& c, const QuadSpec& spec) {
    return c.semi ? integrate_semi_infinite(c.f, 0.0, c.env, spec) : integrate_finite(c.f, 0.0, 10.0, spec);
}

}  // namespace

TEST_CASE("QuadSpec defaults and validation") {
    QuadSpec s;
    CHECK(s.abs_tol == 1e-12);
    CHECK(s.rel_tol == 1e-10);
    CHECK(s.max_subdivisions == 2000);
    CHECK(s.tail_safety == 1.5);
    CHECK_NOTHROW(s.validate());
    s.abs_tol = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = QuadSpec{};
    s.tail_safety = 0.5;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = QuadSpec{};
    s.max_subdivisions = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("finite integrals") {
    const QuadSpec spec;
    auto r = integrate_finite([](double x) { return x * x; }, 0.0, 1.0, spec);
    CHECK(std::abs(r.value - 1.0 / 3.0) <= spec.abs_tol);
    CHECK(r.converged);
    CHECK(r.evaluations > 0);

    r = integrate_finite([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0, spec);
    CHECK(std::abs(r.value - std::numbers::pi / 2.0) <= spec.abs_tol);

    r = integrate_finite([](double k) { return std::exp(-2.0 * k) * std::sin(3.0 * k); }, 0.0, 10.0, spec);
    CHECK(std::abs(r.value - closed_damped_sine()) <= spec.abs_tol);
}

TEST_CASE("semi-infinite integrals") {
    const QuadSpec spec;
    auto r = integrate_semi_infinite([](double k) { return std::exp(-k); }, 0.0, {1.0, 1.0, 0.0}, spec);
    CHECK(std::abs(r.value - 1.0) <= spec.abs_tol);

    r = integrate_semi_infinite([](double k) { return k * std::exp(-2.0 * k); }, 0.0, {1.0, 1.9, 0.0}, spec);
    CHECK(std::abs(r.value - 0.25) <= spec.abs_tol);

    r = integrate_semi_infinite([](double k) { return std::exp(-k) / (1.0 + k * k); }, 0.0, {1.0, 1.0, 0.0}, spec);
    CHECK(std::abs(r.value - frozen::exp_over_lorentz) <= 1e-9);
    CHECK(std::abs(frozen::exp_over_lorentz - 0.6214496242) < 1e-10);
}

TEST_CASE("even-line integrals") {
    const QuadSpec spec;
    auto r = integrate_even_line([](double x) { return std::exp(-std::abs(x)); }, {1.0, 1.0, 0.0}, spec);
    CHECK(std::abs(r.value - 2.0) <= spec.abs_tol);

    // 1/(x^2+4) only decays polynomially; integrate the finite part and add the exact tail.
    const double cut = 1e6;
    r = integrate_finite([](double x) { return 1.0 / (x * x + 4.0); }, 0.0, cut, spec);
    const double tail = 0.5 * (std::numbers::pi / 2.0 - std::atan(cut / 2.0));
    CHECK(std::abs(2.0 * (r.value + tail) - std::numbers::pi / 2.0) <= 2.0 * spec.abs_tol);

    r = integrate_even_line([](double x) { return (x * x + 9.0) / (x * x + 1.0) * std::exp(-2.0 * std::abs(x)); },
                            {9.0, 2.0, 0.0}, spec);
    CHECK(std::abs(r.value - frozen::rational_exp_line) <= 1e-9);
}

TEST_CASE("error contract") {
    const QuadSpec spec;
    CHECK_THROWS_AS(integrate_finite([](double) { return std::nan(""); }, 0.0, 1.0, spec), sharp::NonFiniteError);
    CHECK_THROWS_AS(
        integrate_finite([](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : x; }, 0.0, 1.0, spec),
        sharp::NonFiniteError);
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 1.0, 0.0, spec), std::invalid_argument);
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, {1.0, 0.0, 0.0}, spec),
                    sharp::InvalidEnvelope);
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, {1.0, -1.0, 0.0}, spec),
                    sharp::InvalidEnvelope);
}

TEST_CASE("budget exhaustion returns the best value unconverged") {
    QuadSpec spec;
    spec.max_subdivisions = 3;
    const auto r = integrate_finite([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, spec);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value));
    CHECK(r.err_estimate > spec.target(r.value));
}

TEST_CASE("truncation point follows the envelope") {
    QuadSpec spec;
    const DecayEnvelope env{2.0, 0.5, 0.0};
    const double t = truncation_point(1.0, env, spec);
    const double expected = 1.0 + spec.tail_safety * std::log(2.0 / (0.5 * spec.abs_tol)) / 0.5;
    CHECK(t == doctest::Approx(expected).epsilon(1e-14));
    CHECK(truncation_point(0.0, {1.0, 1.0, 100.0}, spec) >= 100.0);
}

TEST_CASE("property: converged implies err within target") {
    const QuadSpec spec;
    for (const Case& c : derived_suite()) {
        const auto r = run(c, spec);
        if (r.converged) CHECK(r.err_estimate <= spec.target(r.value));
        CHECK(r.err_estimate >= 0.0);
    }
}

TEST_CASE("property: linearity on random polynomials") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const QuadSpec spec;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> p(7), q(7);
        for (auto& v : p) v = coef(rng);
        for (auto& v : q) v = coef(rng);
        const double alpha = coef(rng), beta = coef(rng);
        auto poly = [](const std::vector<double>& c) {
            return [c](double x) {
                double s = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
                return s;
            };
        };
        const auto fp = poly(p), fq = poly(q);
        const double a = -1.3, b = 2.1;
        const double lhs = integrate_finite([&](double x) { return alpha * fp(x) + beta * fq(x); }, a, b, spec).value;
        const double rhs = alpha * integrate_finite(fp, a, b, spec).value + beta * integrate_finite(fq, a, b, spec).value;
        CHECK(std::abs(lhs - rhs) <= 2.0 * spec.abs_tol);
    }
}

TEST_CASE("property: refinement does not move away from the oracle") {
    for (const Case& c : derived_suite()) {
        double previous = std::numeric_limits<double>::infinity();
        for (double tol = 1e-4; tol >= 1e-13; tol /= 2.0) {
            QuadSpec spec;
            spec.abs_tol = tol;
            spec.rel_tol = tol;
            const double err = std::abs(run(c, spec).value - c.oracle);
            // A few ulps of rounding in the oracle and the sum are below this resolution.
            CHECK(err <= previous + 4.0 * kUlp);
            previous = err;
        }
    }
}

TEST_CASE("property: error estimates are honest") {
    for (double tol : {1e-6, 1e-9, 1e-12}) {
        QuadSpec spec;
        spec.abs_tol = tol;
        spec.rel_tol = tol;
        for (const Case& c : derived_suite()) {
            const auto r = run(c, spec);
            CHECK(std::abs(r.value - c.oracle) <= 10.0 * r.err_estimate + 4.0 * kUlp);
        }
        const auto r = integrate_even_line(
            [](double x) { return (x * x + 9.0) / (x * x + 1.0) * std::exp(-2.0 * std::abs(x)); }, {9.0, 2.0, 0.0},
            spec);
        CHECK(std::abs(r.value - frozen::rational_exp_line) <= 10.0 * r.err_estimate + 4.0 * kUlp);
    }
}

TEST_CASE("property: even line equals both halves glued") {
    const QuadSpec spec;
    auto f = [](double x) { return std::exp(-1.5 * std::abs(x)) * std::cos(x) / (1.0 + 0.1 * x * x); };
    const DecayEnvelope env{1.0, 1.5, 0.0};
    const double whole = integrate_even_line(f, env, spec).value;
    const double right = integrate_semi_infinite(f, 0.0, env, spec).value;
    const double left = integrate_semi_infinite([&](double s) { return f(-s); }, 0.0, env, spec).value;
    CHECK(std::abs(whole - (left + right)) <= 2.0 * spec.abs_tol);
}
