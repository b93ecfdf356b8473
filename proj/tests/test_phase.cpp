#include <cmath>
#include <numbers>

#include "doctest.h"
#include "frozen_values.hpp"
#include "sharp/errors.hpp"
#include "sharp/phase.hpp"

using namespace sharp;

namespace {

const double kPi = std::numbers::pi;

GammaParam G(double g) { return GammaParam::finite(g); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("GammaParam domain") {
    CHECK_THROWS_AS(GammaParam::finite(2.0), DomainError);
    CHECK_THROWS_AS(GammaParam::finite(1.5), DomainError);
    CHECK_THROWS_AS(GammaParam::finite(2.005), DomainError);
    CHECK_THROWS_AS(GammaParam::finite(2e6), DomainError);
    CHECK_THROWS_AS(GammaParam::finite(std::nan("")), DomainError);
    CHECK_NOTHROW(GammaParam::finite(2.01));
    CHECK_NOTHROW(GammaParam::finite(1e6));
    CHECK(GammaParam::limit().is_limit());
    CHECK(GammaParam::limit().two_over_gamma() == 0.0);
    CHECK(G(4).zero_height() == 1.5);
}

TEST_CASE("StripPoint domain") {
    CHECK_NOTHROW(StripPoint::make(1.0, 2.0));
    CHECK_NOTHROW(StripPoint::make(-3.0, -2.0));
    CHECK_THROWS_AS(StripPoint::make(0.0, 2.0001), DomainError);
    CHECK_THROWS_AS(StripPoint::make(0.0, -3.0), DomainError);
    CHECK_THROWS_AS(StripPoint::make(INFINITY, 0.0), DomainError);
    CHECK_THROWS_AS(re_theta(G(3), 0.0, -2.5), DomainError);
}

TEST_CASE("g_gamma and g_inf") {
    for (double g : {2.01, 3.0, 7.5, 1e5}) {
        CHECK(g_gamma(G(g), 0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
        for (double k : {0.1, 1.0, 4.0, 30.0}) {
            CHECK(g_gamma(G(g), k) == g_gamma(G(g), -k));
            CHECK(g_gamma(G(g), k) > 0.0);
        }
    }
    const double third = 1.0 / 3.0;
    const double expected = kPi * (2.0 * std::exp(-4.0 * third) + std::exp(-2.0 * third) - std::exp(-10.0 * third));
    CHECK(g_gamma(G(3), 1.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(g_gamma(G(3), 1.0) - 3.1571039591794108) < 1e-14);

    CHECK(g_inf(0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(std::abs(g_inf(20.0) - kPi) < 1e-15);
    CHECK(std::abs(g_inf(0.5) - 5.0278790215840003) < 1e-14);
    CHECK(g_gamma(GammaParam::limit(), 0.5) == g_inf(0.5));
}

TEST_CASE("kernels") {
    for (double k : {1e-6, 1e-3, 0.05, 1.0, 5.0, 25.0}) {
        CHECK(re_kernel(G(3), k, 1.7, 0.0) == 0.0);
        CHECK(im_kernel(G(3), k, 0.0, 1.3) == 0.0);
    }
    const double k = 1e-8;
    for (auto [x, y] : {std::pair{1.0, -1.0}, std::pair{0.3, 1.7}, std::pair{4.0, 2.0}}) {
        const double g = g_gamma(G(5), k);
        CHECK(rel(re_kernel(G(5), k, x, y) / g, y * (y * y - 3.0 * x * x) / 12.0) < 1e-10);
        CHECK(rel(im_kernel(G(5), k, x, y) / g, x * (3.0 * y * y - x * x) / 12.0) < 1e-10);
    }
    CHECK(rel(re_kernel(G(3), 0.7, 1.0, -1.0), frozen::re_kernel_3_07_1_m1) < 1e-12);
}

TEST_CASE("property: kernel branches agree at the crossovers") {
    const double k0 = detail::kSeriesThreshold;
    const double k1 = detail::kAsymptoticThreshold;
    for (double x : {0.0, 0.5, 3.0, 20.0}) {
        for (double y : {-2.0, -1.0, -0.3, 0.7, 2.0}) {
            const auto s = detail::kernel_ratio_series(k0, x, y);
            const auto d = detail::kernel_ratio_direct(k0, x, y);
            const double scale_re = std::max(std::abs(d.re), 1e-300);
            const double scale_im = std::max(std::abs(d.im), 1e-300);
            CHECK(std::abs(s.re - d.re) / scale_re < 1e-9);
            if (x != 0.0) CHECK(std::abs(s.im - d.im) / scale_im < 1e-9);

            const double below = re_kernel(G(3), k0 * (1.0 - 1e-9), x, y);
            const double above = re_kernel(G(3), k0 * (1.0 + 1e-9), x, y);
            CHECK(std::abs(below - above) <= 1e-9 * std::abs(above) + 1e-300);

            const auto d1 = detail::kernel_ratio_direct(k1, x, y);
            const auto a1 = detail::kernel_ratio_asymptotic(k1, x, y);
            CHECK(std::abs(d1.re - a1.re) <= 1e-12 * (std::abs(a1.re) + std::abs(y) * 1e-16));
            CHECK(std::abs(d1.im - a1.im) <= 1e-12 * (std::abs(a1.im) + std::abs(x) * 1e-16));
        }
    }
}

TEST_CASE("phase values against the Simpson oracle") {
    CHECK(std::abs(re_theta(G(3), 0.0, -1.0).value - frozen::re_theta_3_0_m1) < 1e-9);
    CHECK(std::abs(im_theta(G(4), 2.0, -2.0).value - frozen::im_theta_4_2_m2) < 1e-9);
    CHECK(std::abs(re_theta(G(5), 1.5, 0.7).value - frozen::re_theta_5_1p5_0p7) < 1e-9);
    CHECK(std::abs(im_theta(G(5), 1.5, 0.7).value - frozen::im_theta_5_1p5_0p7) < 1e-9);
    CHECK(std::abs(re_theta_inf_line(0.0).value - frozen::re_theta_inf_0_m1) < 1e-9);
    CHECK(std::abs(re_theta_inf_line(3.0).value - frozen::re_theta_inf_3_m1) < 1e-9);

    const PhaseValue t = theta(G(3), StripPoint::make(0.0, -4.0 / 3.0));
    CHECK(std::abs(t.im) < 1e-10);
    CHECK(std::abs(t.re - frozen::re_theta_3_0_m4o3) < 1e-9);
}

TEST_CASE("phase vanishing sets") {
    for (double x : {-4.0, 0.0, 0.3, 11.0}) CHECK(re_theta(G(3), x, 0.0).value == 0.0);
    for (double y : {-2.0, -0.4, 1.0, 2.0}) CHECK(im_theta(G(3), 0.0, y).value == 0.0);
    const PhaseValue zero = theta(G(6), StripPoint::make(0.0, 0.0));
    CHECK(zero.re == 0.0);
    CHECK(zero.im == 0.0);
}

TEST_CASE("property: parity on a 5x5 grid") {
    const double xs[] = {-3.0, -0.7, 0.0, 1.2, 6.0};
    const double ys[] = {-2.0, -1.1, 0.0, 0.4, 1.9};
    for (double g : {3.0, 8.0}) {
        for (double x : xs) {
            for (double y : ys) {
                const auto r = re_theta(G(g), x, y);
                const auto rx = re_theta(G(g), -x, y);
                const auto ry = re_theta(G(g), x, -y);
                CHECK(std::abs(r.value - rx.value) <= 10.0 * (r.err_estimate + rx.err_estimate));
                CHECK(std::abs(r.value + ry.value) <= 10.0 * (r.err_estimate + ry.err_estimate));

                const auto i = im_theta(G(g), x, y);
                const auto ix = im_theta(G(g), -x, y);
                const auto iy = im_theta(G(g), x, -y);
                CHECK(std::abs(i.value + ix.value) <= 10.0 * (i.err_estimate + ix.err_estimate));
                CHECK(std::abs(i.value - iy.value) <= 10.0 * (i.err_estimate + iy.err_estimate));
            }
        }
    }
}

TEST_CASE("property: theta(conj z) = -conj theta(z)") {
    for (auto [x, y] : {std::pair{0.5, -1.0}, std::pair{-2.0, 1.5}, std::pair{7.0, 0.2}, std::pair{0.0, -1.9}}) {
        const PhaseValue a = theta(G(4), StripPoint::make(x, y));
        const PhaseValue b = theta(G(4), StripPoint::make(x, -y));
        const double tol = 10.0 * (a.err_estimate + b.err_estimate);
        CHECK(std::abs(b.re + a.re) <= tol);
        CHECK(std::abs(b.im - a.im) <= tol);
    }
}

TEST_CASE("property: growth law is linear in |x| up to a bounded remainder") {
    CHECK(kGrowthSlope == doctest::Approx(g_gamma(G(3), 0.0) / 4.0).epsilon(1e-15));
    for (double g : {3.0, 6.0}) {
        for (double y : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
            auto remainder = [&](double x) { return re_theta(G(g), x, y).value - kGrowthSlope * std::abs(x) * y; };
            CHECK(std::abs(remainder(30.0) - remainder(20.0)) < 1.0);
            CHECK(std::abs(remainder(-30.0) - remainder(-20.0)) < 1.0);
        }
    }
}

TEST_CASE("large gamma approaches the limiting phase") {
    for (double x : {0.0, 1.0, 3.0}) {
        const double finite = re_theta(G(1e5), x, -1.0).value;
        const double limit = re_theta_inf_line(x).value;
        CHECK(std::abs(finite - limit) < 1e-4);
    }
    CHECK(re_theta_inf_line(2.5).value == re_theta_inf_line(-2.5).value);
}

TEST_CASE("the limit phase has no decay on |y| = 2") {
    CHECK_THROWS_AS(re_theta(GammaParam::limit(), 1.0, -2.0), DomainError);
    CHECK_NOTHROW(re_theta(GammaParam::limit(), 1.0, -1.9));
}

TEST_CASE("envelopes bound the scaled integrands beyond their onset") {
    for (double g : {2.01, 3.0, 50.0}) {
        for (double x : {0.0, 2.0, 20.0}) {
            for (double y : {-2.0, -1.0, 0.5, 2.0}) {
                const auto re_env = detail::re_envelope(G(g), x, y);
                const auto im_env = detail::im_envelope(G(g), x, y);
                for (double k = re_env.onset; k < 60.0; k += 0.37) {
                    CHECK(std::abs(re_kernel(G(g), k, x, y)) / kPi <= re_env.amplitude * std::exp(-re_env.rate * k));
                    CHECK(std::abs(im_kernel(G(g), k, x, y)) / kPi <= im_env.amplitude * std::exp(-im_env.rate * k));
                }
            }
        }
    }
}
