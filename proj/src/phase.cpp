#include "sharp/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sharp/errors.hpp"

namespace sharp {

using quad::DecayEnvelope;
using quad::IntegralResult;
using quad::QuadSpec;

GammaParam GammaParam::finite(double gamma) {
    if (!std::isfinite(gamma) || !(gamma > 2.0)) {
        throw DomainError("gamma must be a finite number > 2 (got " + std::to_string(gamma) + ")");
    }
    if (gamma < kMin || gamma > kMax) {
        throw DomainError("gamma = " + std::to_string(gamma) + " is outside the supported range [2.01, 1e6]");
    }
    GammaParam p;
    p.gamma_ = gamma;
    p.two_over_gamma_ = 2.0 / gamma;
    p.limit_ = false;
    return p;
}

double GammaParam::value() const { return limit_ ? std::numeric_limits<double>::infinity() : gamma_; }

StripPoint StripPoint::make(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("strip point must be finite");
    if (std::abs(y) > 2.0) {
        throw DomainError("|Im z| must be <= 2 (got y = " + std::to_string(y) + ")");
    }
    return StripPoint{x, y};
}

double g_inf(double k) {
    const double a = std::abs(k);
    return std::numbers::pi * (2.0 * std::exp(-2.0 * a) + 1.0 - std::exp(-4.0 * a));
}

double g_gamma(const GammaParam& gamma, double k) {
    if (gamma.is_limit()) return g_inf(k);
    const double a = std::abs(k);
    const double t = gamma.two_over_gamma();
    return std::numbers::pi * (2.0 * std::exp(-(2.0 - t) * a) + std::exp(-t * a) - std::exp(-(4.0 - t) * a));
}

namespace detail {

namespace {

// sinh(t) - t without cancellation.
double sinh_minus_identity(double t) {
    if (std::abs(t) >= 1.0) return std::sinh(t) - t;
    const double t2 = t * t;
    double term = t * t2 / 6.0;
    double sum = term;
    for (int n = 2; n < 30; ++n) {
        term *= t2 / ((2.0 * n) * (2.0 * n + 1.0));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// sin(t) - t without cancellation.
double sin_minus_identity(double t) {
    if (std::abs(t) >= 1.0) return std::sin(t) - t;
    const double t2 = t * t;
    double term = -t * t2 / 6.0;
    double sum = term;
    for (int n = 2; n < 30; ++n) {
        term *= -t2 / ((2.0 * n) * (2.0 * n + 1.0));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

// The numerators are Re and Im of sinh(wk) - wk with w = y + ix, so
//   kernel = [sum_{n>=1} w^{2n+1} k^{2n-2} / (2n+1)!] / [2 (sinh k / k)^2].
KernelRatio kernel_ratio_series(double k, double x, double y) {
    // w^3 / 3!
    const double w2_re = y * y - x * x;
    const double w2_im = 2.0 * x * y;
    double term_re = (w2_re * y - w2_im * x) / 6.0;
    double term_im = (w2_re * x + w2_im * y) / 6.0;
    // (wk)^2
    const double q_re = w2_re * k * k;
    const double q_im = w2_im * k * k;

    double sum_re = term_re;
    double sum_im = term_im;
    for (int n = 1; n < 80; ++n) {
        const double scale = 1.0 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
        const double next_re = (term_re * q_re - term_im * q_im) * scale;
        const double next_im = (term_re * q_im + term_im * q_re) * scale;
        term_re = next_re;
        term_im = next_im;
        sum_re += term_re;
        sum_im += term_im;
        const double size = std::abs(term_re) + std::abs(term_im);
        if (size <= 1e-18 * (std::abs(sum_re) + std::abs(sum_im)) || size == 0.0) break;
    }

    const double k2 = k * k;
    const double sinhc_sq = 1.0 + k2 * (1.0 / 3.0 + k2 * (2.0 / 45.0 + k2 / 315.0));
    const double denom = 2.0 * sinhc_sq;
    return KernelRatio{sum_re / denom, sum_im / denom};
}

KernelRatio kernel_ratio_direct(double k, double x, double y) {
    const double half_sin = std::sin(0.5 * x * k);
    const double half_sinh = std::sinh(0.5 * y * k);
    // cos(xk) sinh(yk) - yk = -2 sin^2(xk/2) sinh(yk) + (sinh(yk) - yk)
    const double re_num = -2.0 * half_sin * half_sin * std::sinh(y * k) + sinh_minus_identity(y * k);
    // sin(xk) cosh(yk) - xk = 2 sinh^2(yk/2) sin(xk) + (sin(xk) - xk)
    const double im_num = 2.0 * half_sinh * half_sinh * std::sin(x * k) + sin_minus_identity(x * k);
    const double sk = std::sinh(k);
    // cosh(2k) - 1 = 2 sinh^2(k)
    const double denom = 2.0 * k * sk * sk;
    return KernelRatio{re_num / denom, im_num / denom};
}

// Exact rewrite with 1/(k (cosh 2k - 1)) = 2 e^{-2k} / (k (1 - e^{-2k})^2).
KernelRatio kernel_ratio_asymptotic(double k, double x, double y) {
    const double ay = std::abs(y);
    const double grow = std::exp((ay - 2.0) * k);
    const double fall = std::exp(-(ay + 2.0) * k);
    const double e2 = std::exp(-2.0 * k);
    const double one_minus = -std::expm1(-2.0 * k);
    const double denom = k * one_minus * one_minus;
    const double sgn = (y > 0.0) ? 1.0 : ((y < 0.0) ? -1.0 : 0.0);
    const double re_num = std::cos(x * k) * sgn * (grow - fall) - 2.0 * y * k * e2;
    const double im_num = std::sin(x * k) * (grow + fall) - 2.0 * x * k * e2;
    return KernelRatio{re_num / denom, im_num / denom};
}

KernelRatio kernel_ratio(double k, double x, double y) {
    if (k < kSeriesThreshold) return kernel_ratio_series(k, x, y);
    if (k > kAsymptoticThreshold) return kernel_ratio_asymptotic(k, x, y);
    return kernel_ratio_direct(k, x, y);
}

namespace {

double decay_rate(const GammaParam& gamma, double y) {
    const double rate = gamma.two_over_gamma() + 2.0 - std::abs(y);
    if (!(rate > 0.0)) {
        throw DomainError("phase integral does not decay at |y| = 2 in the gamma -> infinity limit");
    }
    return rate;
}

}  // namespace

// For k >= 1: g <= 3 pi e^{-(2/g) k}, 2k sinh^2 k >= 0.374 k e^{2k}, and the
// numerators are bounded by e^{|y|k}/2 + |y|k (real) or e^{|y|k} + |x|k (imaginary).
DecayEnvelope re_envelope(const GammaParam& gamma, double /*x*/, double y) {
    return DecayEnvelope{8.0, decay_rate(gamma, y), 1.0};
}

DecayEnvelope im_envelope(const GammaParam& gamma, double x, double y) {
    return DecayEnvelope{8.1 * (1.0 + std::abs(x)), decay_rate(gamma, y), 1.0};
}

}  // namespace detail

double re_kernel(const GammaParam& gamma, double k, double x, double y) {
    return g_gamma(gamma, k) * detail::kernel_ratio(k, x, y).re;
}

double im_kernel(const GammaParam& gamma, double k, double x, double y) {
    return g_gamma(gamma, k) * detail::kernel_ratio(k, x, y).im;
}

IntegralResult re_theta(const GammaParam& gamma, double x, double y, const QuadSpec& spec) {
    const StripPoint z = StripPoint::make(x, y);
    const auto envelope = detail::re_envelope(gamma, z.x, z.y);
    const double inv_pi = 1.0 / std::numbers::pi;
    IntegralResult out = quad::integrate_semi_infinite(
        [&](double k) { return inv_pi * re_kernel(gamma, k, z.x, z.y); }, 0.0, envelope, spec);
    out.value = -out.value;
    return out;
}

IntegralResult im_theta(const GammaParam& gamma, double x, double y, const QuadSpec& spec) {
    const StripPoint z = StripPoint::make(x, y);
    const auto envelope = detail::im_envelope(gamma, z.x, z.y);
    const double inv_pi = 1.0 / std::numbers::pi;
    return quad::integrate_semi_infinite([&](double k) { return inv_pi * im_kernel(gamma, k, z.x, z.y); },
                                         0.0, envelope, spec);
}

PhaseValue theta(const GammaParam& gamma, StripPoint z, const QuadSpec& spec) {
    const IntegralResult re = re_theta(gamma, z.x, z.y, spec);
    const IntegralResult im = im_theta(gamma, z.x, z.y, spec);
    return PhaseValue{re.value, im.value, re.err_estimate + im.err_estimate, re.converged && im.converged};
}

IntegralResult re_theta_inf_line(double x, const QuadSpec& spec) {
    return re_theta(GammaParam::limit(), x, -1.0, spec);
}

}  // namespace sharp
