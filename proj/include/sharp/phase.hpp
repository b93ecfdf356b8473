#pragma once

// Phase function theta_gamma of the three-lines optimizer on the closed strip
// |Im z| <= 2, evaluated through its split real/imaginary k-integrals.

#include "sharp/quadrature.hpp"

namespace sharp {

/// The exponent gamma > 2, or the gamma -> infinity limit.
class GammaParam {
  public:
    static constexpr double kMin = 2.01;
    static constexpr double kMax = 1e6;

    /// Throws DomainError unless kMin <= gamma <= kMax.
    static GammaParam finite(double gamma);
    static GammaParam limit() { return GammaParam(); }

    bool is_limit() const { return limit_; }
    /// +inf for the limit.
    double value() const;
    /// 2/gamma, zero for the limit.
    double two_over_gamma() const { return two_over_gamma_; }
    /// Location of the Blaschke zero on the imaginary axis, 2 - 2/gamma.
    double zero_height() const { return 2.0 - two_over_gamma_; }

  private:
    GammaParam() = default;
    double gamma_ = 0.0;
    double two_over_gamma_ = 0.0;
    bool limit_ = true;
};

/// z = x + iy with |y| <= 2.
struct StripPoint {
    double x = 0.0;
    double y = 0.0;

    /// Throws DomainError if |y| > 2 or a coordinate is not finite.
    static StripPoint make(double x, double y);
};

struct PhaseValue {
    double re = 0.0;
    double im = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
};

/// pi (2 e^{-(2-2/g)|k|} + e^{-(2/g)|k|} - e^{-(4-2/g)|k|}); dispatches to g_inf for the limit.
double g_gamma(const GammaParam& gamma, double k);

/// pi (2 e^{-2|k|} + 1 - e^{-4|k|})
double g_inf(double k);

/// g(k) (cos(xk) sinh(yk) - yk) / (k (cosh 2k - 1)) for k > 0, finite as k -> 0.
double re_kernel(const GammaParam& gamma, double k, double x, double y);

/// g(k) (sin(xk) cosh(yk) - xk) / (k (cosh 2k - 1)) for k > 0, finite as k -> 0.
double im_kernel(const GammaParam& gamma, double k, double x, double y);

/// Re theta(x + iy) = -(1/pi) int_0^inf re_kernel dk.
quad::IntegralResult re_theta(const GammaParam& gamma, double x, double y, const quad::QuadSpec& spec = {});

/// Im theta(x + iy) = (1/pi) int_0^inf im_kernel dk; even in y.
quad::IntegralResult im_theta(const GammaParam& gamma, double x, double y, const quad::QuadSpec& spec = {});

PhaseValue theta(const GammaParam& gamma, StripPoint z, const quad::QuadSpec& spec = {});

/// Re theta_inf(x - i), the y = -1 slice of the limiting phase.
quad::IntegralResult re_theta_inf_line(double x, const quad::QuadSpec& spec = {});

/// Re theta(x + iy) - kGrowthSlope |x| y stays bounded on the strip; the slope is g(0)/4.
inline constexpr double kGrowthSlope = 1.5707963267948966;

namespace detail {

/// Below this k the kernels use their Taylor expansion in k.
inline constexpr double kSeriesThreshold = 1e-2;
/// Above this k the kernels use the overflow-free exponential form.
inline constexpr double kAsymptoticThreshold = 20.0;

struct KernelRatio {
    double re;
    double im;
};

/// Kernels without the g(k) weight, branch chosen by k.
KernelRatio kernel_ratio(double k, double x, double y);
KernelRatio kernel_ratio_series(double k, double x, double y);
KernelRatio kernel_ratio_direct(double k, double x, double y);
KernelRatio kernel_ratio_asymptotic(double k, double x, double y);

/// Envelopes for the (1/pi)-scaled integrands, valid for k >= 1.
quad::DecayEnvelope re_envelope(const GammaParam& gamma, double x, double y);
quad::DecayEnvelope im_envelope(const GammaParam& gamma, double x, double y);

}  // namespace detail

}  // namespace sharp
