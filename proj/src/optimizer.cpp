#include "sharp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sharp/errors.hpp"

namespace sharp {

using quad::DecayEnvelope;
using quad::IntegralResult;
using quad::QuadSpec;

namespace {

void require_finite(const GammaParam& gamma) {
    if (gamma.is_limit()) throw DomainError("the optimizer is defined for finite gamma only");
}

// Re theta(x + iy) = kGrowthSlope |x| y + O(1). The O(1) part increases
// towards its limit in |x|; it is sampled past the transient and padded by one unit.
double growth_offset(const GammaParam& gamma, double y, const QuadSpec& spec) {
    double worst = -std::numeric_limits<double>::infinity();
    for (double x : {6.0, 10.0}) {
        const double r = re_theta(gamma, x, y, spec).value;
        worst = std::max(worst, r - kGrowthSlope * x * y);
    }
    return worst + 1.0;
}

struct InnerStats {
    double max_err = 0.0;
    bool converged = true;
    void record(const IntegralResult& r) {
        max_err = std::max(max_err, r.err_estimate);
        converged = converged && r.converged;
    }
};

// Integral over R of weight(x) * exp(power * Re theta(x + iy)) for an even
// weight bounded by weight(0). Inner-quadrature errors are folded into the
// outer estimate as power * max_inner_err * value.
template <class Weight>
IntegralResult weighted_phase_line(const GammaParam& gamma, double y, double power, Weight weight,
                                   const QuadSpec& spec) {
    const QuadSpec inner = spec.tightened(10.0);
    const double offset = growth_offset(gamma, y, inner);
    const DecayEnvelope envelope{weight(0.0) * std::exp(power * offset), power * kGrowthSlope * std::abs(y),
                                 0.0};
    InnerStats stats;
    IntegralResult out = quad::integrate_even_line(
        [&](double x) {
            const IntegralResult r = re_theta(gamma, x, y, inner);
            stats.record(r);
            return weight(x) * std::exp(power * r.value);
        },
        envelope, spec);
    out.err_estimate += power * stats.max_err * std::abs(out.value);
    out.converged = out.converged && stats.converged;
    return out;
}

}  // namespace

ComplexValue blaschke(const GammaParam& gamma, ComplexValue z) {
    const double a = gamma.zero_height();
    const ComplexValue zero{0.0, a};
    const ComplexValue pole{0.0, -a};
    const double gap = std::abs(z - pole);
    if (gap <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, a)) {
        throw PoleHit("Blaschke factor evaluated at its pole -i(2 - 2/gamma)");
    }
    return (z - zero) / (z - pole);
}

ComplexValue h_eval(const GammaParam& gamma, StripPoint z, const QuadSpec& spec) {
    require_finite(gamma);
    const ComplexValue b = blaschke(gamma, ComplexValue{z.x, z.y});
    const PhaseValue t = theta(gamma, z, spec);
    return b * std::exp(ComplexValue{t.re, t.im});
}

IntegralResult sup_norm_interior(const GammaParam& gamma, const QuadSpec& spec) {
    require_finite(gamma);
    const double t = gamma.two_over_gamma();
    IntegralResult r = re_theta(gamma, 0.0, -t, spec);
    const double value = std::exp(r.value) / (1.0 - t);
    r.value = value;
    r.err_estimate *= value;
    return r;
}

IntegralResult l2_norm_sq_line(const GammaParam& gamma, const QuadSpec& spec) {
    require_finite(gamma);
    const double t = gamma.two_over_gamma();
    const double num = (3.0 - t) * (3.0 - t);
    const double den = (1.0 - t) * (1.0 - t);
    return weighted_phase_line(
        gamma, -1.0, 2.0, [=](double x) { return (x * x + num) / (x * x + den); }, spec);
}

IntegralResult beta_constant(const GammaParam& gamma, const QuadSpec& spec) {
    require_finite(gamma);
    const double a = gamma.zero_height();
    IntegralResult re = re_theta(gamma, 0.0, -a, spec);
    const IntegralResult im = im_theta(gamma, 0.0, -a, spec);
    if (!(std::abs(im.value) < 1e-9)) {
        throw PhaseNotReal("theta(-i(2 - 2/gamma)) has a non-negligible imaginary part");
    }
    const double beta = std::exp(-re.value) / (4.0 * std::numbers::pi * a);
    re.value = beta;
    re.err_estimate = beta * (re.err_estimate + std::abs(im.value));
    re.converged = re.converged && im.converged;
    re.evaluations += im.evaluations;
    return re;
}

PrimalNorms primal_norms(const GammaParam& gamma, const QuadSpec& spec) {
    require_finite(gamma);
    const IntegralResult beta = beta_constant(gamma, spec);
    const double b = beta.value;
    const double rel_beta = beta.err_estimate / b;

    // |B(x - 2i)| and |B(x - i)|^2 straight from the complex factor.
    IntegralResult l1 = weighted_phase_line(
        gamma, -2.0, 1.0, [&](double x) { return std::abs(blaschke(gamma, ComplexValue{x, -2.0})); }, spec);
    IntegralResult l2 = weighted_phase_line(
        gamma, -1.0, 2.0, [&](double x) { return std::norm(blaschke(gamma, ComplexValue{x, -1.0})); }, spec);

    l1.value *= b;
    l1.err_estimate = l1.err_estimate * b + l1.value * rel_beta;
    l1.converged = l1.converged && beta.converged;
    l2.value *= b * b;
    l2.err_estimate = l2.err_estimate * b * b + 2.0 * l2.value * rel_beta;
    l2.converged = l2.converged && beta.converged;
    return PrimalNorms{l1, l2};
}

double f_gamma(const GammaParam& gamma, double x) {
    require_finite(gamma);
    const double t = gamma.two_over_gamma();
    if (x == 0.0) return std::numbers::pi;
    return 2.0 * std::atan((2.0 - t) / x) + std::atan(t / x) - std::atan((4.0 - t) / x);
}

OptimizerNorms optimizer_norms(const GammaParam& gamma, const QuadSpec& spec) {
    const IntegralResult sup = sup_norm_interior(gamma, spec);
    const IntegralResult l2 = l2_norm_sq_line(gamma, spec);
    OptimizerNorms out;
    out.sup_interior = sup.value;
    out.sup_boundary = 1.0;
    out.l2_line_sq = l2.value;
    out.err_estimate = sup.err_estimate + l2.err_estimate;
    out.converged = sup.converged && l2.converged;
    return out;
}

}  // namespace sharp
