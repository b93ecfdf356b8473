#include "sharp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sharp/constants.hpp"
#include "sharp/errors.hpp"
#include "sharp/optimizer.hpp"

namespace sharp {

using quad::IntegralResult;
using quad::QuadSpec;

IntegralResult el_residual(const GammaParam& gamma, double x, const QuadSpec& spec) {
    if (gamma.is_limit()) throw DomainError("el_residual needs a finite gamma");
    if (x == 0.0 || !std::isfinite(x)) throw DomainError("el_residual needs a finite x != 0");
    const IntegralResult im_low = im_theta(gamma, x, -2.0, spec);
    const IntegralResult im_real = im_theta(gamma, x, 0.0, spec);
    const IntegralResult re_real = re_theta(gamma, x, 0.0, spec);
    const double branch = x > 0.0 ? -std::numbers::pi : std::numbers::pi;

    IntegralResult out;
    out.value = std::abs(im_low.value - im_real.value + f_gamma(gamma, x) + branch) + std::abs(re_real.value);
    out.err_estimate = im_low.err_estimate + im_real.err_estimate + re_real.err_estimate;
    out.converged = im_low.converged && im_real.converged && re_real.converged;
    out.evaluations = im_low.evaluations + im_real.evaluations + re_real.evaluations;
    return out;
}

namespace {

IntegralResult gap_against(const GammaParam& gamma, const IntegralResult& m, const QuadSpec& spec) {
    const double g = gamma.value();
    const PrimalNorms primal = primal_norms(gamma, spec);
    const double l1 = primal.l1_lower.value;
    const double l2 = primal.l2_sq_middle.value;
    const double value = 4.0 * std::numbers::pi / g * std::pow(l1, g - 2.0) * l2;

    IntegralResult out;
    out.value = (value - m.value) / m.value;
    const double rel_primal =
        (g - 2.0) * primal.l1_lower.err_estimate / l1 + primal.l2_sq_middle.err_estimate / l2;
    out.err_estimate = (value / m.value) * (rel_primal + m.err_estimate / m.value);
    out.converged = primal.l1_lower.converged && primal.l2_sq_middle.converged && m.converged;
    return out;
}

}  // namespace

IntegralResult duality_gap(const GammaParam& gamma, const QuadSpec& spec) {
    if (gamma.is_limit()) throw DomainError("duality_gap needs a finite gamma");
    return gap_against(gamma, m_gamma(gamma, spec), spec);
}

double lorentzian_upper(const GammaParam& gamma) {
    if (gamma.is_limit()) throw DomainError("lorentzian_upper needs a finite gamma");
    const double g = gamma.value();
    return 8.0 / (g * (g * g - 4.0));
}

double trial_lower(const GammaParam& gamma, double c) {
    if (gamma.is_limit()) throw DomainError("trial_lower needs a finite gamma");
    if (!std::isfinite(c) || !(c > 1.0)) throw DomainError("trial_lower needs c > 1");
    const double g = gamma.value();
    const double t = gamma.two_over_gamma();
    const double log_ratio = (1.0 - t) * std::log(c) + std::log((c - 1.0) / std::numbers::pi) / g - std::log(c - t);
    return std::exp(detail::m_prefactor_log(g) + g * log_ratio);
}

const std::vector<double>& trial_c_grid() {
    static const std::vector<double> grid{1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0};
    return grid;
}

LowGammaDiagnostic low_gamma_diagnostic(const GammaParam& gamma, const QuadSpec& spec) {
    if (gamma.is_limit() || gamma.value() > 3.0) {
        throw DomainError("low_gamma_diagnostic is defined for 2 < gamma <= 3");
    }
    const double g = gamma.value();
    const IntegralResult sup = sup_norm_interior(gamma, spec);
    const IntegralResult l2 = l2_norm_sq_line(gamma, spec);

    LowGammaDiagnostic out;
    out.value = 4.0 * std::numbers::pi * std::pow((g - 2.0) / g, 0.5 * g) * std::pow(sup.value, g) / l2.value;
    out.err_estimate = out.value * (g * sup.err_estimate / sup.value + l2.err_estimate / l2.value);
    out.converged = sup.converged && l2.converged;
    out.conditioning_warning = g <= kConditioningGamma;
    return out;
}

const std::vector<double>& el_sample_points() {
    static const std::vector<double> points{-20.0, -10.0, -5.0, -2.0, -1.0, -0.5, -0.1,
                                            0.1,   0.5,   1.0,  2.0,  5.0,  10.0, 20.0};
    return points;
}

VerificationReport run_verification(const GammaParam& gamma, const QuadSpec& spec, const VerifyTolerances& tol) {
    if (gamma.is_limit()) throw DomainError("run_verification needs a finite gamma");
    VerificationReport rep;
    rep.gamma = gamma.value();
    rep.conditioning_warning = rep.gamma <= kConditioningGamma;

    const BoundsReport bounds = bounds_report(gamma, spec);
    rep.m_gamma = bounds.m_gamma;
    rep.err_estimate = bounds.err_estimate;
    rep.converged = bounds.converged;

    for (double x : el_sample_points()) {
        const IntegralResult r = el_residual(gamma, x, spec);
        rep.converged = rep.converged && r.converged;
        if (r.value > rep.el_residual_max) {
            rep.el_residual_max = r.value;
            rep.el_residual_argmax = x;
        }
    }

    IntegralResult m;
    m.value = bounds.m_gamma;
    m.err_estimate = bounds.err_estimate;
    m.converged = bounds.converged;
    const IntegralResult gap = gap_against(gamma, m, spec);
    rep.duality_gap_rel = gap.value;
    rep.converged = rep.converged && gap.converged;

    rep.upper_sandwich = lorentzian_upper(gamma);
    rep.lower_sandwich = 0.0;
    for (double c : trial_c_grid()) rep.lower_sandwich = std::max(rep.lower_sandwich, trial_lower(gamma, c));

    if (rep.gamma <= 3.0) {
        rep.has_low_gamma = true;
        rep.low_gamma_value = lt_factor_at(rep.gamma, bounds.m_gamma);
    }

    if (!(rep.el_residual_max < tol.el_tol)) rep.failures.emplace_back("el_residual");
    if (!(std::abs(rep.duality_gap_rel) < tol.gap_tol)) rep.failures.emplace_back("duality_gap");
    if (!(rep.lower_sandwich <= rep.m_gamma)) rep.failures.emplace_back("lower_sandwich");
    if (!(rep.m_gamma <= rep.upper_sandwich)) rep.failures.emplace_back("upper_sandwich");
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace sharp
