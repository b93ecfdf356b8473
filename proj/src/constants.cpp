#include "sharp/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sharp/errors.hpp"
#include "sharp/optimizer.hpp"

namespace sharp {

using quad::DecayEnvelope;
using quad::IntegralResult;
using quad::QuadSpec;

PhysicalQuery PhysicalQuery::make(int d, double sigma) {
    if (d < 1) throw DomainError("dimension d must be a positive integer");
    if (!std::isfinite(sigma) || !(sigma > 0.0)) throw DomainError("sigma must be > 0");
    return PhysicalQuery{d, sigma};
}

GammaParam PhysicalQuery::clr_gamma() const {
    if (!(ratio() > 2.0)) {
        throw DomainError("the CLR bound requires d/sigma > 2 (got d/sigma = " + std::to_string(ratio()) + ")");
    }
    return GammaParam::finite(ratio());
}

GammaParam PhysicalQuery::lt_gamma() const { return GammaParam::finite(2.0 + ratio()); }

namespace detail {

double m_prefactor_direct(double gamma) {
    return 16.0 * std::numbers::pi * std::pow(gamma - 2.0, gamma - 2.0) / std::pow(gamma, gamma + 1.0);
}

double m_prefactor_log(double gamma) {
    return std::log(16.0 * std::numbers::pi) + (gamma - 2.0) * std::log(gamma - 2.0) -
           (gamma + 1.0) * std::log(gamma);
}

}  // namespace detail

double clr_factor_at(double gamma, double m) {
    if (gamma > detail::kLogSpaceGamma) {
        const double log_pref = (gamma + 1.0) * std::log(gamma) - (gamma - 2.0) * std::log(gamma - 2.0);
        return 0.25 * std::exp(log_pref + std::log(m));
    }
    return 0.25 * std::pow(gamma, gamma + 1.0) / std::pow(gamma - 2.0, gamma - 2.0) * m;
}

double lt_factor_at(double gamma, double m) {
    if (gamma > detail::kLogSpaceGamma) {
        const double log_pref = 0.5 * (gamma + 2.0) * std::log(gamma) - 0.5 * (gamma - 4.0) * std::log(gamma - 2.0);
        return 0.25 * std::exp(log_pref + std::log(m));
    }
    return 0.25 * std::pow(gamma, 0.5 * (gamma + 2.0)) / std::pow(gamma - 2.0, 0.5 * (gamma - 4.0)) * m;
}

BoundsReport bounds_report(const GammaParam& gamma, const QuadSpec& spec) {
    if (gamma.is_limit()) throw DomainError("bounds_report needs a finite gamma; see clr_asymptotic");
    const double g = gamma.value();
    const IntegralResult sup = sup_norm_interior(gamma, spec);
    const IntegralResult l2 = l2_norm_sq_line(gamma, spec);

    BoundsReport out;
    out.gamma = g;
    out.sup_interior = sup.value;
    out.l2_line_sq = l2.value;
    out.ratio = sup.value * std::pow(l2.value, -1.0 / g);

    // M = prefactor * S^g / L, with first-order relative error g*dS/S + dL/L.
    if (g > detail::kLogSpaceGamma) {
        out.m_gamma = std::exp(detail::m_prefactor_log(g) + g * std::log(sup.value) - std::log(l2.value));
    } else {
        out.m_gamma = detail::m_prefactor_direct(g) * std::pow(sup.value, g) / l2.value;
    }
    const double rel = g * sup.err_estimate / sup.value + l2.err_estimate / l2.value;
    out.err_estimate = rel * out.m_gamma;
    out.clr_factor = clr_factor_at(g, out.m_gamma);
    out.lt_factor = lt_factor_at(g, out.m_gamma);
    out.converged = sup.converged && l2.converged;
    out.spec_used = spec;
    return out;
}

namespace {

IntegralResult scaled(const BoundsReport& report, double value) {
    IntegralResult r;
    r.value = value;
    r.err_estimate = report.err_estimate / report.m_gamma * value;
    r.converged = report.converged;
    return r;
}

}  // namespace

IntegralResult m_gamma(const GammaParam& gamma, const QuadSpec& spec) {
    const BoundsReport report = bounds_report(gamma, spec);
    return scaled(report, report.m_gamma);
}

IntegralResult clr_factor(const PhysicalQuery& query, const QuadSpec& spec) {
    const BoundsReport report = bounds_report(query.clr_gamma(), spec);
    return scaled(report, report.clr_factor);
}

IntegralResult lt_factor(const PhysicalQuery& query, const QuadSpec& spec) {
    const BoundsReport report = bounds_report(query.lt_gamma(), spec);
    return scaled(report, report.lt_factor);
}

IntegralResult c_d_sigma(const PhysicalQuery& query, const QuadSpec& spec) {
    const BoundsReport report = bounds_report(query.lt_gamma(), spec);
    return scaled(report, query.ratio() * report.m_gamma);
}

IntegralResult clr_asymptotic(const QuadSpec& spec) {
    const QuadSpec inner = spec.tightened(10.0);
    // Re theta_inf(x - i) + kGrowthSlope |x| is bounded; sample it to size the envelope.
    double offset = -1e300;
    for (double x : {6.0, 10.0}) {
        offset = std::max(offset, re_theta_inf_line(x, inner).value + kGrowthSlope * x);
    }
    offset += 1.0;
    const DecayEnvelope envelope{9.0 * std::exp(2.0 * offset), 2.0 * kGrowthSlope, 0.0};

    double max_inner_err = 0.0;
    bool inner_ok = true;
    IntegralResult integral = quad::integrate_even_line(
        [&](double x) {
            const IntegralResult r = re_theta_inf_line(x, inner);
            max_inner_err = std::max(max_inner_err, r.err_estimate);
            inner_ok = inner_ok && r.converged;
            return (x * x + 9.0) / (x * x + 1.0) * std::exp(2.0 * r.value);
        },
        envelope, spec);
    integral.err_estimate += 2.0 * max_inner_err * std::abs(integral.value);

    IntegralResult out = integral;
    out.value = 4.0 * std::numbers::pi * std::exp(2.0) / integral.value;
    out.err_estimate = out.value * integral.err_estimate / integral.value;
    out.converged = integral.converged && inner_ok;
    return out;
}

double scaling_constant(const GammaParam& gamma, double p, double q, double a) {
    if (gamma.is_limit()) throw DomainError("scaling_constant needs a finite gamma");
    if (!(p > 0.0) || !(q > 0.0) || !(a > 0.0)) throw DomainError("scaling_constant needs p, q, a > 0");
    const double s = (gamma.value() - 2.0) * p;
    const double denom = s + q;
    return std::pow(s / q, q / denom) * (q / s + 1.0) * std::pow(a, s / denom);
}

}  // namespace sharp
