#pragma once

// Checks on M_gamma that do not go through the M_gamma pipeline itself.

#include <string>
#include <vector>

#include "sharp/phase.hpp"
#include "sharp/quadrature.hpp"

namespace sharp {

/// Below this gamma the phase integrals lose accuracy and reports carry a warning.
inline constexpr double kConditioningGamma = 2.05;

/// |Im theta(x - 2i) - Im theta(x) + f_gamma(x) + pi sign(-x)| + |Re theta(x)|.
/// Throws DomainError for x == 0 or the limit gamma.
quad::IntegralResult el_residual(const GammaParam& gamma, double x, const quad::QuadSpec& spec = {});

/// ((4 pi / gamma) ||m_0||_1^{gamma-2} ||m_1||_2^2 - M_gamma) / M_gamma.
quad::IntegralResult duality_gap(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// 8 / (gamma (gamma^2 - 4)), from the Lorentzian trial in the primal problem.
double lorentzian_upper(const GammaParam& gamma);

/// Lower bound from the trial h(z) = 1/(z + ic). Throws DomainError unless c > 1.
double trial_lower(const GammaParam& gamma, double c = 3.0);

/// c values swept by the lower sandwich.
const std::vector<double>& trial_c_grid();

struct LowGammaDiagnostic {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
    /// Set for gamma <= kConditioningGamma.
    bool conditioning_warning = false;
};

/// 4 pi (g-2)^{g/2} g^{-g/2} sup_interior^g / l2_line_sq for 2 < gamma <= 3; tends to 1 as gamma -> 2.
LowGammaDiagnostic low_gamma_diagnostic(const GammaParam& gamma, const quad::QuadSpec& spec = {});

struct VerificationReport {
    double gamma = 0.0;
    double m_gamma = 0.0;
    /// Absolute error bound on m_gamma.
    double err_estimate = 0.0;
    double el_residual_max = 0.0;
    /// x at which el_residual_max was attained.
    double el_residual_argmax = 0.0;
    double duality_gap_rel = 0.0;
    double lower_sandwich = 0.0;
    double upper_sandwich = 0.0;
    /// Only filled for gamma <= 3.
    bool has_low_gamma = false;
    double low_gamma_value = 0.0;
    bool conditioning_warning = false;
    bool converged = true;
    bool pass = false;
    /// Names of the checks that failed.
    std::vector<std::string> failures;
};

struct VerifyTolerances {
    double el_tol = 1e-6;
    double gap_tol = 1e-5;
};

/// x points for the Euler-Lagrange sweep.
const std::vector<double>& el_sample_points();

VerificationReport run_verification(const GammaParam& gamma, const quad::QuadSpec& spec = {},
                                    const VerifyTolerances& tol = {});

}  // namespace sharp
