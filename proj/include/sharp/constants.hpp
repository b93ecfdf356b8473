#pragma once

// M_gamma and the CLR / LT bound factors derived from it.

#include "sharp/phase.hpp"
#include "sharp/quadrature.hpp"

namespace sharp {

/// Dimension d and operator power sigma of a fractional Schroedinger operator.
struct PhysicalQuery {
    int d = 1;
    double sigma = 1.0;

    /// Throws DomainError unless d >= 1 and sigma > 0.
    static PhysicalQuery make(int d, double sigma);
    double ratio() const { return static_cast<double>(d) / sigma; }
    /// gamma = d/sigma; throws DomainError if d/sigma <= 2.
    GammaParam clr_gamma() const;
    /// gamma = 2 + d/sigma.
    GammaParam lt_gamma() const;
};

struct BoundsReport {
    double gamma = 0.0;
    double m_gamma = 0.0;
    /// ||h_{-2/g}||_inf / (||h_0||_inf^{1-2/g} ||h_{-1}||_2^{2/g})
    double ratio = 0.0;
    double clr_factor = 0.0;
    double lt_factor = 0.0;
    double sup_interior = 0.0;
    double l2_line_sq = 0.0;
    /// Absolute error bound on m_gamma.
    double err_estimate = 0.0;
    bool converged = true;
    quad::QuadSpec spec_used;
};

/// Evaluates the optimizer norms once and everything that follows from them.
BoundsReport bounds_report(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// 16 pi (g-2)^{g-2} / g^{g+1} * sup_interior^g / l2_line_sq.
quad::IntegralResult m_gamma(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// (1/4) g^{g+1} (g-2)^{-(g-2)} M_g at g = d/sigma. Throws DomainError for d/sigma <= 2.
quad::IntegralResult clr_factor(const PhysicalQuery& query, const quad::QuadSpec& spec = {});

/// (1/4) g^{(g+2)/2} (g-2)^{-(g-4)/2} M_g at g = 2 + d/sigma.
quad::IntegralResult lt_factor(const PhysicalQuery& query, const quad::QuadSpec& spec = {});

/// (d/sigma) M_{2 + d/sigma}
quad::IntegralResult c_d_sigma(const PhysicalQuery& query, const quad::QuadSpec& spec = {});

/// 4 pi e^2 / int_R (x^2+9)/(x^2+1) exp(2 Re theta_inf(x - i)) dx, the d/sigma -> inf CLR limit.
quad::IntegralResult clr_asymptotic(const quad::QuadSpec& spec = {});

/// Closed-form constant C with inf_m {F^p + a ||m||^q} = C M^{pq/((g-2)p+q)}.
double scaling_constant(const GammaParam& gamma, double p, double q, double a);

/// CLR and LT factors for a known M at the same gamma (no quadrature).
double clr_factor_at(double gamma, double m);
double lt_factor_at(double gamma, double m);

namespace detail {

/// Above this gamma the power-law prefactors are evaluated in log space.
inline constexpr double kLogSpaceGamma = 50.0;

/// 16 pi (g-2)^{g-2} / g^{g+1}, evaluated directly.
double m_prefactor_direct(double gamma);
/// log of the same prefactor.
double m_prefactor_log(double gamma);

}  // namespace detail

}  // namespace sharp
