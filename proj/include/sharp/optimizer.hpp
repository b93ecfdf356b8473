#pragma once

// The explicit maximizer h(z) = B(z) exp(theta(z)) of the three-lines problem,
// its boundary norms, and the primal minimizer m(z) = beta h(z - 2i).

#include <complex>

#include "sharp/phase.hpp"
#include "sharp/quadrature.hpp"

namespace sharp {

using ComplexValue = std::complex<double>;

struct OptimizerNorms {
    /// sup_x |h(x - 2i/gamma)|
    double sup_interior = 0.0;
    /// sup_x |h(x)|, identically 1.
    double sup_boundary = 1.0;
    /// int |h(x - i)|^2 dx
    double l2_line_sq = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
};

struct PrimalNorms {
    /// ||m_0||_{L^1} with m_0(x) = beta h(x - 2i)
    quad::IntegralResult l1_lower;
    /// ||m_1||^2_{L^2} with m_1(x) = beta h(x - i)
    quad::IntegralResult l2_sq_middle;
};

/// B(z) = (z - i(2 - 2/gamma)) / (z + i(2 - 2/gamma)). Throws PoleHit at the pole.
ComplexValue blaschke(const GammaParam& gamma, ComplexValue z);

/// B(z) exp(theta(z)). Throws PoleHit at z = -i(2 - 2/gamma).
ComplexValue h_eval(const GammaParam& gamma, StripPoint z, const quad::QuadSpec& spec = {});

/// |h(-2i/gamma)| = exp(Re theta(-2i/gamma)) / (1 - 2/gamma).
quad::IntegralResult sup_norm_interior(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// int_R (x^2 + (3-2/g)^2) / (x^2 + (1-2/g)^2) exp(2 Re theta(x - i)) dx.
/// The inner phase integrals run at a tolerance ten times tighter than `spec`.
quad::IntegralResult l2_norm_sq_line(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// beta = exp(-theta(-i(2 - 2/gamma))) / (4 pi (2 - 2/gamma)), the residue-matching constant.
/// Throws PhaseNotReal if the phase at that point has |Im| >= 1e-9.
quad::IntegralResult beta_constant(const GammaParam& gamma, const quad::QuadSpec& spec = {});

PrimalNorms primal_norms(const GammaParam& gamma, const quad::QuadSpec& spec = {});

/// 2 atan((2-2/g)/x) + atan((2/g)/x) - atan((4-2/g)/x); the one-sided limit pi at x = 0.
double f_gamma(const GammaParam& gamma, double x);

/// Both boundary norms entering the three-lines ratio; sup_boundary is exact.
OptimizerNorms optimizer_norms(const GammaParam& gamma, const quad::QuadSpec& spec = {});

}  // namespace sharp
