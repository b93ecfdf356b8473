#pragma once

// Adaptive Gauss-Kronrod (7/15) integration over finite and exponentially
// decaying semi-infinite ranges.

#include <functional>

namespace sharp::quad {

struct QuadSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    /// Multiplier on the analytic tail-cutoff length.
    double tail_safety = 1.5;

    /// Throws std::invalid_argument when any field is out of range.
    void validate() const;

    /// Same spec with both tolerances divided by `factor`.
    QuadSpec tightened(double factor) const;

    /// max(abs_tol, rel_tol * |value|)
    double target(double value) const;
};

struct IntegralResult {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
    long evaluations = 0;
};

/// Caller's promise that |f(a + s)| <= amplitude * exp(-rate * s) for s >= onset.
struct DecayEnvelope {
    double amplitude = 1.0;
    double rate = 1.0;
    double onset = 0.0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive bisection with a 15-point Kronrod rule; the error estimate
/// is the summed |K15 - G7| difference over the final partition. Budget
/// exhaustion is reported through `converged = false`, not an exception.
/// Throws NonFiniteError if f is NaN/inf at a node, std::invalid_argument if a >= b.
IntegralResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec = {});

/// Integral over [a, inf): truncated where the envelope tail drops below the
/// tolerance budget; the analytic tail bound is added to err_estimate.
IntegralResult integrate_semi_infinite(const Integrand& f, double a, const DecayEnvelope& envelope,
                                       const QuadSpec& spec = {});

/// Integral of an even function over the whole line, 2 * [0, inf).
IntegralResult integrate_even_line(const Integrand& f, const DecayEnvelope& envelope,
                                   const QuadSpec& spec = {});

/// Truncation point used by integrate_semi_infinite.
double truncation_point(double a, const DecayEnvelope& envelope, const QuadSpec& spec);

}  // namespace sharp::quad
