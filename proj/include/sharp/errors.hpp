#pragma once

#include <stdexcept>
#include <string>

namespace sharp {

/// A parameter lies outside the domain where a formula is defined or supported.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An integrand returned NaN or infinity at a quadrature node.
class NonFiniteError : public std::runtime_error {
  public:
    NonFiniteError(const std::string& what, double at)
        : std::runtime_error(what), node_(at) {}
    double node() const noexcept { return node_; }

  private:
    double node_;
};

class InvalidEnvelope : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested at (or numerically on top of) the pole of the Blaschke factor.
class PoleHit : public DomainError {
  public:
    using DomainError::DomainError;
};

/// The phase at a point on the imaginary axis came out with a non-negligible imaginary part.
class PhaseNotReal : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace sharp
