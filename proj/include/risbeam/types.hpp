// Shared aliases and error types for the risbeam library.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace risbeam {

using Index = Eigen::Index;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Argument or model parameter outside its admissible domain.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operation is undefined for the given PAS family.
class FamilyError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A numerical procedure failed to converge. Carries the correlation lag
/// being processed when the failure happened inside a per-lag integral
/// (-1 otherwise).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what, Index lag = -1)
        : std::runtime_error(what), lag_(lag) {}

    Index lag() const { return lag_; }

  private:
    Index lag_;
};

/// A correlation sequence produced an indefinite covariance matrix.
class InvalidCorrelationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated (e.g. a Hermitian quadratic form
/// evaluated to a visibly complex number).
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace risbeam
