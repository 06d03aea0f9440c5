#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace infoatom {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function was called outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or physically inconsistent basis data.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// Statistical layer failures (degenerate samples, missing columns, bad files).
class AnalysisError : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not converge or hit a non-finite integrand value.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double best_estimate,
                   std::optional<double> abscissa = std::nullopt)
      : Error(what), best_estimate_(best_estimate), abscissa_(abscissa) {}

  double best_estimate() const noexcept { return best_estimate_; }
  /// Set when the failure was caused by a non-finite integrand value.
  std::optional<double> abscissa() const noexcept { return abscissa_; }

 private:
  double best_estimate_;
  std::optional<double> abscissa_;
};

}  // namespace infoatom
