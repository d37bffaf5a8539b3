#pragma once

#include <stdexcept>
#include <string>

namespace aol {

/// Invalid grid, filter, band, ladder or document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model state that violates its own invariants (e.g. B on a non-MHD kind).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fit requested on a table with fewer than two usable (positive) samples.
class DegenerateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite state or an energy jump beyond the blow-up threshold.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace aol
