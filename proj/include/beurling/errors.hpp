#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

/// Operand dimensions disagree (body vs. point, function vs. window, ...).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grid, point set, or LP would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inputs do not satisfy the hypothesis of the check being run.  Callers
/// treat this as "skipped", never as a falsification.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Probe window and materialization window are incompatible.
class ProbeWindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace beurling
