#pragma once

#include <stdexcept>

namespace powmean {

// Invalid parameters or malformed input (bad exponent range, empty sample,
// unparsable file). CLI exit code 2.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A theorem precondition does not hold for the requested computation:
// divergent-variance regimes, non-integrable estimators, poles hit by data,
// degenerate moment systems. CLI exit code 3.
struct regime_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace powmean
