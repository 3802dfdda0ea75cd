#pragma once

#include <stdexcept>
#include <string>

namespace wmkit {

// Base class for all library-specific failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected matrix text or rowspec token.
struct FormatError : Error {
  using Error::Error;
};

// Wrap entries a_{i,1} and a_{i-1,n} differ in magnitude; the input was not a
// constant-diagonal weighing matrix.
struct MagnitudeMismatchError : Error {
  using Error::Error;
};

// Classification rejections.
struct NotToeplitzError : Error {
  using Error::Error;
};
struct NotWeighingError : Error {
  using Error::Error;
};

// Defined wrap signs disagree. Unreachable for a genuine constant-diagonal
// weighing matrix; reaching it means a bug somewhere.
struct MixedSignsError : Error {
  using Error::Error;
};

// Search parameters outside 1 <= k <= n, or a survey bound below 3.
struct InfeasibleParametersError : Error {
  using Error::Error;
};

// Requested order beyond the documented exhaustive cap.
struct CapExceededError : Error {
  using Error::Error;
};

struct NotOddPrimePowerError : Error {
  using Error::Error;
};

// No conference witness found where one is guaranteed to exist.
struct SearchExhaustedError : Error {
  using Error::Error;
};

}  // namespace wmkit
