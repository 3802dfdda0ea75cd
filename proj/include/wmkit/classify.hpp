#pragma once

#include <cstdint>
#include <vector>

#include "wmkit/matrix.hpp"

namespace wmkit {

// Wrap signs of a constant-diagonal weighing matrix: for each row i in 2..n,
// the sign eps_i with a_{i-1,n} = eps_i * a_{i,1}, or undefined when both
// wrap entries are zero. For such a matrix the defined signs always agree,
// which is what makes the classification below a decision procedure.
struct WrapSignProfile {
  // signs[i-2] holds eps_i: +1, -1, or 0 for undefined.
  std::vector<std::int8_t> signs;

  bool all_undefined() const {
    for (std::int8_t s : signs)
      if (s != 0) return false;
    return true;
  }
};

enum class Classification {
  Circulant,
  Negacyclic,
  Both,  // every wrap pair is (0, 0); the matrix is simultaneously both
};

const char* to_string(Classification c);

// Throws MagnitudeMismatchError when |a_{i,1}| != |a_{i-1,n}| for some i,
// which signals that the input was not a constant-diagonal weighing matrix.
WrapSignProfile wrap_sign_profile(const TernaryMatrix& a);

// Decision procedure for constant-diagonal weighing matrices. Preconditions
// are checked, not trusted (the CLI feeds untrusted files): throws
// NotToeplitzError or NotWeighingError on bad input. MixedSignsError is
// never reached for valid input; it is an error rather than a verdict so
// that an implementation bug cannot masquerade as a classification.
Classification classify_toeplitz_weighing(const TernaryMatrix& a);

}  // namespace wmkit
