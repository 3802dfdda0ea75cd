#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wmkit {

struct PrimeFactor {
  std::uint64_t prime = 0;
  int exponent = 0;

  bool operator==(const PrimeFactor&) const = default;
};

// Primes strictly increasing, exponents >= 1; the empty list factors 1.
struct Factorization {
  std::vector<PrimeFactor> factors;
};

// Trial division; inputs are desk scale, so nothing fancier is needed.
Factorization factor(std::uint64_t m);  // requires m >= 1

// (p, e) when m = p^e for a single prime p; nullopt otherwise. 1 is not a
// prime power.
std::optional<PrimeFactor> is_prime_power(std::uint64_t m);

// True when m = p^e with p an odd prime.
bool is_odd_prime_power(std::uint64_t m);

}  // namespace wmkit
