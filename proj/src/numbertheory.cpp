#include "wmkit/numbertheory.hpp"

#include <stdexcept>

namespace wmkit {

Factorization factor(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factor: argument must be positive");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

std::optional<PrimeFactor> is_prime_power(std::uint64_t m) {
  const Factorization f = factor(m);
  if (f.factors.size() == 1) return f.factors.front();
  return std::nullopt;
}

bool is_odd_prime_power(std::uint64_t m) {
  const auto pp = is_prime_power(m);
  return pp.has_value() && pp->prime % 2 == 1;
}

}  // namespace wmkit
