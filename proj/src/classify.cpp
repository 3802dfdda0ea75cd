#include "wmkit/classify.hpp"

#include <cstdlib>

#include "wmkit/errors.hpp"

namespace wmkit {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Circulant: return "CIRCULANT";
    case Classification::Negacyclic: return "NEGACYCLIC";
    case Classification::Both: return "BOTH";
  }
  return "?";
}

WrapSignProfile wrap_sign_profile(const TernaryMatrix& a) {
  const int n = a.order();
  WrapSignProfile profile;
  profile.signs.assign(n > 0 ? static_cast<std::size_t>(n - 1) : 0, 0);
  for (int i = 1; i < n; ++i) {
    const int head = a.at(i, 0);       // a_{i+1,1} in 1-based terms
    const int tail = a.at(i - 1, n - 1);  // a_{i,n}
    if (head == 0 && tail == 0) continue;
    if (std::abs(head) != std::abs(tail))
      throw MagnitudeMismatchError("wrap_sign_profile: wrap entries differ in magnitude");
    // head and tail are both +-1 here, so tail/head == tail*head.
    profile.signs[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(head * tail);
  }
  return profile;
}

Classification classify_toeplitz_weighing(const TernaryMatrix& a) {
  if (!is_constant_diagonal(a))
    throw NotToeplitzError("classify: matrix does not have constant diagonals");
  if (!gram_check(a).is_weighing)
    throw NotWeighingError("classify: matrix is not a weighing matrix");

  const WrapSignProfile profile = wrap_sign_profile(a);
  bool any_plus = false;
  bool any_minus = false;
  for (std::int8_t s : profile.signs) {
    any_plus = any_plus || s > 0;
    any_minus = any_minus || s < 0;
  }
  if (any_plus && any_minus)
    throw MixedSignsError("classify: defined wrap signs disagree (implementation bug)");
  if (any_plus) return Classification::Circulant;
  if (any_minus) return Classification::Negacyclic;
  return Classification::Both;
}

}  // namespace wmkit
