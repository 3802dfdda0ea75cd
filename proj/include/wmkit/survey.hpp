#pragma once

#include <optional>
#include <vector>

#include "wmkit/matrix.hpp"

namespace wmkit {

// One order of the conference-matrix existence table. `predicted` is the
// prime-power condition on n-1; `exists` is what the searches actually
// found. The two agree throughout the supported range, and cw_found stays
// false for every n >= 3: the survey re-derives both facts instead of
// assuming them, doubling as a regression test of the search kernels.
struct SurveyRow {
  int order = 0;
  bool predicted = false;
  bool cw_found = false;
  bool nw_found = false;
  bool exists = false;  // cw_found || nw_found
  std::optional<RowSpec> witness;
};

// Runtime grows roughly like 3^n; 20 is already patience-testing.
inline constexpr int kSurveyOrderCap = 20;

// For each n in 3..max_order, searches CW(n, n-1) and NW(n, n-1); the
// searches stop at the first witness and are exhaustive when none exists.
// Throws InfeasibleParametersError for max_order < 3 and CapExceededError
// beyond kSurveyOrderCap.
std::vector<SurveyRow> conference_survey(int max_order);

}  // namespace wmkit
