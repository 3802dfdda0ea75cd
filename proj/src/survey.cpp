#include "wmkit/survey.hpp"

#include "wmkit/errors.hpp"
#include "wmkit/numbertheory.hpp"
#include "wmkit/search.hpp"

namespace wmkit {

std::vector<SurveyRow> conference_survey(int max_order) {
  if (max_order < 3)
    throw InfeasibleParametersError("conference_survey: max order must be >= 3");
  if (max_order > kSurveyOrderCap)
    throw CapExceededError("conference_survey: max order exceeds desk-scale cap");

  SearchOptions first_only;
  first_only.limit = 1;

  std::vector<SurveyRow> table;
  table.reserve(static_cast<std::size_t>(max_order - 2));
  for (int n = 3; n <= max_order; ++n) {
    const SearchResult cw = search_circulant(n, n - 1, first_only);
    const SearchResult nw = search_negacyclic(n, n - 1, first_only);

    SurveyRow row;
    row.order = n;
    row.predicted = is_odd_prime_power(static_cast<std::uint64_t>(n - 1));
    row.cw_found = cw.count > 0;
    row.nw_found = nw.count > 0;
    row.exists = row.cw_found || row.nw_found;
    if (row.cw_found)
      row.witness = cw.rows.front();
    else if (row.nw_found)
      row.witness = nw.rows.front();
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace wmkit
