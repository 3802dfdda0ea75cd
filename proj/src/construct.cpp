#include "wmkit/construct.hpp"

#include "wmkit/errors.hpp"
#include "wmkit/numbertheory.hpp"
#include "wmkit/search.hpp"

namespace wmkit {

ConferenceWitness negacyclic_conference(int q) {
  if (q < 1 || !is_odd_prime_power(static_cast<std::uint64_t>(q)))
    throw NotOddPrimePowerError("negacyclic_conference: q must be an odd prime power");

  SearchOptions opts;
  opts.limit = 1;
  const SearchResult found = search_negacyclic(q + 1, q, opts);
  if (found.rows.empty())
    throw SearchExhaustedError("negacyclic_conference: no witness found (bug)");

  // The lex-first valid row is its own orbit minimum; canonicalize anyway and
  // verify everything the witness promises.
  const RowSpec row = canonicalize(found.rows.front(), ShiftRing::Negacyclic);
  const TernaryMatrix m = expand_negacyclic(row);
  VerificationReport report = gram_check(m);
  if (!report.is_weighing || report.weight != q || !is_negacyclic(m) ||
      row.nonzero_count() != q)
    throw Error("negacyclic_conference: witness failed verification (bug)");

  return {q, row, std::move(report)};
}

}  // namespace wmkit
