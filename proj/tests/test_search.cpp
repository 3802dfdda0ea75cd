#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wmkit/errors.hpp"
#include "wmkit/io.hpp"
#include "wmkit/search.hpp"

using namespace wmkit;

namespace {

std::vector<std::string> row_strings(const SearchResult& r) {
  std::vector<std::string> out;
  for (const auto& row : r.rows) out.push_back(to_rowspec_string(row));
  return out;
}

}  // namespace

TEST_CASE("search rejects infeasible parameters") {
  CHECK_THROWS_AS(search_circulant(4, 0), InfeasibleParametersError);
  CHECK_THROWS_AS(search_circulant(4, 5), InfeasibleParametersError);
  CHECK_THROWS_AS(search_negacyclic(0, 1), InfeasibleParametersError);
  SearchOptions zero_limit;
  zero_limit.limit = 0;
  CHECK_THROWS_AS(search_circulant(4, 4, zero_limit), InfeasibleParametersError);
}

TEST_CASE("circulant weight-4 rows of order 4") {
  const auto result = search_circulant(4, 4);
  CHECK(result.count == 8);
  CHECK(result.exhausted);
  CHECK(row_strings(result) == std::vector<std::string>{"---+", "--+-", "-+--", "-+++", "+---",
                                                        "+-++", "++-+", "+++-"});
}

TEST_CASE("no circulant conference rows at small even orders") {
  for (int n : {4, 6, 8}) {
    const auto result = search_circulant(n, n - 1);
    CHECK(result.count == 0);
    CHECK(result.exhausted);
  }
}

TEST_CASE("negacyclic conference rows exist where promised") {
  const auto nw43 = search_negacyclic(4, 3);
  CHECK(nw43.count > 0);
  const auto strings = row_strings(nw43);
  CHECK(std::find(strings.begin(), strings.end(), "0++-") != strings.end());

  CHECK(search_negacyclic(6, 5).count > 0);
}

TEST_CASE("search equals the brute-force filter for n <= 5, every weight, both rings") {
  for (ShiftRing ring : {ShiftRing::Circulant, ShiftRing::Negacyclic}) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto expected = oracles::brute_ring_rows(ring, n, k);
        const auto got = search_rows(ring, n, k);
        CHECK(got.rows == expected);
        CHECK(got.count == expected.size());
        CHECK(got.exhausted);
      }
    }
  }
}

TEST_CASE("pruning does not change results (n <= 5)") {
  SearchTuning no_prune;
  no_prune.threads = 1;
  no_prune.prune = false;
  for (ShiftRing ring : {ShiftRing::Circulant, ShiftRing::Negacyclic}) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto pruned = search_rows(ring, n, k);
        const auto full = search_rows(ring, n, k, {}, no_prune);
        CHECK(pruned.rows == full.rows);
        CHECK(pruned.count == full.count);
      }
    }
  }
}

TEST_CASE("every returned row expands to a weighing matrix of the requested weight") {
  const auto result = search_circulant(7, 4);
  CHECK(result.count > 0);
  for (const auto& row : result.rows) {
    const auto rep = gram_check(expand_circulant(row));
    CHECK(rep.is_weighing);
    CHECK(rep.weight == 4);
  }
  const auto nega = search_negacyclic(10, 9);
  CHECK(nega.count > 0);
  for (const auto& row : nega.rows) {
    const auto rep = gram_check(expand_negacyclic(row));
    CHECK(rep.is_weighing);
    CHECK(rep.weight == 9);
  }
}

TEST_CASE("identical results for every parallel partitioning") {
  const auto reference = search_rows(ShiftRing::Negacyclic, 10, 9);
  CHECK(reference.count > 0);
  for (unsigned threads : {1u, 2u, 4u}) {
    for (int depth : {-1, 1, 2, 3}) {
      SearchTuning tuning;
      tuning.threads = threads;
      tuning.prefix_depth = depth;
      const auto run = search_rows(ShiftRing::Negacyclic, 10, 9, {}, tuning);
      CHECK(run.rows == reference.rows);
      CHECK(run.count == reference.count);
    }
  }
  // repeated runs are byte-identical
  CHECK(search_rows(ShiftRing::Negacyclic, 10, 9).rows == reference.rows);
}

TEST_CASE("count_only counts without materializing rows") {
  SearchOptions opts;
  opts.count_only = true;
  const auto counted = search_circulant(4, 4, opts);
  CHECK(counted.count == 8);
  CHECK(counted.rows.empty());
}

TEST_CASE("limit truncates deterministically") {
  const auto full = search_negacyclic(4, 3);
  SearchOptions opts;
  opts.limit = 3;
  const auto truncated = search_negacyclic(4, 3, opts);
  CHECK(truncated.count == 3);
  CHECK_FALSE(truncated.exhausted);
  REQUIRE(truncated.rows.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(truncated.rows[static_cast<std::size_t>(i)] == full.rows[static_cast<std::size_t>(i)]);

  opts.limit = full.count + 10;
  const auto generous = search_negacyclic(4, 3, opts);
  CHECK(generous.exhausted);
  CHECK(generous.count == full.count);
}

TEST_CASE("canonicalize picks the lex minimum of the orbit") {
  const RowSpec a = parse_rowspec_string("+++-");
  const RowSpec b = parse_rowspec_string("++-+");
  CHECK(canonicalize(a, ShiftRing::Circulant) == canonicalize(b, ShiftRing::Circulant));
  CHECK(to_rowspec_string(canonicalize(a, ShiftRing::Circulant)) == "---+");

  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const RowSpec r(oracles::random_ternary(rng, 1 + trial % 8));
    for (ShiftRing ring : {ShiftRing::Circulant, ShiftRing::Negacyclic}) {
      const RowSpec once = canonicalize(r, ring);
      CHECK(canonicalize(once, ring) == once);  // idempotent
      CHECK(once <= r);
    }
  }
}

TEST_CASE("negacyclic orbit of 0++- has size dividing 2*(2n)") {
  RowSpec r = parse_rowspec_string("0++-");
  std::set<std::vector<std::int8_t>> orbit;
  std::vector<std::int8_t> cur = r.entries();
  for (int i = 0; i < 2 * r.size(); ++i) {
    orbit.insert(cur);
    std::vector<std::int8_t> next(cur.size());
    next[0] = static_cast<std::int8_t>(-cur.back());
    std::copy(cur.begin(), cur.end() - 1, next.begin() + 1);
    cur = std::move(next);
  }
  CHECK(cur == r.entries());  // the shift has order dividing 2n
  CHECK(orbit.size() == 8);
  CHECK((2 * (2 * r.size())) % orbit.size() == 0);
}

TEST_CASE("canonical dedup keeps one representative per orbit") {
  SearchOptions opts;
  opts.canonical_dedup = true;

  const auto cw44 = search_circulant(4, 4, opts);
  CHECK(cw44.count == 1);  // all 8 raw rows form a single orbit
  CHECK(to_rowspec_string(cw44.rows.front()) == "---+");

  const auto nw43 = search_negacyclic(4, 3, opts);
  CHECK(nw43.count == 2);  // two orbits of size 8 cover the 16 raw rows
  CHECK(row_strings(nw43) == std::vector<std::string>{"--0-", "--+0"});

  // every kept row is its own canonical form, and expanding the kept
  // orbits reproduces the raw count
  const auto raw = search_negacyclic(4, 3);
  CHECK(raw.count == 16);
  for (const auto& row : nw43.rows) CHECK(canonicalize(row, ShiftRing::Negacyclic) == row);
}

TEST_CASE("toeplitz enumeration rejects out-of-range orders") {
  CHECK_THROWS_AS(enumerate_toeplitz_weighing(0), InfeasibleParametersError);
  CHECK_THROWS_AS(enumerate_toeplitz_weighing(kToeplitzEnumerationCap + 1), CapExceededError);
}

TEST_CASE("toeplitz enumeration matches the circulant search (n <= 7)") {
  for (int n = 1; n <= 7; ++n) {
    std::map<int, std::vector<RowSpec>> circulant_rows_by_weight;
    for (const auto& item : enumerate_toeplitz_weighing(n)) {
      if (item.classification == Classification::Circulant ||
          item.classification == Classification::Both)
        circulant_rows_by_weight[item.weight].push_back(RowSpec(item.spec.first_row()));
    }
    for (int k = 1; k <= n; ++k) {
      auto& rows = circulant_rows_by_weight[k];
      std::sort(rows.begin(), rows.end());
      CHECK(rows == search_circulant(n, k).rows);
    }
  }
}
