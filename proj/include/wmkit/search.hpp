#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wmkit/classify.hpp"
#include "wmkit/matrix.hpp"

namespace wmkit {

enum class ShiftRing {
  Circulant,   // plain cyclic shift, wrap keeps its sign
  Negacyclic,  // wrap negated (Y^n = -I)
};

struct SearchOptions {
  bool count_only = false;      // count matches without materializing rows
  bool canonical_dedup = false; // keep one lex-min representative per orbit
  std::optional<std::uint64_t> limit;  // stop after this many results (>= 1)
};

// rows are strictly increasing in lexicographic order ('-' < '0' < '+') and
// duplicate-free. exhausted is false exactly when the limit cut the search
// short.
struct SearchResult {
  std::vector<RowSpec> rows;
  std::uint64_t count = 0;
  bool exhausted = true;
};

// Internal execution knobs. Results are identical for every setting; these
// exist for benchmarking and for the determinism tests. threads == 0 and
// prefix_depth < 0 mean "choose automatically". prune == false disables the
// branch-and-bound cuts and walks the full 3^n tree (slow, test use only).
struct SearchTuning {
  unsigned threads = 0;
  int prefix_depth = -1;
  bool prune = true;
};

// All length-n generator rows with exactly `weight` nonzero entries whose
// periodic (circulant) or negaperiodic (negacyclic) autocorrelation is flat.
// Backtracking over positions left to right, pruned by the remaining nonzero
// budget and by partial autocorrelation bounds. Deterministic output order
// regardless of internal parallelism: workers own disjoint fixed prefixes of
// the row and their results are concatenated in prefix order.
//
// Throws InfeasibleParametersError unless 1 <= weight <= order.
SearchResult search_rows(ShiftRing ring, int order, int weight,
                         const SearchOptions& opts = {}, const SearchTuning& tuning = {});

SearchResult search_circulant(int order, int weight, const SearchOptions& opts = {});
SearchResult search_negacyclic(int order, int weight, const SearchOptions& opts = {});

// Lexicographic minimum of the orbit of r under the ring's shift group
// together with global negation (for the negacyclic ring the n-th shift
// power already is global negation). Idempotent. Row reversal is
// deliberately not part of the group; counts are orbit counts under shifts
// and negation only.
RowSpec canonicalize(const RowSpec& r, ShiftRing ring);

struct ToeplitzWeighingItem {
  ToeplitzSpec spec;
  int weight = 0;
  Classification classification = Classification::Both;
};

// Exhaustive cap for enumerate_toeplitz_weighing: 3^(2n-1) expansions.
inline constexpr int kToeplitzEnumerationCap = 8;

// Walks all 3^(2n-1) Toeplitz specifications in lexicographic order of
// (first_row, first_col[1..]), keeps those whose expansion is a weighing
// matrix, and classifies each. Classification can never report mixed signs
// here; if it ever does, the resulting MixedSignsError propagates loudly.
// Throws CapExceededError for order > kToeplitzEnumerationCap.
std::vector<ToeplitzWeighingItem> enumerate_toeplitz_weighing(int order);

}  // namespace wmkit
