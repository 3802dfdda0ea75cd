#include "wmkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <thread>
#include <utility>

#include "wmkit/errors.hpp"

namespace wmkit {

namespace {

constexpr std::int8_t kSymbols[3] = {-1, 0, 1};  // lex order '-' < '0' < '+'

std::uint64_t pow3(int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

std::vector<std::int8_t> shifted_once(const std::vector<std::int8_t>& v, int wrap_sign) {
  const std::size_t n = v.size();
  std::vector<std::int8_t> out(n);
  out[0] = static_cast<std::int8_t>(wrap_sign * v[n - 1]);
  for (std::size_t j = 1; j < n; ++j) out[j] = v[j - 1];
  return out;
}

// One backtracking searcher. corr_[s] is the partial autocorrelation at
// shift s over the products whose two indices are both assigned; a product
// (j, j+s mod n) becomes known when the larger index is assigned, so
// assigning position t adds r[t-s]*r[t] for s <= t and, for the wrapped
// products, sign * r[t] * r[t+s-n] for s >= n-t.
class RowSearcher {
 public:
  RowSearcher(ShiftRing ring, int n, int k, const SearchOptions& opts, bool prune)
      : ring_(ring),
        wrap_sign_(ring == ShiftRing::Circulant ? 1 : -1),
        n_(n),
        k_(k),
        prune_(prune),
        opts_(opts),
        row_(static_cast<std::size_t>(n), 0),
        corr_(static_cast<std::size_t>(n), 0) {}

  // Fixes row_[0..prefix_len) from the base-3 digits of prefix_index
  // (most significant digit first). Returns false when the prefix itself is
  // pruned, i.e. the sequential search would never reach it.
  bool seed_prefix(std::uint64_t prefix_index, int prefix_len) {
    for (int t = 0; t < prefix_len; ++t) {
      const auto digit =
          static_cast<int>(prefix_index / pow3(prefix_len - 1 - t) % 3);
      assign(t, kSymbols[digit]);
      if (prune_ && !viable(t + 1)) return false;
    }
    depth_ = prefix_len;
    return true;
  }

  // Exhausts the subtree below the seeded prefix. Returns false when the
  // result limit stopped the walk.
  bool run() { return dfs(depth_); }

  std::vector<RowSpec>& rows() { return rows_; }
  std::uint64_t count() const { return count_; }

 private:
  void assign(int t, std::int8_t v) {
    row_[static_cast<std::size_t>(t)] = v;
    nonzeros_ += (v != 0);
    for (int s = 1; s <= t; ++s) corr_[static_cast<std::size_t>(s)] += row_[static_cast<std::size_t>(t - s)] * v;
    for (int s = std::max(1, n_ - t); s < n_; ++s)
      corr_[static_cast<std::size_t>(s)] += wrap_sign_ * v * row_[static_cast<std::size_t>(t + s - n_)];
  }

  void unassign(int t) {
    const std::int8_t v = row_[static_cast<std::size_t>(t)];
    for (int s = 1; s <= t; ++s) corr_[static_cast<std::size_t>(s)] -= row_[static_cast<std::size_t>(t - s)] * v;
    for (int s = std::max(1, n_ - t); s < n_; ++s)
      corr_[static_cast<std::size_t>(s)] -= wrap_sign_ * v * row_[static_cast<std::size_t>(t + s - n_)];
    nonzeros_ -= (v != 0);
    row_[static_cast<std::size_t>(t)] = 0;
  }

  // Branch bound after the first m positions are assigned: the nonzero
  // budget must stay reachable, and every partial correlation must still be
  // cancellable by the products not yet known (each contributes at most 1 in
  // magnitude).
  bool viable(int m) const {
    if (nonzeros_ > k_ || nonzeros_ + (n_ - m) < k_) return false;
    for (int s = 1; s < n_; ++s) {
      const int known = std::max(0, m - s) + std::max(0, m + s - n_);
      if (std::abs(corr_[static_cast<std::size_t>(s)]) > n_ - known) return false;
    }
    return true;
  }

  bool leaf_valid() const {
    if (nonzeros_ != k_) return false;
    for (int s = 1; s < n_; ++s)
      if (corr_[static_cast<std::size_t>(s)] != 0) return false;
    return true;
  }

  bool emit() {
    if (!leaf_valid()) return true;
    RowSpec found(row_);
    if (opts_.canonical_dedup && canonicalize(found, ring_) != found) return true;
    ++count_;
    if (!opts_.count_only) rows_.push_back(std::move(found));
    return !(opts_.limit && count_ >= *opts_.limit);
  }

  bool dfs(int t) {
    if (t == n_) return emit();
    for (std::int8_t v : kSymbols) {
      assign(t, v);
      if (!prune_ || viable(t + 1)) {
        if (!dfs(t + 1)) {
          unassign(t);
          return false;
        }
      }
      unassign(t);
    }
    return true;
  }

  ShiftRing ring_;
  int wrap_sign_;
  int n_;
  int k_;
  bool prune_;
  const SearchOptions& opts_;
  std::vector<std::int8_t> row_;
  std::vector<int> corr_;
  int nonzeros_ = 0;
  int depth_ = 0;
  std::vector<RowSpec> rows_;
  std::uint64_t count_ = 0;
};

unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

SearchResult search_rows(ShiftRing ring, int order, int weight, const SearchOptions& opts,
                         const SearchTuning& tuning) {
  if (weight < 1 || weight > order)
    throw InfeasibleParametersError("search: weight must satisfy 1 <= k <= n");
  if (opts.limit && *opts.limit == 0)
    throw InfeasibleParametersError("search: limit must be >= 1");

  const unsigned threads = tuning.threads == 0 ? default_thread_count() : tuning.threads;
  // The limit path stays sequential so that "first L results" is meaningful;
  // tiny searches are not worth the thread handshake.
  bool parallel = !opts.limit && threads > 1;
  if (tuning.threads == 0 && order < 9) parallel = false;

  SearchResult result;
  if (!parallel) {
    RowSearcher searcher(ring, order, weight, opts, tuning.prune);
    result.exhausted = searcher.run();
    result.rows = std::move(searcher.rows());
    result.count = searcher.count();
    return result;
  }

  int depth = tuning.prefix_depth;
  if (depth < 0) {
    depth = 1;
    while (depth < order - 1 && pow3(depth) < 4ull * threads) ++depth;
  }
  depth = std::clamp(depth, 1, order);

  const std::uint64_t partitions = pow3(depth);
  std::vector<std::vector<RowSpec>> partition_rows(partitions);
  std::vector<std::uint64_t> partition_counts(partitions, 0);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t p = next.fetch_add(1);
      if (p >= partitions) return;
      RowSearcher searcher(ring, order, weight, opts, tuning.prune);
      if (!searcher.seed_prefix(p, depth)) continue;
      searcher.run();
      partition_rows[p] = std::move(searcher.rows());
      partition_counts[p] = searcher.count();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Prefix indices enumerate in lex order, so concatenation is already the
  // global lex order.
  for (std::uint64_t p = 0; p < partitions; ++p) {
    result.count += partition_counts[p];
    for (auto& r : partition_rows[p]) result.rows.push_back(std::move(r));
  }
  assert(std::is_sorted(result.rows.begin(), result.rows.end()));
  return result;
}

SearchResult search_circulant(int order, int weight, const SearchOptions& opts) {
  return search_rows(ShiftRing::Circulant, order, weight, opts);
}

SearchResult search_negacyclic(int order, int weight, const SearchOptions& opts) {
  return search_rows(ShiftRing::Negacyclic, order, weight, opts);
}

RowSpec canonicalize(const RowSpec& r, ShiftRing ring) {
  const int n = r.size();
  std::vector<std::int8_t> best = r.entries();
  std::vector<std::int8_t> cur = r.entries();

  if (ring == ShiftRing::Circulant) {
    for (int i = 0; i < n; ++i) {
      if (i > 0) cur = shifted_once(cur, +1);
      if (cur < best) best = cur;
      std::vector<std::int8_t> neg(cur);
      for (auto& v : neg) v = static_cast<std::int8_t>(-v);
      if (neg < best) best = std::move(neg);
    }
  } else {
    // The negacyclic shift has order 2n and its n-th power is global
    // negation, so walking 2n shifts covers the whole group.
    for (int i = 0; i < 2 * n; ++i) {
      if (i > 0) cur = shifted_once(cur, -1);
      if (cur < best) best = cur;
    }
  }
  return RowSpec(std::move(best));
}

std::vector<ToeplitzWeighingItem> enumerate_toeplitz_weighing(int order) {
  if (order < 1)
    throw InfeasibleParametersError("enumerate_toeplitz_weighing: order must be >= 1");
  if (order > kToeplitzEnumerationCap)
    throw CapExceededError("enumerate_toeplitz_weighing: order exceeds exhaustive cap");

  const int n = order;
  const int free_entries = 2 * n - 1;
  // digits[0..n-1] = first row; digits[n..2n-2] = first column below the
  // shared corner. Incrementing from the back enumerates specs in lex order.
  std::vector<std::int8_t> digits(static_cast<std::size_t>(free_entries), -1);
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * n);
  std::vector<ToeplitzWeighingItem> items;

  for (;;) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        entries[static_cast<std::size_t>(i) * n + j] =
            j >= i ? digits[static_cast<std::size_t>(j - i)]
                   : digits[static_cast<std::size_t>(n + i - j - 1)];
      }
    }
    TernaryMatrix a(n, entries);
    const VerificationReport report = gram_check(a);
    if (report.is_weighing) {
      std::vector<std::int8_t> first_row(digits.begin(), digits.begin() + n);
      std::vector<std::int8_t> first_col(static_cast<std::size_t>(n));
      first_col[0] = digits[0];
      for (int i = 1; i < n; ++i) first_col[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(n + i - 1)];
      items.push_back({ToeplitzSpec(std::move(first_row), std::move(first_col)), report.weight,
                       classify_toeplitz_weighing(a)});
    }

    int pos = free_entries - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 1) {
      digits[static_cast<std::size_t>(pos)] = -1;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return items;
}

}  // namespace wmkit
