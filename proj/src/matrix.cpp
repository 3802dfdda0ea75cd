#include "wmkit/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wmkit {

bool is_ternary(int value) { return value == -1 || value == 0 || value == 1; }

namespace {

void check_entries(const std::vector<std::int8_t>& entries, const char* what) {
  for (std::int8_t e : entries) {
    if (!is_ternary(e)) throw std::invalid_argument(std::string(what) + ": entry outside {-1,0,+1}");
  }
}

}  // namespace

RowSpec::RowSpec(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("RowSpec: row must be nonempty");
  check_entries(entries_, "RowSpec");
}

int RowSpec::nonzero_count() const {
  int k = 0;
  for (std::int8_t e : entries_) k += (e != 0);
  return k;
}

TernaryMatrix::TernaryMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw std::invalid_argument("TernaryMatrix: order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("TernaryMatrix: entry count does not match order");
  check_entries(entries_, "TernaryMatrix");
}

TernaryMatrix TernaryMatrix::identity(int order) {
  if (order < 1) throw std::invalid_argument("TernaryMatrix: order must be positive");
  std::vector<std::int8_t> e(static_cast<std::size_t>(order) * order, 0);
  for (int i = 0; i < order; ++i) e[static_cast<std::size_t>(i) * order + i] = 1;
  return {order, std::move(e)};
}

ToeplitzSpec::ToeplitzSpec(std::vector<std::int8_t> first_row, std::vector<std::int8_t> first_col)
    : first_row_(std::move(first_row)), first_col_(std::move(first_col)) {
  if (first_row_.empty() || first_row_.size() != first_col_.size())
    throw std::invalid_argument("ToeplitzSpec: first row and column must share a positive length");
  check_entries(first_row_, "ToeplitzSpec");
  check_entries(first_col_, "ToeplitzSpec");
  if (first_row_[0] != first_col_[0])
    throw std::invalid_argument("ToeplitzSpec: corner entry of row and column must agree");
}

VerificationReport gram_check(const TernaryMatrix& a) {
  const int n = a.order();
  VerificationReport report;

  std::vector<int> norms(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int norm = 0;
    for (int j = 0; j < n; ++j) {
      const int e = a.at(i, j);
      norm += e * e;
    }
    norms[static_cast<std::size_t>(i)] = norm;
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int ip = 0;
      for (int t = 0; t < n; ++t) ip += a.at(i, t) * a.at(j, t);
      if (ip != 0) report.defects.push_back({i + 1, j + 1, ip});
    }
  }

  const int k = norms[0];
  for (int i = 1; i < n; ++i) {
    if (norms[static_cast<std::size_t>(i)] != k)
      report.defects.push_back({i + 1, i + 1, norms[static_cast<std::size_t>(i)]});
  }
  // Equal norms and orthogonal rows are not enough: weight 0 is excluded.
  if (report.defects.empty() && k == 0) report.defects.push_back({1, 1, 0});

  report.is_weighing = report.defects.empty();
  report.weight = report.is_weighing ? k : 0;
  return report;
}

namespace {

TernaryMatrix expand_shifted(const RowSpec& r, int wrap_sign) {
  const int n = r.size();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = r[j];
  for (int i = 1; i < n; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * n;
    const std::size_t prev = row - n;
    e[row] = static_cast<std::int8_t>(wrap_sign * e[prev + n - 1]);
    for (int j = 1; j < n; ++j) e[row + j] = e[prev + j - 1];
  }
  return {n, std::move(e)};
}

}  // namespace

TernaryMatrix expand_circulant(const RowSpec& r) { return expand_shifted(r, +1); }

TernaryMatrix expand_negacyclic(const RowSpec& c) { return expand_shifted(c, -1); }

TernaryMatrix expand_toeplitz(const ToeplitzSpec& s) {
  const int n = s.order();
  const auto& fr = s.first_row();
  const auto& fc = s.first_col();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(i) * n + j] =
          j >= i ? fr[static_cast<std::size_t>(j - i)] : fc[static_cast<std::size_t>(i - j)];
    }
  }
  return {n, std::move(e)};
}

bool is_constant_diagonal(const TernaryMatrix& a) {
  const int n = a.order();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (a.at(i, j) != a.at(i - 1, j - 1)) return false;
  return true;
}

bool is_constant_skew_diagonal(const TernaryMatrix& a) {
  const int n = a.order();
  for (int i = 1; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (a.at(i, j) != a.at(i - 1, j + 1)) return false;
  return true;
}

namespace {

bool has_wrap_rule(const TernaryMatrix& a, int wrap_sign) {
  const int n = a.order();
  for (int i = 1; i < n; ++i)
    if (a.at(i, 0) != wrap_sign * a.at(i - 1, n - 1)) return false;
  return true;
}

}  // namespace

bool is_circulant(const TernaryMatrix& a) {
  return is_constant_diagonal(a) && has_wrap_rule(a, +1);
}

bool is_negacyclic(const TernaryMatrix& a) {
  return is_constant_diagonal(a) && has_wrap_rule(a, -1);
}

TernaryMatrix reverse_rows(const TernaryMatrix& a) {
  const int n = a.order();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i) * n + j] = a.at(n - 1 - i, j);
  return {n, std::move(e)};
}

TernaryMatrix transpose(const TernaryMatrix& a) {
  const int n = a.order();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i) * n + j] = a.at(j, i);
  return {n, std::move(e)};
}

TernaryMatrix negate(const TernaryMatrix& a) {
  const int n = a.order();
  std::vector<std::int8_t> e(a.entries());
  for (auto& v : e) v = static_cast<std::int8_t>(-v);
  return {n, std::move(e)};
}

std::vector<int> periodic_autocorrelation(const RowSpec& r) {
  const int n = r.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += r[j] * r[(j + s) % n];
    out[static_cast<std::size_t>(s)] = sum;
  }
  return out;
}

std::vector<int> negaperiodic_autocorrelation(const RowSpec& r) {
  const int n = r.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    int sum = 0;
    for (int j = 0; j < n; ++j) {
      if (j + s < n)
        sum += r[j] * r[j + s];
      else
        sum -= r[j] * r[j + s - n];
    }
    out[static_cast<std::size_t>(s)] = sum;
  }
  return out;
}

}  // namespace wmkit
