#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace wmkit {

// All matrix and row entries live in {-1, 0, +1}.
bool is_ternary(int value);

// Generator row. Expanded to a full matrix by expand_circulant (each row is
// the right cyclic shift of the one above) or expand_negacyclic (same shift,
// wrapped entry negated; equivalently the coefficients of a polynomial in the
// negacyclic shift matrix Y with Y^n = -I).
//
// Rows compare lexicographically with -1 < 0 < +1, which matches the symbol
// order '-' < '0' < '+' used by the text formats.
class RowSpec {
 public:
  explicit RowSpec(std::vector<std::int8_t> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  std::int8_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }
  int nonzero_count() const;

  bool operator==(const RowSpec&) const = default;
  auto operator<=>(const RowSpec&) const = default;

 private:
  std::vector<std::int8_t> entries_;
};

// Dense square matrix over {-1, 0, +1}, row-major. Orders stay small (desk
// scale, n <= ~32), so no sparse representation. Accessors are 0-based; the
// written docs use the conventional 1-based indices a_{ij}.
class TernaryMatrix {
 public:
  TernaryMatrix(int order, std::vector<std::int8_t> entries);

  static TernaryMatrix identity(int order);

  int order() const { return order_; }
  std::int8_t at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * order_ + col];
  }
  std::span<const std::int8_t> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * order_,
            static_cast<std::size_t>(order_)};
  }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  bool operator==(const TernaryMatrix&) const = default;

 private:
  int order_;
  std::vector<std::int8_t> entries_;
};

// First row and first column with a shared corner; determines a
// constant-diagonal (Toeplitz) matrix via a_{ij} = a_{i-1,j-1}.
class ToeplitzSpec {
 public:
  ToeplitzSpec(std::vector<std::int8_t> first_row, std::vector<std::int8_t> first_col);

  int order() const { return static_cast<int>(first_row_.size()); }
  const std::vector<std::int8_t>& first_row() const { return first_row_; }
  const std::vector<std::int8_t>& first_col() const { return first_col_; }

  bool operator==(const ToeplitzSpec&) const = default;

 private:
  std::vector<std::int8_t> first_row_;
  std::vector<std::int8_t> first_col_;
};

// One Gram failure: rows row_a and row_b (1-based) have the given inner
// product. Diagonal entries (i, i) report a squared row norm that differs
// from the reference norm (or a zero norm, which can never be a weight).
struct GramDefect {
  int row_a = 0;
  int row_b = 0;
  int inner = 0;

  bool operator==(const GramDefect&) const = default;
};

struct VerificationReport {
  bool is_weighing = false;
  int weight = 0;  // meaningful only when is_weighing
  std::vector<GramDefect> defects;
};

// Decides AA^T = kI by exact integer arithmetic. All defects are reported,
// not just the first. The all-zero matrix is rejected (weight must be >= 1).
VerificationReport gram_check(const TernaryMatrix& a);

TernaryMatrix expand_circulant(const RowSpec& r);
TernaryMatrix expand_negacyclic(const RowSpec& c);
TernaryMatrix expand_toeplitz(const ToeplitzSpec& s);

// Constant-diagonal: a_{ij} = a_{i-1,j-1} (the Toeplitz orientation).
// Constant-skew-diagonal: a_{ij} = a_{i-1,j+1}. reverse_rows maps each
// property onto the other.
bool is_constant_diagonal(const TernaryMatrix& a);
bool is_constant_skew_diagonal(const TernaryMatrix& a);

// Structural predicates: constant diagonals plus the wrap rule
// a_{i,1} = a_{i-1,n} (circulant) or a_{i,1} = -a_{i-1,n} (negacyclic).
// Both hold simultaneously exactly when every wrap pair is (0, 0).
bool is_circulant(const TernaryMatrix& a);
bool is_negacyclic(const TernaryMatrix& a);

// Row i of the output is row n+1-i of the input. An involution; preserves
// the weighing property.
TernaryMatrix reverse_rows(const TernaryMatrix& a);

TernaryMatrix transpose(const TernaryMatrix& a);
TernaryMatrix negate(const TernaryMatrix& a);

// c_s = sum_j r_j r_{(j+s) mod n}, s = 0..n-1. The circulant expansion of r
// is a weighing matrix of weight k iff this equals (k, 0, ..., 0).
std::vector<int> periodic_autocorrelation(const RowSpec& r);

// Same sums with wrapped products negated (Y^n = -I); flatness characterizes
// negacyclic weighing generators the same way.
std::vector<int> negaperiodic_autocorrelation(const RowSpec& r);

}  // namespace wmkit
