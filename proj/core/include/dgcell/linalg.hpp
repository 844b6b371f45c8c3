#pragma once

// Exact sparse linear algebra over Q.
//
// Vectors are sparse with strictly decreasing column indices, so the first
// entry is the leading term. When columns are numbered along a monomial
// order, leading-term elimination is exactly TIP elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include "dgcell/free_algebra.hpp"

namespace dgcell {

struct SparseEntry {
  std::size_t col;
  Rational value;

  bool operator==(const SparseEntry&) const = default;
};

/// Entries sorted by strictly decreasing column; no zero values stored.
using SparseVec = std::vector<SparseEntry>;

/// Sorts, merges duplicate columns and drops zeros.
SparseVec canonical(SparseVec v);

/// v - c * w
SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w);

SparseVec scaled(SparseVec v, const Rational& c);

/// Echelon basis of a subspace: rows with pairwise distinct leading columns,
/// each normalized to leading coefficient 1. Rows remember a caller tag.
class Echelon {
 public:
  struct Row {
    SparseVec vec;
    int tag = -1;
  };

  /// Reduces `v` by leading terms and appends it if it survives.
  /// Returns true when `v` was independent of the current rows.
  bool insert(SparseVec v, int tag = -1);

  /// Eliminates leading terms while they hit a pivot. If `coords` is given,
  /// (row index, multiplier) pairs are appended so that
  /// v = sum(multiplier * row) + remainder.
  SparseVec reduce_leading(SparseVec v,
                           std::vector<std::pair<std::size_t, Rational>>* coords = nullptr) const;

  /// Full reduction: the remainder has no pivot column in its support.
  /// This is a linear map whose kernel is the span of the rows.
  SparseVec normal_form(SparseVec v) const;

  bool contains(const SparseVec& v) const { return reduce_leading(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  /// Row index with the given leading column, or -1.
  std::ptrdiff_t pivot_row(std::size_t col) const {
    return col < pivot_of_col_.size() ? pivot_of_col_[col] : -1;
  }

 private:
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> pivot_of_col_;
};

/// Rank over Q by fraction-free elimination on integer rows: every row is
/// cleared of denominators and kept primitive; no division by pivots.
std::size_t rank_fraction_free(const std::vector<SparseVec>& rows);

/// Basis (as coefficient vectors indexed by input position) of the kernel of
/// c -> sum_i c_i * images[i].
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images);

}  // namespace dgcell
