#pragma once

#include <optional>
#include <vector>

#include "numbers.hpp"

namespace gpi {

using QVec = std::vector<Rational>;

bool is_zero_vec(const QVec& v);

/// Row space in canonical reduced echelon form: rows have strictly increasing
/// pivot columns, leading entry 1, pivot columns cleared everywhere else.
/// Equality of subspaces is direct basis comparison.
class Subspace {
 public:
  explicit Subspace(size_t ambient) : ambient_(ambient) {}

  /// Inserts a vector; returns true when the dimension grew.
  bool insert(QVec v);
  bool contains(QVec v) const;
  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<QVec>& basis() const { return rows_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  void reduce(QVec& v) const;
  size_t ambient_;
  std::vector<QVec> rows_;           // RREF rows
  std::vector<size_t> pivot_cols_;  // aligned, strictly increasing
};

/// Rank-only incremental elimination over cleared-denominator integer rows
/// (fraction-free with per-step content stripping). Never stores the input
/// matrix, only the reduced pivot rows.
class StreamingRank {
 public:
  explicit StreamingRank(size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of everything seen so far.
  bool add_row(const QVec& row);
  bool add_int_row(std::vector<Int> row);
  size_t rank() const { return pivots_.size(); }
  size_t cols() const { return cols_; }

 private:
  struct Pivot {
    size_t col;
    std::vector<Int> v;
  };
  size_t cols_;
  std::vector<Pivot> pivots_;  // sorted by col
};

std::vector<Int> clear_denominators(const QVec& row);

/// Incremental Gauss-Jordan over rationals that remembers, for each reduced
/// row, its expression as a combination of the original rows that supplied
/// pivots ("first linearly independent rows" in insertion order).
class RrefBuilder {
 public:
  explicit RrefBuilder(size_t cols) : cols_(cols) {}

  /// Returns true when the row became a pivot row.
  bool add_row(size_t original_index, const QVec& row);

  size_t rank() const { return rref_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<size_t>& pivot_rows() const { return pivot_rows_; }
  const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<QVec>& rref_rows() const { return rref_; }

  /// Coordinates of v over the original pivot rows; nullopt when v is not in
  /// the row space.
  std::optional<QVec> pivot_coords(const QVec& v) const;

 private:
  size_t cols_;
  std::vector<QVec> rref_;          // mutually reduced rows, leading 1
  std::vector<size_t> pivot_cols_;  // aligned with rref_, not sorted
  std::vector<QVec> combos_;        // rref_[t] = sum_s combos_[t][s] * Row(pivot_rows_[s])
  std::vector<size_t> pivot_rows_;
};

/// Basis of { x : M x = 0 } for a matrix given as rows of equations, in a
/// canonical (free-column) form.
std::vector<QVec> kernel(const std::vector<QVec>& equations, size_t unknowns);

}  // namespace gpi
