#pragma once

#include <vector>

#include "toric/errors.hpp"
#include "toric/numeric.hpp"

namespace toric {

/**
 * The m x r integer matrix V whose columns span the rays of the construction.
 * Immutable; precomputes the ray classes (groups of coincident columns) and
 * the exact rank. Column and ray indices are 0-based throughout the library;
 * the CLI layer converts to 1-based for files and reports.
 */
class WeightMatrix {
 public:
  explicit WeightMatrix(MatZ v);

  int m() const { return static_cast<int>(v_.rows()); }
  int r() const { return static_cast<int>(v_.cols()); }
  const MatZ& matrix() const { return v_; }
  VecZ column(int j) const { return v_.col(j); }
  int rank() const { return rank_; }
  bool full_rank() const { return rank_ == m(); }

  /** Ray id of a column; -1 for a zero column. */
  int ray_of(int col) const { return ray_of_col_[col]; }
  int ray_count() const { return static_cast<int>(cols_of_ray_.size()); }
  /** Primitive direction spanning the given ray. */
  const VecZ& ray_direction(int ray) const { return ray_dirs_[ray]; }
  /** All columns lying on the given ray, ascending. */
  const std::vector<int>& columns_on_ray(int ray) const { return cols_of_ray_[ray]; }
  /** Smallest column index on the ray (its canonical representative). */
  int ray_representative(int ray) const { return cols_of_ray_[ray].front(); }
  bool has_coincident_columns() const;

  /** P1: every column is nonzero with content 1. */
  bool all_columns_primitive() const;

 private:
  MatZ v_;
  int rank_ = 0;
  std::vector<int> ray_of_col_;
  std::vector<VecZ> ray_dirs_;
  std::vector<std::vector<int>> cols_of_ray_;
};

}  // namespace toric
