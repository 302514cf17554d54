#include "toric/weight_matrix.hpp"

#include "toric/lattice.hpp"
#include "toric/polyhedra.hpp"

namespace toric {

WeightMatrix::WeightMatrix(MatZ v) : v_(std::move(v)) {
  if (v_.rows() < 1 || v_.cols() < 1)
    throw std::invalid_argument("weight matrix must have at least one row and column");
  rank_ = rank_exact(v_);
  ray_of_col_.assign(static_cast<std::size_t>(v_.cols()), -1);
  for (int j = 0; j < r(); ++j) {
    const VecZ col = v_.col(j);
    if (col.isZero()) continue;
    const Int g = content(col);
    VecZ dir = col;
    if (g > 1)
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) /= g;
    int found = -1;
    for (std::size_t k = 0; k < ray_dirs_.size(); ++k)
      if (same_ray(ray_dirs_[k], dir)) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(ray_dirs_.size());
      ray_dirs_.push_back(dir);
      cols_of_ray_.emplace_back();
    }
    ray_of_col_[j] = found;
    cols_of_ray_[found].push_back(j);
  }
}

bool WeightMatrix::has_coincident_columns() const {
  for (const auto& cols : cols_of_ray_)
    if (cols.size() > 1) return true;
  return false;
}

bool WeightMatrix::all_columns_primitive() const {
  for (int j = 0; j < r(); ++j)
    if (!is_primitive_column(v_.col(j))) return false;
  return true;
}

}  // namespace toric
