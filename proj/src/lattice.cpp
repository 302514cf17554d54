#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

using boost::multiprecision::abs;

std::vector<Int> SNFDecomposition::diagonal() const {
  std::vector<Int> out;
  const Eigen::Index n = std::min(d.rows(), d.cols());
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

Int FinAbelianGroup::torsion_order() const {
  Int order = 1;
  for (const Int& f : invariant_factors) order *= f;
  return order;
}

std::string FinAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const Int& f : invariant_factors) {
    if (!first) out << " + ";
    out << "Z/" << f.str();
    first = false;
  }
  return out.str();
}

namespace {

struct Pivot {
  Eigen::Index row = -1, col = -1;
};

// Entry of minimal |value| in d[t.., t..]; ties: smallest row, then column.
Pivot find_pivot(const MatZ& d, Eigen::Index t) {
  Pivot best;
  Int best_abs = 0;
  for (Eigen::Index i = t; i < d.rows(); ++i)
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      const Int a = abs(d(i, j));
      if (best.row < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SNFDecomposition smith_normal_form(const MatZ& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SNFDecomposition snf;
  snf.u = MatZ::Identity(rows, rows);
  snf.w = MatZ::Identity(cols, cols);
  snf.d = m;
  MatZ& d = snf.d;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      const Pivot p = find_pivot(d, t);
      if (p.row < 0) break;  // submatrix is zero
      if (p.row != t) {
        d.row(t).swap(d.row(p.row));
        snf.u.row(t).swap(snf.u.row(p.row));
      }
      if (p.col != t) {
        d.col(t).swap(d.col(p.col));
        snf.w.col(t).swap(snf.w.col(p.col));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Int q = d(i, t) / d(t, t);  // truncated; remainder shrinks
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          snf.u.row(i) -= q * snf.u.row(t);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Int q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          snf.w.col(j) -= q * snf.w.col(t);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Cross is clear; enforce that the pivot divides the rest of the
      // submatrix, otherwise fold an offending row in and reduce again.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      d.row(t) += d.row(bad_row);
      snf.u.row(t) += snf.u.row(bad_row);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      snf.u.row(t) = -snf.u.row(t);
    }
  }
  return snf;
}

bool is_primitive_column(const VecZ& v) { return content(v) == 1; }

FinAbelianGroup cokernel_group(const MatZ& m) {
  const SNFDecomposition snf = smith_normal_form(m);
  FinAbelianGroup g;
  int rank = 0;
  for (const Int& di : snf.diagonal()) {
    if (di == 0) continue;
    ++rank;
    if (di > 1) g.invariant_factors.push_back(di);
  }
  g.free_rank = static_cast<int>(m.rows()) - rank;
  return g;
}

Int component_group_order(const MatZ& v) {
  if (rank_exact(v) != v.rows()) throw RankDeficientError();
  const MatZ vt = v.transpose();
  return cokernel_group(vt).torsion_order();
}

}  // namespace toric
