#include "toric/polyhedra.hpp"

#include <algorithm>

namespace toric {

std::optional<VecQ> nonneg_solve(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("nonneg_solve: shape mismatch");
  const Eigen::Index k = a.rows(), n = a.cols();

  // Tableau [A | I | b] with rhs made nonnegative; artificials start basic.
  MatQ t(k, n + k + 1);
  t.setZero();
  for (Eigen::Index i = 0; i < k; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
    t(i, n + i) = 1;
    t(i, n + k) = flip ? -b(i) : b(i);
  }
  std::vector<Eigen::Index> basis(k);
  for (Eigen::Index i = 0; i < k; ++i) basis[i] = n + i;

  // Phase-one objective: minimize the sum of artificials. Reduced costs for
  // the starting basis are c_j - sum_i t(i,j) with c_j = [j >= n].
  VecQ red(n + k);
  for (Eigen::Index j = 0; j < n + k; ++j) {
    Rat s(0);
    for (Eigen::Index i = 0; i < k; ++i) s += t(i, j);
    red(j) = (j >= n ? Rat(1) : Rat(0)) - s;
  }

  for (;;) {
    // Bland: entering variable is the smallest index with negative reduced cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + k; ++j)
      if (red(j) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    // Ratio test; ties broken by smallest basis variable index (Bland).
    Eigen::Index leave = -1;
    Rat best_ratio(0);
    for (Eigen::Index i = 0; i < k; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rat ratio = t(i, n + k) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one objective unbounded");

    const Rat pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rat factor = t(i, enter);
      t.row(i) -= factor * t.row(leave);
    }
    const Rat rc = red(enter);
    for (Eigen::Index j = 0; j < n + k; ++j) red(j) -= rc * t(leave, j);
    basis[leave] = enter;
  }

  Rat residual(0);
  for (Eigen::Index i = 0; i < k; ++i)
    if (basis[i] >= n) residual += t(i, n + k);
  if (residual != 0) return std::nullopt;  // artificials stuck positive
  VecQ x = VecQ::Zero(n);
  for (Eigen::Index i = 0; i < k; ++i)
    if (basis[i] < n) x(basis[i]) = t(i, n + k);
  return x;
}

std::optional<VecQ> linear_feasible(const MatQ& eq, const VecQ& eq_rhs,
                                    const MatQ& ge, const VecQ& ge_rhs) {
  const Eigen::Index n = eq.rows() > 0 ? eq.cols() : ge.cols();
  if (eq.rows() > 0 && ge.rows() > 0 && eq.cols() != ge.cols())
    throw std::invalid_argument("linear_feasible: variable count mismatch");
  const Eigen::Index ke = eq.rows(), kg = ge.rows();

  // Variables (u, w, s): x = u - w, slacks s for the >= block.
  MatQ a(ke + kg, 2 * n + kg);
  a.setZero();
  VecQ b(ke + kg);
  for (Eigen::Index i = 0; i < ke; ++i) {
    a.block(i, 0, 1, n) = eq.row(i);
    a.block(i, n, 1, n) = -eq.row(i);
    b(i) = eq_rhs(i);
  }
  for (Eigen::Index i = 0; i < kg; ++i) {
    a.block(ke + i, 0, 1, n) = ge.row(i);
    a.block(ke + i, n, 1, n) = -ge.row(i);
    a(ke + i, 2 * n + i) = -1;
    b(ke + i) = ge_rhs(i);
  }
  const auto sol = nonneg_solve(a, b);
  if (!sol) return std::nullopt;
  VecQ x(n);
  for (Eigen::Index j = 0; j < n; ++j) x(j) = (*sol)(j) - (*sol)(n + j);
  return x;
}

bool positive_span_is_full(const MatZ& v) {
  const MatQ a = to_rational(v);
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (int sign : {1, -1}) {
      VecQ e = VecQ::Zero(v.rows());
      e(i) = sign;
      if (!nonneg_solve(a, e)) return false;
    }
  }
  return true;
}

namespace {

MatQ columns(const MatZ& v, const ConeIndexSet& I) {
  MatQ out(v.rows(), static_cast<Eigen::Index>(I.size()));
  for (std::size_t k = 0; k < I.size(); ++k)
    for (Eigen::Index i = 0; i < v.rows(); ++i) out(i, static_cast<Eigen::Index>(k)) = Rat(v(i, I[k]));
  return out;
}

}  // namespace

bool cone_is_simplicial_pointed(const MatZ& v, const ConeIndexSet& I) {
  if (I.empty()) return true;
  const MatQ cols = columns(v, I);
  return rank_exact(cols) == static_cast<int>(I.size());
}

bool cones_intersect_in_common_face(const MatZ& v, const ConeIndexSet& I,
                                    const ConeIndexSet& J) {
  const Eigen::Index m = v.rows();
  std::vector<int> shared, only_i, only_j;
  std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(shared));
  std::set_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(only_i));
  std::set_difference(J.begin(), J.end(), I.begin(), I.end(), std::back_inserter(only_j));

  // Separating functional h: zero on shared rays, >= 1 on the rest of I,
  // <= -1 on the rest of J. The >= 1 normalization stands in for strictness.
  MatQ eq(static_cast<Eigen::Index>(shared.size()), m);
  VecQ eq_rhs = VecQ::Zero(static_cast<Eigen::Index>(shared.size()));
  for (std::size_t k = 0; k < shared.size(); ++k)
    for (Eigen::Index i = 0; i < m; ++i) eq(static_cast<Eigen::Index>(k), i) = Rat(v(i, shared[k]));

  MatQ ge(static_cast<Eigen::Index>(only_i.size() + only_j.size()), m);
  VecQ ge_rhs(ge.rows());
  Eigen::Index row = 0;
  for (int j : only_i) {
    for (Eigen::Index i = 0; i < m; ++i) ge(row, i) = Rat(v(i, j));
    ge_rhs(row++) = 1;
  }
  for (int j : only_j) {
    for (Eigen::Index i = 0; i < m; ++i) ge(row, i) = Rat(-v(i, j));
    ge_rhs(row++) = 1;
  }
  return linear_feasible(eq, eq_rhs, ge, ge_rhs).has_value();
}

bool in_cone(const MatZ& v, const ConeIndexSet& I, const VecQ& x) {
  if (I.empty()) return x.isZero();
  return nonneg_solve(columns(v, I), x).has_value();
}

bool same_ray(const VecZ& u, const VecZ& w) {
  if (u.size() != w.size()) return false;
  if (u.isZero() || w.isZero()) return false;
  // Cross-proportionality plus a positive factor.
  for (Eigen::Index i = 0; i < u.size(); ++i)
    for (Eigen::Index j = i + 1; j < u.size(); ++j)
      if (u(i) * w(j) != u(j) * w(i)) return false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i) != 0) return u(i) * w(i) > 0;
  }
  return false;
}

}  // namespace toric
