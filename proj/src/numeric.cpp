#include "toric/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

MatQ to_rational(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

VecQ to_rational_vec(const VecZ& v) {
  VecQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

Int content(const VecZ& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  return boost::multiprecision::abs(g);
}

namespace {

// Row echelon reduction in place; returns pivot columns. Pivot choice is the
// first nonzero entry in the current column, so the result is deterministic.
std::vector<int> echelonize(MatQ& a) {
  std::vector<int> pivot_cols;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(row).swap(a.row(piv));
    const Rat inv = Rat(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat factor = a(i, col);
      a.row(i) -= factor * a.row(row);
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank_exact(const MatQ& a) {
  MatQ work = a;
  return static_cast<int>(echelonize(work).size());
}

int rank_exact(const MatZ& a) { return rank_exact(to_rational(a)); }

Rat det_exact(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Rat(1);
  MatQ work = a;
  Rat det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (work(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      work.row(col).swap(work.row(piv));
      det = -det;
    }
    det *= work(col, col);
    const Rat inv = Rat(1) / work(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (work(i, col) == 0) continue;
      const Rat factor = work(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) work(i, j) -= factor * work(col, j);
    }
  }
  return det;
}

Int det_exact(const MatZ& a) {
  const Rat d = det_exact(to_rational(a));
  if (boost::multiprecision::denominator(d) != 1)
    throw std::logic_error("integer determinant came out fractional");
  return boost::multiprecision::numerator(d);
}

std::optional<VecQ> solve_square(const MatQ& a, const VecQ& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw std::invalid_argument("solve_square: shape mismatch");
  if (rank_exact(a) != a.rows()) return std::nullopt;
  return solve_any(a, b);
}

std::optional<VecQ> solve_any(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_any: shape mismatch");
  MatQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<int> pivots = echelonize(aug);
  // Inconsistent iff some pivot landed in the rhs column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols())) return std::nullopt;
  VecQ x = VecQ::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = aug(k, a.cols());
  return x;
}

MatQ kernel_basis(const MatQ& a) {
  MatQ work = a;
  const std::vector<int> pivots = echelonize(work);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  const int nullity = static_cast<int>(a.cols()) - static_cast<int>(pivots.size());
  MatQ basis = MatQ::Zero(a.cols(), nullity);
  int k = 0;
  for (Eigen::Index free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(free_col, k) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      basis(pivots[row], k) = -work(row, free_col);
    ++k;
  }
  return basis;
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + s + "'");
  }
}

std::string format_rational(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

VecZ primitive_integer_vector(const VecQ& x) {
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x(i)));
  VecZ out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Rat scaled = x(i) * lcm_den;
    out(i) = boost::multiprecision::numerator(scaled);
  }
  const Int g = content(out);
  if (g > 1)
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

}  // namespace toric
