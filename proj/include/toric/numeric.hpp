#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

MatQ to_rational(const MatZ& m);
VecQ to_rational_vec(const VecZ& v);

/** gcd of the absolute values of all entries; 0 for the zero vector. */
Int content(const VecZ& v);

/** Exact rank over Q (Gaussian elimination with nonzero pivoting). */
int rank_exact(const MatQ& a);
int rank_exact(const MatZ& a);

/** Exact determinant of a square rational matrix. */
Rat det_exact(const MatQ& a);
Int det_exact(const MatZ& a);

/**
 * Solve the square system a*x = b exactly. Empty iff a is singular.
 */
std::optional<VecQ> solve_square(const MatQ& a, const VecQ& b);

/**
 * Any exact solution of a*x = b (free variables set to zero), or empty if
 * the system is inconsistent. Gauss-Jordan with partial pivoting on exact
 * rationals; deterministic.
 */
std::optional<VecQ> solve_any(const MatQ& a, const VecQ& b);

/** Basis of the (right) kernel of a, as columns. May have zero columns. */
MatQ kernel_basis(const MatQ& a);

/** Parse "p", "-p" or "p/q" (q > 0 after normalization) exactly. */
Rat parse_rational(const std::string& s);

/** Canonical "p" or "p/q" form, always reduced. */
std::string format_rational(const Rat& x);

/** Scale a rational vector to integer entries with content 1, keeping sign. */
VecZ primitive_integer_vector(const VecQ& x);

}  // namespace toric
