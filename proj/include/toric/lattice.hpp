#pragma once

#include <vector>

#include "toric/errors.hpp"
#include "toric/numeric.hpp"

namespace toric {

/**
 * Smith normal form U*M*W = D with U, W unimodular and D diagonal with a
 * divisibility chain d1 | d2 | ... and nonnegative diagonal entries.
 */
struct SNFDecomposition {
  MatZ u;  // rows x rows, |det| = 1
  MatZ d;  // rows x cols, diagonal, d(i,i) >= 0, d(i,i) | d(i+1,i+1)
  MatZ w;  // cols x cols, |det| = 1

  std::vector<Int> diagonal() const;
};

/**
 * A finitely generated abelian group Z^free_rank + sum Z/d_i with the d_i a
 * divisibility chain, every d_i > 1.
 */
struct FinAbelianGroup {
  int free_rank = 0;
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /** Order of the torsion part (the full order when finite). */
  Int torsion_order() const;
  /** "0", "Z^a", "Z/2 + Z/6", "Z^2 + Z/2", ... */
  std::string to_string() const;

  bool operator==(const FinAbelianGroup& other) const = default;
};

/**
 * Integer Smith normal form by elementary row/column reduction. The pivot is
 * the entry of minimal absolute value in the remaining submatrix, ties broken
 * by smallest row then smallest column index, so the output is deterministic.
 */
SNFDecomposition smith_normal_form(const MatZ& m);

/** True iff v != 0 and the gcd of its entries is 1. */
bool is_primitive_column(const VecZ& v);

/** Cokernel Z^rows / im(M) of M: Z^cols -> Z^rows as an abstract group. */
FinAbelianGroup cokernel_group(const MatZ& m);

/**
 * Order of the torsion part of coker(V^T), i.e. the number of connected
 * components of the group determined by the weight matrix V (m x r).
 * Throws RankDeficientError unless rank(V) = m.
 */
Int component_group_order(const MatZ& v);

}  // namespace toric
