#pragma once

#include <optional>
#include <vector>

#include "toric/errors.hpp"
#include "toric/numeric.hpp"

namespace toric {

/** Sorted set of 0-based column indices describing a cone spanned by columns. */
using ConeIndexSet = std::vector<int>;

/**
 * Exact feasibility kernel: find x >= 0 with a*x = b, or report that none
 * exists. Phase-one simplex with Bland's rule on exact rationals, so it
 * terminates and never misclassifies boundary instances.
 */
std::optional<VecQ> nonneg_solve(const MatQ& a, const VecQ& b);

/**
 * Find a free vector x with eq*x = eq_rhs and ge*x >= ge_rhs (either block
 * may be empty). Splits x into positive and negative parts and adds slacks,
 * then runs nonneg_solve.
 */
std::optional<VecQ> linear_feasible(const MatQ& eq, const VecQ& eq_rhs,
                                    const MatQ& ge, const VecQ& ge_rhs);

/** True iff the columns of v positively span the whole target space. */
bool positive_span_is_full(const MatZ& v);

/** True iff the columns indexed by I are linearly independent (empty I: yes). */
bool cone_is_simplicial_pointed(const MatZ& v, const ConeIndexSet& I);

/**
 * Common-face test for two simplicial pointed cones: cone(I) n cone(J) =
 * cone(I n J) as point sets. Decided by one exact LP: a separating functional
 * that vanishes on the shared rays and is strictly positive/negative on the
 * remaining generators of I/J exists iff the cones meet in the common face.
 */
bool cones_intersect_in_common_face(const MatZ& v, const ConeIndexSet& I,
                                    const ConeIndexSet& J);

/** Membership x in cone(columns of v indexed by I), exact. */
bool in_cone(const MatZ& v, const ConeIndexSet& I, const VecQ& x);

/** True iff u and w span the same ray (positive proportionality), both nonzero. */
bool same_ray(const VecZ& u, const VecZ& w);

}  // namespace toric
