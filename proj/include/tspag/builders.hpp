#ifndef TSPAG_BUILDERS_HPP
#define TSPAG_BUILDERS_HPP

#include "tspag/consys.hpp"
#include "tspag/instance.hpp"

namespace tspag {

/// Doubly stochastic system over the m-by-m assignment variables: unit row
/// sums, unit column sums, nonnegativity. Its vertices are the permutation
/// matrices.
ConstraintSystem build_assignment_polytope(int m);

/// The travel-leg extension of the assignment polytope: W plus one leg
/// variable per ordered city pair. Rows are the assignment rows, the
/// depot-departure and depot-return links y[0,i] = w[i,1] and
/// y[i,0] = w[i,m], the consecutive-stage linking rows
/// w[i,r] + w[j,r+1] - y[i,j] <= 1, and the interior-leg total
/// sum y[i,j] = m-1 over i,j >= 1. This is the feasible set of problem lp1.
ConstraintSystem build_leg_extension(const TspInstance& inst);

/// The ordered-triplet extension of the assignment polytope: W plus one
/// variable per node triplet at strictly increasing stages with pairwise
/// distinct levels. Each triplet variable x is capped by each of its three
/// assignment entries and forced up by w1 + w2 + w3 - x <= 2. This is the
/// feasible set of problem lp0. Requires m >= 4.
ConstraintSystem build_triplet_extension(const TspInstance& inst);

/// Union of the triplet and travel-leg extensions over shared assignment
/// variables (variable order W, X, Y). This is the feasible set of problem
/// lp2. Requires m >= 4.
ConstraintSystem build_combined_extension(const TspInstance& inst);

/// Minimize sum c[i][r] * w[i,r]; no weight on legs or triplets.
Objective assignment_objective(const std::vector<std::vector<Rational>>& c);

/// The triplet tour-cost objective. Nonzero only on first-stage-anchored
/// triplets:
///   stages (1,2,3):     d[0][i] + d[i][j] + d[j][k]
///   stages (1,m-1,m):   d[j][k] + d[k][0]
///   stages (1,r,r+1), 3 <= r <= m-2:  d[j][k]
/// Summed over a tour's lifted triplets these telescope to the full tour
/// cost. Requires m >= 4 (at m = 3 the first two cases collide on stages
/// (1,2,3) and the sum double-counts).
Objective triplet_tour_objective(const TspInstance& inst);

/// All triplet keys of the extension, in builder order.
std::vector<TripletKey> triplet_index_set(int m);

} // namespace tspag

#endif
