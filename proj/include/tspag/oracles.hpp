#ifndef TSPAG_ORACLES_HPP
#define TSPAG_ORACLES_HPP

#include "tspag/instance.hpp"

#include <utility>

namespace tspag {

/// Exact cost of the closed walk 0 -> p1 -> ... -> pm -> 0.
Rational tour_cost(const TspInstance& inst, const Tour& tour);

/// The permutation matrix with entry (p_r, r) = 1 for each stage r.
AssignmentVector tour_to_assignment(const Tour& tour);

/// Inverse of tour_to_assignment; throws NotAVertexError unless the input is
/// an integral permutation matrix.
Tour assignment_to_tour(const AssignmentVector& w);

/// The 0/1 travel-leg incidence vector of the tour's Hamiltonian cycle
/// through city 0 (exactly n positive legs).
LegVector tour_to_legs(const Tour& tour, int n);

/// Minimum-cost tour by exhausting all m! orders; ties broken by the
/// lexicographically smallest order. Guarded at m <= 10.
std::pair<Tour, Rational> brute_force_tsp(const TspInstance& inst);

/// Minimum of sum c[i][r]*w[i][r] over all permutation matrices, same
/// tie-break and guard. c is m x m, 0-indexed as c[level-1][stage-1].
std::pair<AssignmentVector, Rational>
brute_force_lap(const std::vector<std::vector<Rational>>& c);

} // namespace tspag

#endif
