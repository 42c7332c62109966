#include "tspag/oracles.hpp"

#include "tspag/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tspag {

namespace {

constexpr int kEnumerationLimit = 10;

void check_enumeration_size(int m) {
    if (m > kEnumerationLimit)
        throw EnumerationRefusedError("refusing to enumerate " + std::to_string(m) +
                                      "! permutations (limit m <= " +
                                      std::to_string(kEnumerationLimit) + ")");
}

} // namespace

Rational tour_cost(const TspInstance& inst, const Tour& tour) {
    tour.validate(inst.m());
    const auto& p = tour.order;
    Rational cost = inst.d[0][p.front()] + inst.d[p.back()][0];
    for (std::size_t q = 0; q + 1 < p.size(); ++q)
        cost += inst.d[p[q]][p[q + 1]];
    return cost;
}

AssignmentVector tour_to_assignment(const Tour& tour) {
    tour.validate();
    AssignmentVector w(tour.m());
    for (int r = 1; r <= tour.m(); ++r)
        w.at(tour.order[r - 1], r) = 1;
    return w;
}

Tour assignment_to_tour(const AssignmentVector& w) {
    if (!w.is_permutation())
        throw NotAVertexError(
            "assignment vector is not an integral permutation matrix");
    Tour tour;
    tour.order.resize(w.m());
    for (int r = 1; r <= w.m(); ++r)
        for (int i = 1; i <= w.m(); ++i)
            if (w.at(i, r) == 1) tour.order[r - 1] = i;
    return tour;
}

LegVector tour_to_legs(const Tour& tour, int n) {
    tour.validate(n - 1);
    LegVector legs(n);
    const auto& p = tour.order;
    legs.at(0, p.front()) = 1;
    for (std::size_t q = 0; q + 1 < p.size(); ++q)
        legs.at(p[q], p[q + 1]) = 1;
    legs.at(p.back(), 0) = 1;
    return legs;
}

std::pair<Tour, Rational> brute_force_tsp(const TspInstance& inst) {
    check_enumeration_size(inst.m());
    Tour current;
    current.order.resize(inst.m());
    std::iota(current.order.begin(), current.order.end(), 1);

    Tour best_tour;
    Rational best_cost;
    bool first = true;
    do {
        Rational cost = tour_cost(inst, current);
        // strict improvement only: std::next_permutation walks orders in
        // lexicographic order, so the first minimum seen wins ties
        if (first || cost < best_cost) {
            best_tour = current;
            best_cost = cost;
            first = false;
        }
    } while (std::next_permutation(current.order.begin(), current.order.end()));
    return {best_tour, best_cost};
}

std::pair<AssignmentVector, Rational>
brute_force_lap(const std::vector<std::vector<Rational>>& c) {
    const int m = static_cast<int>(c.size());
    if (m < 1) throw Error("empty cost matrix");
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != m)
            throw Error("cost matrix must be m x m");
    check_enumeration_size(m);

    Tour current;
    current.order.resize(m);
    std::iota(current.order.begin(), current.order.end(), 1);

    Tour best_perm;
    Rational best_cost;
    bool first = true;
    do {
        Rational cost(0);
        for (int r = 1; r <= m; ++r)
            cost += c[current.order[r - 1] - 1][r - 1];
        if (first || cost < best_cost) {
            best_perm = current;
            best_cost = cost;
            first = false;
        }
    } while (std::next_permutation(current.order.begin(), current.order.end()));
    return {tour_to_assignment(best_perm), best_cost};
}

} // namespace tspag
