#ifndef TSPAG_VERTICES_HPP
#define TSPAG_VERTICES_HPP

#include "tspag/consys.hpp"

#include <map>
#include <vector>

namespace tspag {

struct VertexSet {
    struct Vertex {
        std::map<VarId, Rational> point;
        bool integral = false;
    };
    std::vector<Vertex> vertices;

    int integral_count() const;
    int fractional_count() const;
};

/// All basic feasible solutions by exhaustive enumeration of column bases of
/// the standard form, deduplicated by exact point equality. Throws
/// EnumerationRefusedError when the number of basis candidates exceeds the
/// guard (prefer targeted LP probes on systems that large).
VertexSet enumerate_vertices(const ConstraintSystem& sys,
                             long long max_bases = 2'000'000);

} // namespace tspag

#endif
