#include "tspag/builders.hpp"

#include "tspag/errors.hpp"

namespace tspag {

namespace {

void add_assignment_rows(ConstraintSystem& sys, int m) {
    for (int i = 1; i <= m; ++i) {
        LinRow row(Rel::EQ, Rational(1), "row_sum[" + std::to_string(i) + "]");
        for (int r = 1; r <= m; ++r) row.add(VarId::w(i, r), 1);
        sys.add_row(std::move(row));
    }
    for (int r = 1; r <= m; ++r) {
        LinRow row(Rel::EQ, Rational(1), "col_sum[" + std::to_string(r) + "]");
        for (int i = 1; i <= m; ++i) row.add(VarId::w(i, r), 1);
        sys.add_row(std::move(row));
    }
}

void add_w_variables(ConstraintSystem& sys, int m) {
    for (int i = 1; i <= m; ++i)
        for (int r = 1; r <= m; ++r) sys.add_variable(VarId::w(i, r));
}

void add_leg_rows(ConstraintSystem& sys, int m) {
    for (int i = 1; i <= m; ++i) {
        LinRow row(Rel::EQ, Rational(0), "depot_out[" + std::to_string(i) + "]");
        row.add(VarId::y(0, i), 1);
        row.add(VarId::w(i, 1), -1);
        sys.add_row(std::move(row));
    }
    for (int i = 1; i <= m; ++i) {
        LinRow row(Rel::EQ, Rational(0), "depot_in[" + std::to_string(i) + "]");
        row.add(VarId::y(i, 0), 1);
        row.add(VarId::w(i, m), -1);
        sys.add_row(std::move(row));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (j == i) continue;
            for (int r = 1; r <= m - 1; ++r) {
                LinRow row(Rel::LE, Rational(1),
                           "leg_link[" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(r) + "]");
                row.add(VarId::w(i, r), 1);
                row.add(VarId::w(j, r + 1), 1);
                row.add(VarId::y(i, j), -1);
                sys.add_row(std::move(row));
            }
        }
    LinRow total(Rel::EQ, Rational(Rational(m) - 1), "interior_leg_total");
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (j != i) total.add(VarId::y(i, j), 1);
    sys.add_row(std::move(total));
}

void add_triplet_rows(ConstraintSystem& sys, int m) {
    for (const TripletKey& t : triplet_index_set(m)) {
        const VarId xv = VarId::x(t);
        const VarId w1 = VarId::w(t.first);
        const VarId w2 = VarId::w(t.second);
        const VarId w3 = VarId::w(t.third);
        for (const VarId& wv : {w1, w2, w3}) {
            LinRow cap(Rel::LE, Rational(0), "cap[" + xv.name() + "<=" + wv.name() + "]");
            cap.add(xv, 1);
            cap.add(wv, -1);
            sys.add_row(std::move(cap));
        }
        LinRow force(Rel::LE, Rational(2), "force[" + xv.name() + "]");
        force.add(w1, 1);
        force.add(w2, 1);
        force.add(w3, 1);
        force.add(xv, -1);
        sys.add_row(std::move(force));
    }
}

void require_triplet_size(int m, const char* what) {
    if (m < 4)
        throw DegenerateConstructionError(
            std::string(what) +
            " requires m >= 4: at m = 3 the tour-cost cases overlap on stages "
            "(1,2,3) and the objective double-counts");
}

} // namespace

std::vector<TripletKey> triplet_index_set(int m) {
    std::vector<TripletKey> keys;
    for (int p = 1; p <= m; ++p)
        for (int r = p + 1; r <= m; ++r)
            for (int s = r + 1; s <= m; ++s)
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= m; ++j) {
                        if (j == i) continue;
                        for (int k = 1; k <= m; ++k) {
                            if (k == i || k == j) continue;
                            keys.push_back(TripletKey{NodeId{i, p}, NodeId{j, r},
                                                      NodeId{k, s}});
                        }
                    }
    return keys;
}

ConstraintSystem build_assignment_polytope(int m) {
    if (m < 1)
        throw DegenerateConstructionError("assignment polytope needs m >= 1");
    ConstraintSystem sys;
    add_w_variables(sys, m);
    add_assignment_rows(sys, m);
    return sys;
}

ConstraintSystem build_leg_extension(const TspInstance& inst) {
    if (inst.n < 3)
        throw DegenerateConstructionError("travel-leg extension needs n >= 3");
    const int m = inst.m();
    ConstraintSystem sys;
    add_w_variables(sys, m);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (j != i) sys.add_variable(VarId::y(i, j));
    add_assignment_rows(sys, m);
    add_leg_rows(sys, m);
    return sys;
}

ConstraintSystem build_triplet_extension(const TspInstance& inst) {
    const int m = inst.m();
    require_triplet_size(m, "triplet extension");
    ConstraintSystem sys;
    add_w_variables(sys, m);
    for (const TripletKey& t : triplet_index_set(m))
        sys.add_variable(VarId::x(t));
    add_assignment_rows(sys, m);
    add_triplet_rows(sys, m);
    return sys;
}

ConstraintSystem build_combined_extension(const TspInstance& inst) {
    const int m = inst.m();
    require_triplet_size(m, "combined extension");
    ConstraintSystem sys;
    add_w_variables(sys, m);
    for (const TripletKey& t : triplet_index_set(m))
        sys.add_variable(VarId::x(t));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (j != i) sys.add_variable(VarId::y(i, j));
    add_assignment_rows(sys, m);
    add_triplet_rows(sys, m);
    add_leg_rows(sys, m);
    return sys;
}

Objective assignment_objective(const std::vector<std::vector<Rational>>& c) {
    const int m = static_cast<int>(c.size());
    if (m < 1) throw Error("empty cost matrix");
    Objective obj;
    for (int i = 1; i <= m; ++i) {
        if (static_cast<int>(c[i - 1].size()) != m)
            throw Error("cost matrix must be m x m");
        for (int r = 1; r <= m; ++r) obj.add(VarId::w(i, r), c[i - 1][r - 1]);
    }
    return obj;
}

Objective triplet_tour_objective(const TspInstance& inst) {
    const int m = inst.m();
    require_triplet_size(m, "triplet tour objective");
    const auto& d = inst.d;
    Objective obj;
    for (const TripletKey& t : triplet_index_set(m)) {
        const int i = t.first.level, p = t.first.stage;
        const int j = t.second.level, r = t.second.stage;
        const int k = t.third.level, s = t.third.stage;
        Rational cost(0);
        if (p == 1 && r == 2 && s == 3)
            cost = d[0][i] + d[i][j] + d[j][k];
        else if (p == 1 && r == m - 1 && s == m)
            cost = d[j][k] + d[k][0];
        else if (p == 1 && 3 <= r && r <= m - 2 && s == r + 1)
            cost = d[j][k];
        if (cost != 0) obj.add(VarId::x(t), cost);
    }
    return obj;
}

} // namespace tspag
