#include "tspag/consys.hpp"

#include "tspag/errors.hpp"

#include <charconv>

namespace tspag {

std::string to_string(VarFamily family) {
    switch (family) {
        case VarFamily::W: return "w";
        case VarFamily::Y: return "y";
        case VarFamily::X: return "x";
    }
    throw Error("bad family");
}

namespace {

signed char narrow(int v) {
    if (v < -128 || v > 127) throw Error("variable index out of range");
    return static_cast<signed char>(v);
}

} // namespace

VarId VarId::w(NodeId node) {
    VarId id;
    id.family = VarFamily::W;
    id.key = {narrow(node.level), narrow(node.stage), 0, 0, 0, 0};
    return id;
}

VarId VarId::y(int from, int to) {
    if (from == to) throw Error("self-loop leg variable");
    VarId id;
    id.family = VarFamily::Y;
    id.key = {narrow(from), narrow(to), 0, 0, 0, 0};
    return id;
}

VarId VarId::x(NodeId a, NodeId b, NodeId c) {
    TripletKey t{a, b, c};
    t.validate();
    VarId id;
    id.family = VarFamily::X;
    id.key = {narrow(a.level), narrow(a.stage), narrow(b.level),
              narrow(b.stage), narrow(c.level), narrow(c.stage)};
    return id;
}

NodeId VarId::w_node() const {
    if (family != VarFamily::W) throw Error("not a w variable");
    return NodeId{key[0], key[1]};
}

std::pair<int, int> VarId::y_pair() const {
    if (family != VarFamily::Y) throw Error("not a y variable");
    return {key[0], key[1]};
}

TripletKey VarId::x_triplet() const {
    if (family != VarFamily::X) throw Error("not an x variable");
    return TripletKey{NodeId{key[0], key[1]}, NodeId{key[2], key[3]},
                      NodeId{key[4], key[5]}};
}

std::string VarId::name() const {
    auto num = [](int v) { return std::to_string(v); };
    switch (family) {
        case VarFamily::W:
            return "w[" + num(key[0]) + "," + num(key[1]) + "]";
        case VarFamily::Y:
            return "y[" + num(key[0]) + "," + num(key[1]) + "]";
        case VarFamily::X:
            return "x[" + num(key[0]) + "," + num(key[1]) + "|" + num(key[2]) +
                   "," + num(key[3]) + "|" + num(key[4]) + "," + num(key[5]) + "]";
    }
    throw Error("bad family");
}

VarId VarId::parse(const std::string& name) {
    auto fail = [&]() -> VarId {
        throw ParseError("bad variable name: \"" + name + "\"");
    };
    if (name.size() < 6 || name[1] != '[' || name.back() != ']') return fail();
    const char kind = name[0];
    std::vector<int> nums;
    int current = 0;
    bool has_digit = false;
    for (std::size_t i = 2; i + 1 <= name.size() - 1; ++i) {
        char ch = name[i];
        if (ch >= '0' && ch <= '9') {
            current = current * 10 + (ch - '0');
            has_digit = true;
        } else if (ch == ',' || ch == '|') {
            if (!has_digit) return fail();
            nums.push_back(current);
            current = 0;
            has_digit = false;
        } else {
            return fail();
        }
    }
    if (!has_digit) return fail();
    nums.push_back(current);
    if (kind == 'w' && nums.size() == 2) return VarId::w(nums[0], nums[1]);
    if (kind == 'y' && nums.size() == 2) return VarId::y(nums[0], nums[1]);
    if (kind == 'x' && nums.size() == 6)
        return VarId::x(NodeId{nums[0], nums[1]}, NodeId{nums[2], nums[3]},
                        NodeId{nums[4], nums[5]});
    return fail();
}

void LinRow::add(VarId var, const Rational& delta) {
    auto [it, inserted] = coef.try_emplace(var, delta);
    if (!inserted) it->second += delta;
    if (it->second == 0) coef.erase(it);
}

Rational LinRow::coefficient(VarId var) const {
    auto it = coef.find(var);
    return it == coef.end() ? Rational(0) : it->second;
}

Rational LinRow::evaluate(const std::map<VarId, Rational>& point) const {
    Rational lhs(0);
    for (const auto& [var, c] : coef) {
        auto it = point.find(var);
        if (it != point.end()) lhs += c * it->second;
    }
    return lhs;
}

bool LinRow::satisfied_by(const std::map<VarId, Rational>& point) const {
    Rational lhs = evaluate(point);
    return rel == Rel::EQ ? lhs == rhs : lhs <= rhs;
}

void ConstraintSystem::add_variable(VarId var, bool nonnegative) {
    auto [it, inserted] = index_.try_emplace(var, variable_count());
    if (!inserted) throw Error("duplicate variable " + var.name());
    variables_.push_back(var);
    if (nonnegative) nonneg_.insert(var);
}

void ConstraintSystem::add_row(LinRow row) {
    for (const auto& [var, c] : row.coef)
        if (!has_variable(var))
            throw UnknownVariableError("row \"" + row.label +
                                       "\" references undeclared " + var.name());
    rows_.push_back(std::move(row));
}

int ConstraintSystem::column_of(VarId var) const {
    auto it = index_.find(var);
    if (it == index_.end())
        throw UnknownVariableError("undeclared variable " + var.name());
    return it->second;
}

int ConstraintSystem::equality_count() const {
    int count = 0;
    for (const auto& row : rows_)
        if (row.rel == Rel::EQ) ++count;
    return count;
}

std::vector<VarId> ConstraintSystem::family_members(VarFamily family) const {
    std::vector<VarId> members;
    for (const VarId& var : variables_)
        if (var.family == family) members.push_back(var);
    return members;
}

void Objective::add(VarId var, const Rational& delta) {
    auto [it, inserted] = coef.try_emplace(var, delta);
    if (!inserted) it->second += delta;
    if (it->second == 0) coef.erase(it);
}

Rational Objective::coefficient(VarId var) const {
    auto it = coef.find(var);
    return it == coef.end() ? Rational(0) : it->second;
}

Rational Objective::evaluate(const std::map<VarId, Rational>& point) const {
    Rational total(0);
    for (const auto& [var, c] : coef) {
        auto it = point.find(var);
        if (it != point.end()) total += c * it->second;
    }
    return total;
}

} // namespace tspag
