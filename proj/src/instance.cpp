#include "tspag/instance.hpp"

#include "tspag/errors.hpp"

#include <algorithm>

namespace tspag {

TspInstance::TspInstance(int n_, std::vector<std::vector<Rational>> d_)
    : n(n_), d(std::move(d_)) {
    if (n < 2)
        throw Error("instance needs at least 2 cities, got " + std::to_string(n));
    if (static_cast<int>(d.size()) != n)
        throw Error("cost matrix must be n x n");
    for (const auto& row : d)
        if (static_cast<int>(row.size()) != n)
            throw Error("cost matrix must be n x n");
}

TspInstance TspInstance::zero(int n) {
    return TspInstance(n, std::vector<std::vector<Rational>>(
                              n, std::vector<Rational>(n, Rational(0))));
}

void Tour::validate(int expected_m) const {
    const int m = this->m();
    if (expected_m >= 0 && m != expected_m)
        throw InvalidTourError("tour length " + std::to_string(m) +
                               " does not match m = " + std::to_string(expected_m));
    if (m == 0)
        throw InvalidTourError("empty tour");
    std::vector<bool> seen(m + 1, false);
    for (int city : order) {
        if (city < 1 || city > m || seen[city])
            throw InvalidTourError("tour order is not a permutation of 1.." +
                                   std::to_string(m));
        seen[city] = true;
    }
}

AssignmentVector::AssignmentVector(int m)
    : m_(m), values_(static_cast<std::size_t>(m) * m, Rational(0)) {
    if (m < 1)
        throw Error("assignment vector needs m >= 1");
}

const Rational& AssignmentVector::at(NodeId node) const {
    return const_cast<AssignmentVector*>(this)->at(node);
}

Rational& AssignmentVector::at(NodeId node) {
    if (node.level < 1 || node.level > m_ || node.stage < 1 || node.stage > m_)
        throw Error("node out of range");
    return values_[static_cast<std::size_t>(node.level - 1) * m_ + (node.stage - 1)];
}

bool AssignmentVector::is_integral() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return is_integer(v); });
}

bool AssignmentVector::is_permutation() const {
    for (const Rational& v : values_)
        if (!is_binary(v)) return false;
    for (int i = 1; i <= m_; ++i) {
        Rational row_sum(0), col_sum(0);
        for (int r = 1; r <= m_; ++r) {
            row_sum += at(i, r);
            col_sum += at(r, i);
        }
        if (row_sum != 1 || col_sum != 1) return false;
    }
    return true;
}

LegVector::LegVector(int n)
    : n_(n), values_(static_cast<std::size_t>(n) * (n - 1), Rational(0)) {
    if (n < 2)
        throw Error("leg vector needs n >= 2");
}

int LegVector::index(int from, int to) const {
    if (from < 0 || from >= n_ || to < 0 || to >= n_ || from == to)
        throw Error("leg (" + std::to_string(from) + "," + std::to_string(to) +
                    ") out of range");
    return from * (n_ - 1) + (to > from ? to - 1 : to);
}

const Rational& LegVector::at(int from, int to) const {
    return values_[index(from, to)];
}

Rational& LegVector::at(int from, int to) {
    return values_[index(from, to)];
}

void TripletKey::validate() const {
    if (!(first.stage < second.stage && second.stage < third.stage))
        throw Error("triplet stages must strictly increase");
    if (first.level == second.level || first.level == third.level ||
        second.level == third.level)
        throw Error("triplet levels must be pairwise distinct");
}

void TripletVector::set(const TripletKey& key, Rational value) {
    key.validate();
    if (value == 0)
        values_.erase(key);
    else
        values_[key] = std::move(value);
}

Rational TripletVector::at(const TripletKey& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? Rational(0) : it->second;
}

} // namespace tspag
