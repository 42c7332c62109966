#ifndef TSPAG_INSTANCE_HPP
#define TSPAG_INSTANCE_HPP

#include "tspag/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace tspag {

/// A travel instance: n cities labelled 0..m with city 0 the fixed depot,
/// and an n-by-n exact travel-cost matrix. The diagonal is stored but never
/// read; d need not be symmetric.
struct TspInstance {
    int n = 0;
    std::vector<std::vector<Rational>> d;

    TspInstance() = default;
    TspInstance(int n_, std::vector<std::vector<Rational>> d_);

    int m() const { return n - 1; }

    /// All-zero costs, useful for structural work that only needs the size.
    static TspInstance zero(int n);
};

/// A node of the assignment graph: city `level` visited at position `stage`
/// (both in 1..m).
struct NodeId {
    int level = 0;
    int stage = 0;
    auto operator<=>(const NodeId&) const = default;
};

/// A tour as the visiting order of cities 1..m; travel implicitly starts and
/// ends at city 0.
struct Tour {
    std::vector<int> order;

    int m() const { return static_cast<int>(order.size()); }
    bool operator==(const Tour&) const = default;
    auto operator<=>(const Tour&) const = default;

    /// Throws InvalidTourError unless order is a permutation of {1,...,m}.
    void validate(int expected_m = -1) const;
};

/// Dense m-by-m vector over assignment-graph nodes.
class AssignmentVector {
  public:
    explicit AssignmentVector(int m);

    int m() const { return m_; }
    const Rational& at(NodeId node) const;
    Rational& at(NodeId node);
    const Rational& at(int level, int stage) const { return at(NodeId{level, stage}); }
    Rational& at(int level, int stage) { return at(NodeId{level, stage}); }

    bool is_integral() const;
    /// Integral with all entries in {0,1} and unit row/column sums.
    bool is_permutation() const;

    bool operator==(const AssignmentVector&) const = default;

  private:
    int m_;
    std::vector<Rational> values_;
};

/// Travel-leg vector over ordered city pairs (i,j), i != j, including the
/// depot; dimension n*(n-1).
class LegVector {
  public:
    explicit LegVector(int n);

    int n() const { return n_; }
    int dimension() const { return n_ * (n_ - 1); }
    const Rational& at(int from, int to) const;
    Rational& at(int from, int to);

    bool operator==(const LegVector&) const = default;

  private:
    int index(int from, int to) const;

    int n_;
    std::vector<Rational> values_;
};

/// Key of a triplet variable: three assignment-graph nodes at strictly
/// increasing stages with pairwise distinct levels.
struct TripletKey {
    NodeId first, second, third;

    auto operator<=>(const TripletKey&) const = default;
    /// Throws Error when stages are not increasing or levels collide.
    void validate() const;
};

/// Sparse vector over triplet keys; absent keys are zero.
class TripletVector {
  public:
    explicit TripletVector(int m) : m_(m) {}

    int m() const { return m_; }
    void set(const TripletKey& key, Rational value);
    Rational at(const TripletKey& key) const;
    const std::map<TripletKey, Rational>& entries() const { return values_; }

  private:
    int m_;
    std::map<TripletKey, Rational> values_;
};

} // namespace tspag

#endif
