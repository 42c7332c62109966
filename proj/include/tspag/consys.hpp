#ifndef TSPAG_CONSYS_HPP
#define TSPAG_CONSYS_HPP

#include "tspag/instance.hpp"
#include "tspag/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tspag {

/// The three variable classes: assignment entries (W), travel legs (Y),
/// node triplets (X).
enum class VarFamily : unsigned char { W, Y, X };

std::string to_string(VarFamily family);

/// Identifier of one scalar variable. The key layout depends on the family:
///   W: {level, stage}
///   Y: {from city, to city}
///   X: {i, p, j, r, k, s} for nodes (i,p), (j,r), (k,s)
struct VarId {
    VarFamily family = VarFamily::W;
    std::array<signed char, 6> key{};

    static VarId w(NodeId node);
    static VarId w(int level, int stage) { return w(NodeId{level, stage}); }
    static VarId y(int from, int to);
    static VarId x(NodeId a, NodeId b, NodeId c);
    static VarId x(const TripletKey& t) { return x(t.first, t.second, t.third); }

    NodeId w_node() const;
    std::pair<int, int> y_pair() const;
    TripletKey x_triplet() const;

    auto operator<=>(const VarId&) const = default;

    /// Text form used in JSON and reports: "w[2,3]", "y[0,4]",
    /// "x[1,1|2,2|4,3]".
    std::string name() const;
    static VarId parse(const std::string& name);
};

enum class Rel : unsigned char { EQ, LE };

/// One linear row: sparse exact coefficients, a relation, a right-hand side.
/// Zero coefficients are never stored; >= rows are negated on construction.
struct LinRow {
    std::map<VarId, Rational> coef;
    Rel rel = Rel::EQ;
    Rational rhs = Rational(0);
    std::string label;

    LinRow() = default;
    LinRow(Rel rel_, Rational rhs_, std::string label_ = "")
        : rel(rel_), rhs(std::move(rhs_)), label(std::move(label_)) {}

    /// Accumulate delta onto the variable's coefficient, dropping exact zeros.
    void add(VarId var, const Rational& delta);
    Rational coefficient(VarId var) const;

    /// Exact left-hand-side value at a point (absent variables are zero).
    Rational evaluate(const std::map<VarId, Rational>& point) const;
    bool satisfied_by(const std::map<VarId, Rational>& point) const;

    bool same_constraint(const LinRow& other) const {
        return rel == other.rel && rhs == other.rhs && coef == other.coef;
    }
};

/// An H-representation: ordered variables, rows, and the subset of variables
/// constrained nonnegative.
class ConstraintSystem {
  public:
    void add_variable(VarId var, bool nonnegative = true);
    void add_row(LinRow row);

    bool has_variable(VarId var) const { return index_.count(var) > 0; }
    int column_of(VarId var) const;
    int variable_count() const { return static_cast<int>(variables_.size()); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int equality_count() const;

    const std::vector<VarId>& variables() const { return variables_; }
    const std::vector<LinRow>& rows() const { return rows_; }
    const std::set<VarId>& nonneg() const { return nonneg_; }

    std::vector<VarId> family_members(VarFamily family) const;

  private:
    std::vector<VarId> variables_;
    std::map<VarId, int> index_;
    std::vector<LinRow> rows_;
    std::set<VarId> nonneg_;
};

/// A minimization objective; coefficients only on declared variables.
struct Objective {
    std::map<VarId, Rational> coef;

    void add(VarId var, const Rational& delta);
    Rational coefficient(VarId var) const;
    Rational evaluate(const std::map<VarId, Rational>& point) const;
};

} // namespace tspag

#endif
