#ifndef TSPAG_SIMPLEX_HPP
#define TSPAG_SIMPLEX_HPP

#include "tspag/consys.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tspag {

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::map<VarId, Rational> point;         // populated when Optimal
    Rational objective_value = Rational(0);  // exact objective at point
    std::vector<std::string> basis;          // basic column names
};

struct SolveOptions {
    /// When nonempty, the final tableau and basis are written here as JSON.
    std::string dump_tableau_path;
};

/// Exact two-phase primal simplex with Bland's smallest-index rule.
/// Deterministic given input ordering; terminates on every input.
LpSolution solve(const ConstraintSystem& sys, const Objective& obj,
                 const SolveOptions& options = {});

struct Violation {
    int row_index = -1;  // -1 for nonnegativity pseudo-rows
    std::string label;
    Rational lhs;
    Rel rel = Rel::EQ;
    Rational rhs;
};

/// Evaluate every row and every nonnegativity mark at the point (missing
/// variables are zero). Returns the violated ones; empty means membership.
/// A point that names an undeclared variable throws UnknownVariableError.
std::vector<Violation> check_membership(const ConstraintSystem& sys,
                                        const std::map<VarId, Rational>& point);

/// Substitute fixed values for one or more complete variable families and
/// solve the remaining LP. Optimal status means the fiber is nonempty; the
/// returned point merges fixed and free values, and the objective includes
/// the fixed contribution.
LpSolution fiber_feasible(const ConstraintSystem& sys,
                          const std::map<VarId, Rational>& fixed,
                          const Objective& obj = {});

/// True when every point of `inner` satisfies all rows and nonnegativity
/// marks of `outer`, certified by per-row optimization over `inner`.
/// On failure, `why` (if given) names the first uncontained constraint.
bool lp_contained_in(const ConstraintSystem& inner, const ConstraintSystem& outer,
                     std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Low-level interface shared by the membership oracle and vertex enumeration.

/// min c.x subject to A x = b, x >= 0.
struct StandardLp {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<std::string> col_names;
    /// Per row, a column holding a +1 slack usable as an initial basis
    /// column when b >= 0, or -1.
    std::vector<int> slack_of_row;
};

struct StandardSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;
    Rational objective = Rational(0);
    std::vector<std::string> basis_names;
};

StandardSolution simplex_solve(const StandardLp& lp, const SolveOptions& options = {});

/// Standard-form image of a constraint system: free variables are split into
/// positive and negative parts, LE rows gain slack columns.
struct StandardForm {
    StandardLp lp;
    /// Structural column -> (variable, +1 or -1 sign); slack columns excluded.
    std::vector<std::pair<VarId, int>> col_var;

    std::map<VarId, Rational> point_from(const std::vector<Rational>& x) const;
};

StandardForm to_standard_form(const ConstraintSystem& sys, const Objective& obj = {});

} // namespace tspag

#endif
