#include "tspag/simplex.hpp"

#include "tspag/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace tspag {

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    throw Error("bad status");
}

namespace {

/// Dense rational tableau for the two-phase method. The right-hand side is
/// the last column; the cost row is the last row.
class Tableau {
  public:
    Tableau(const StandardLp& lp)
        : lp_(lp),
          rows_(static_cast<int>(lp.A.size())),
          structural_cols_(static_cast<int>(lp.col_names.size())) {
        first_artificial_ = structural_cols_;
        // Count rows that need an artificial: no usable slack basis.
        std::vector<int> art_of_row(rows_, -1);
        int art_count = 0;
        for (int i = 0; i < rows_; ++i) {
            if (!(lp.slack_of_row[i] >= 0 && lp.b[i] >= 0))
                art_of_row[i] = art_count++;
        }
        cols_ = structural_cols_ + art_count;
        rhs_col_ = cols_;

        table_.assign(rows_ + 1, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.assign(rows_, -1);
        for (int i = 0; i < rows_; ++i) {
            const bool flip = lp.b[i] < 0;
            for (int j = 0; j < structural_cols_; ++j)
                table_[i][j] = flip ? Rational(-lp.A[i][j]) : lp.A[i][j];
            table_[i][rhs_col_] = flip ? Rational(-lp.b[i]) : lp.b[i];
            if (art_of_row[i] >= 0) {
                basis_[i] = first_artificial_ + art_of_row[i];
                table_[i][basis_[i]] = 1;
            } else {
                basis_[i] = lp.slack_of_row[i];
            }
        }
    }

    LpStatus run() {
        if (!phase_one()) return LpStatus::Infeasible;
        return phase_two();
    }

    std::vector<Rational> extract_x() const {
        std::vector<Rational> x(structural_cols_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            if (basis_[i] >= 0 && basis_[i] < structural_cols_)
                x[basis_[i]] = table_[i][rhs_col_];
        return x;
    }

    std::vector<std::string> basis_names() const {
        std::vector<std::string> names;
        for (int i = 0; i < rows_; ++i) {
            if (dead_rows_.count(i)) continue;
            names.push_back(basis_[i] < structural_cols_
                                ? lp_.col_names[basis_[i]]
                                : "artificial#" + std::to_string(basis_[i] -
                                                                 first_artificial_));
        }
        return names;
    }

    nlohmann::json dump() const {
        nlohmann::json out;
        out["columns"] = nlohmann::json::array();
        for (int j = 0; j < structural_cols_; ++j)
            out["columns"].push_back(lp_.col_names[j]);
        for (int j = first_artificial_; j < cols_; ++j)
            out["columns"].push_back("artificial#" +
                                     std::to_string(j - first_artificial_));
        out["basis"] = basis_names();
        out["rows"] = nlohmann::json::array();
        for (int i = 0; i < rows_; ++i) {
            if (dead_rows_.count(i)) continue;
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j <= cols_; ++j)
                row.push_back(rational_to_string(table_[i][j]));
            out["rows"].push_back(std::move(row));
        }
        nlohmann::json cost = nlohmann::json::array();
        for (int j = 0; j <= cols_; ++j)
            cost.push_back(rational_to_string(table_[rows_][j]));
        out["cost_row"] = std::move(cost);
        return out;
    }

  private:
    // Pivot on (pr, pc), updating every live row and the cost row.
    void pivot(int pr, int pc) {
        auto& prow = table_[pr];
        if (prow[pc] != 1) {
            const Rational inv = Rational(1) / prow[pc];
            for (int j = 0; j <= cols_; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        }
        nonzero_cols_.clear();
        for (int j = 0; j <= cols_; ++j)
            if (prow[j] != 0) nonzero_cols_.push_back(j);
        for (int i = 0; i <= rows_; ++i) {
            if (i == pr || dead_rows_.count(i)) continue;
            auto& row = table_[i];
            const Rational factor = row[pc];
            if (factor == 0) continue;
            for (int j : nonzero_cols_) row[j] -= factor * prow[j];
            row[pc] = 0;
        }
        basis_[pr] = pc;
    }

    // Bland entering rule: smallest column index with a negative reduced
    // cost, restricted to columns < limit.
    int entering_column(int limit) const {
        const auto& cost = table_[rows_];
        for (int j = 0; j < limit; ++j)
            if (cost[j] < 0) return j;
        return -1;
    }

    // Ratio test; ties resolved toward the smallest basic column index.
    int leaving_row(int pc) const {
        int best = -1;
        Rational best_ratio;
        for (int i = 0; i < rows_; ++i) {
            if (dead_rows_.count(i) || table_[i][pc] <= 0) continue;
            Rational ratio = table_[i][rhs_col_] / table_[i][pc];
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Returns Optimal when the phase finished, Unbounded otherwise.
    LpStatus minimize(int entering_limit) {
        for (;;) {
            const int pc = entering_column(entering_limit);
            if (pc < 0) return LpStatus::Optimal;
            const int pr = leaving_row(pc);
            if (pr < 0) return LpStatus::Unbounded;
            pivot(pr, pc);
        }
    }

    bool phase_one() {
        if (first_artificial_ == cols_) {
            // All rows start on slack basis; nothing to do.
            return true;
        }
        // Cost row for min(sum of artificials), with basic columns priced out.
        auto& cost = table_[rows_];
        std::fill(cost.begin(), cost.end(), Rational(0));
        for (int j = first_artificial_; j < cols_; ++j) cost[j] = 1;
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            for (int j = 0; j <= cols_; ++j)
                if (table_[i][j] != 0) cost[j] -= table_[i][j];
        }
        if (minimize(cols_) != LpStatus::Optimal)
            throw Error("phase one cannot be unbounded");
        if (table_[rows_][rhs_col_] != 0) return false;  // -z* > 0: infeasible

        // Drive leftover artificials out of the basis; rows that cannot
        // pivot are redundant and go dead.
        for (int i = 0; i < rows_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            int pc = -1;
            for (int j = 0; j < first_artificial_; ++j)
                if (table_[i][j] != 0) { pc = j; break; }
            if (pc >= 0)
                pivot(i, pc);
            else
                dead_rows_.insert(i);
        }
        return true;
    }

    LpStatus phase_two() {
        auto& cost = table_[rows_];
        std::fill(cost.begin(), cost.end(), Rational(0));
        for (int j = 0; j < structural_cols_; ++j) cost[j] = lp_.c[j];
        for (int i = 0; i < rows_; ++i) {
            if (dead_rows_.count(i)) continue;
            const Rational price = basis_[i] < structural_cols_
                                       ? lp_.c[basis_[i]]
                                       : Rational(0);
            if (price == 0) continue;
            for (int j = 0; j <= cols_; ++j)
                if (table_[i][j] != 0) cost[j] -= price * table_[i][j];
        }
        return minimize(first_artificial_);
    }

    const StandardLp& lp_;
    int rows_;
    int structural_cols_;
    int cols_ = 0;
    int rhs_col_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<Rational>> table_;
    std::vector<int> basis_;
    std::set<int> dead_rows_;
    std::vector<int> nonzero_cols_;
};

} // namespace

StandardSolution simplex_solve(const StandardLp& lp, const SolveOptions& options) {
    const std::size_t rows = lp.A.size();
    if (lp.b.size() != rows || lp.slack_of_row.size() != rows)
        throw Error("inconsistent standard form");
    for (const auto& row : lp.A)
        if (row.size() != lp.col_names.size())
            throw Error("inconsistent standard form");
    if (lp.c.size() != lp.col_names.size())
        throw Error("inconsistent standard form");

    Tableau tableau(lp);
    StandardSolution result;
    result.status = tableau.run();
    if (!options.dump_tableau_path.empty()) {
        std::ofstream out(options.dump_tableau_path);
        out << tableau.dump().dump(2) << "\n";
    }
    if (result.status != LpStatus::Optimal) return result;
    result.x = tableau.extract_x();
    result.objective = 0;
    for (std::size_t j = 0; j < result.x.size(); ++j)
        result.objective += lp.c[j] * result.x[j];
    result.basis_names = tableau.basis_names();
    return result;
}

StandardForm to_standard_form(const ConstraintSystem& sys, const Objective& obj) {
    StandardForm form;
    StandardLp& lp = form.lp;

    for (const auto& [var, c] : obj.coef)
        if (!sys.has_variable(var))
            throw UnknownVariableError("objective references undeclared " +
                                       var.name());

    std::map<VarId, std::pair<int, int>> cols;  // var -> (plus col, minus col)
    for (const VarId& var : sys.variables()) {
        const int plus = static_cast<int>(lp.col_names.size());
        lp.col_names.push_back(var.name());
        int minus = -1;
        if (!sys.nonneg().count(var)) {
            minus = static_cast<int>(lp.col_names.size());
            lp.col_names.push_back(var.name() + "^-");
        }
        cols[var] = {plus, minus};
        form.col_var.emplace_back(var, +1);
        if (minus >= 0) form.col_var.emplace_back(var, -1);
    }

    const int structural = static_cast<int>(lp.col_names.size());
    const int n_slacks =
        static_cast<int>(std::count_if(sys.rows().begin(), sys.rows().end(),
                                       [](const LinRow& r) { return r.rel == Rel::LE; }));
    const int total_cols = structural + n_slacks;

    int next_slack = structural;
    for (const LinRow& row : sys.rows()) {
        std::vector<Rational> a(total_cols, Rational(0));
        for (const auto& [var, c] : row.coef) {
            const auto [plus, minus] = cols.at(var);
            a[plus] = c;
            if (minus >= 0) a[minus] = -c;
        }
        int slack = -1;
        if (row.rel == Rel::LE) {
            slack = next_slack++;
            a[slack] = 1;
            if (static_cast<int>(lp.col_names.size()) <= slack)
                lp.col_names.resize(slack + 1);
            lp.col_names[slack] =
                "slack[" + (row.label.empty()
                                ? "#" + std::to_string(lp.A.size())
                                : row.label) + "]";
        }
        lp.A.push_back(std::move(a));
        lp.b.push_back(row.rhs);
        lp.slack_of_row.push_back(slack);
    }
    lp.col_names.resize(total_cols);
    for (int j = next_slack; j < total_cols; ++j)
        lp.col_names[j] = "slack#" + std::to_string(j);

    lp.c.assign(total_cols, Rational(0));
    for (const auto& [var, c] : obj.coef) {
        const auto [plus, minus] = cols.at(var);
        lp.c[plus] = c;
        if (minus >= 0) lp.c[minus] = -c;
    }
    return form;
}

std::map<VarId, Rational>
StandardForm::point_from(const std::vector<Rational>& x) const {
    std::map<VarId, Rational> point;
    for (std::size_t j = 0; j < col_var.size(); ++j) {
        const auto& [var, sign] = col_var[j];
        auto [it, inserted] = point.try_emplace(var, Rational(0));
        if (sign > 0)
            it->second += x[j];
        else
            it->second -= x[j];
    }
    return point;
}

LpSolution solve(const ConstraintSystem& sys, const Objective& obj,
                 const SolveOptions& options) {
    StandardForm form = to_standard_form(sys, obj);
    StandardSolution core = simplex_solve(form.lp, options);

    LpSolution result;
    result.status = core.status;
    if (core.status != LpStatus::Optimal) return result;
    result.point = form.point_from(core.x);
    result.objective_value = obj.evaluate(result.point);
    result.basis = std::move(core.basis_names);
    return result;
}

std::vector<Violation> check_membership(const ConstraintSystem& sys,
                                        const std::map<VarId, Rational>& point) {
    for (const auto& [var, value] : point)
        if (!sys.has_variable(var))
            throw UnknownVariableError("point references undeclared " + var.name());

    std::vector<Violation> violations;
    for (int i = 0; i < sys.row_count(); ++i) {
        const LinRow& row = sys.rows()[i];
        Rational lhs = row.evaluate(point);
        const bool ok = row.rel == Rel::EQ ? lhs == row.rhs : lhs <= row.rhs;
        if (!ok)
            violations.push_back(Violation{i, row.label, lhs, row.rel, row.rhs});
    }
    for (const VarId& var : sys.nonneg()) {
        auto it = point.find(var);
        if (it != point.end() && it->second < 0)
            violations.push_back(Violation{-1, "nonneg(" + var.name() + ")",
                                           -it->second, Rel::LE, Rational(0)});
    }
    return violations;
}

LpSolution fiber_feasible(const ConstraintSystem& sys,
                          const std::map<VarId, Rational>& fixed,
                          const Objective& obj) {
    // The fixed set must cover whole families, nothing partial.
    std::set<VarFamily> fixed_families;
    for (const auto& [var, value] : fixed) {
        if (!sys.has_variable(var))
            throw UnknownVariableError("fixed point references undeclared " +
                                       var.name());
        fixed_families.insert(var.family);
    }
    for (const VarId& var : sys.variables())
        if (fixed_families.count(var.family) && !fixed.count(var))
            throw Error("fixed point must cover the whole " +
                        to_string(var.family) + " family; missing " + var.name());

    LpSolution infeasible;
    infeasible.status = LpStatus::Infeasible;

    for (const auto& [var, value] : fixed)
        if (sys.nonneg().count(var) && value < 0) return infeasible;

    ConstraintSystem reduced;
    for (const VarId& var : sys.variables())
        if (!fixed.count(var))
            reduced.add_variable(var, sys.nonneg().count(var) > 0);

    for (const LinRow& row : sys.rows()) {
        LinRow slim(row.rel, row.rhs, row.label);
        for (const auto& [var, c] : row.coef) {
            auto it = fixed.find(var);
            if (it != fixed.end())
                slim.rhs -= c * it->second;
            else
                slim.add(var, c);
        }
        if (slim.coef.empty()) {
            const bool ok = slim.rel == Rel::EQ ? slim.rhs == 0 : slim.rhs >= 0;
            if (!ok) return infeasible;
            continue;
        }
        reduced.add_row(std::move(slim));
    }

    Objective reduced_obj;
    Rational fixed_contribution(0);
    for (const auto& [var, c] : obj.coef) {
        auto it = fixed.find(var);
        if (it != fixed.end())
            fixed_contribution += c * it->second;
        else
            reduced_obj.add(var, c);
    }

    LpSolution inner = solve(reduced, reduced_obj);
    if (inner.status != LpStatus::Optimal) return inner;

    inner.point.insert(fixed.begin(), fixed.end());
    inner.objective_value += fixed_contribution;
    return inner;
}

bool lp_contained_in(const ConstraintSystem& inner, const ConstraintSystem& outer,
                     std::string* why) {
    auto explain = [&](const std::string& text) {
        if (why) *why = text;
        return false;
    };
    for (const VarId& var : outer.variables())
        if (!inner.has_variable(var))
            return explain("inner system lacks variable " + var.name());

    auto extremum = [&](const std::map<VarId, Rational>& coef, bool maximize)
        -> std::optional<Rational> {
        Objective probe;
        for (const auto& [var, c] : coef)
            probe.add(var, maximize ? Rational(-c) : c);
        LpSolution sol = solve(inner, probe);
        if (sol.status == LpStatus::Infeasible)
            return Rational(0);  // empty inner set is contained in anything
        if (sol.status == LpStatus::Unbounded) return std::nullopt;
        return maximize ? Rational(-sol.objective_value) : sol.objective_value;
    };

    // An empty inner set is trivially contained.
    {
        LpSolution any = solve(inner, Objective{});
        if (any.status == LpStatus::Infeasible) return true;
    }

    for (const LinRow& row : outer.rows()) {
        auto sup = extremum(row.coef, true);
        if (!sup || *sup > row.rhs)
            return explain("row \"" + row.label + "\" not implied (sup " +
                           (sup ? rational_to_string(*sup) : "unbounded") +
                           " vs rhs " + rational_to_string(row.rhs) + ")");
        if (row.rel == Rel::EQ) {
            auto inf = extremum(row.coef, false);
            if (!inf || *inf < row.rhs)
                return explain("row \"" + row.label + "\" not implied (inf " +
                               (inf ? rational_to_string(*inf) : "unbounded") +
                               " vs rhs " + rational_to_string(row.rhs) + ")");
        }
    }
    for (const VarId& var : outer.nonneg()) {
        std::map<VarId, Rational> coef{{var, Rational(1)}};
        auto inf = extremum(coef, false);
        if (!inf || *inf < 0)
            return explain("nonnegativity of " + var.name() + " not implied");
    }
    return true;
}

} // namespace tspag
