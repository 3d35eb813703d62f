#pragma once

#include <cstddef>
#include <vector>

#include "toricsmith/rational.hpp"

namespace toricsmith {

/// One linear row <coeffs, x> (<= or =) rhs.
struct LinearRow {
    RatVector coeffs;
    Rational rhs;
};

/// maximize <objective, x> over free x subject to the inequality and equality rows.
struct LpProblem {
    RatVector objective;
    std::vector<LinearRow> inequalities;  // <a, x> <= b
    std::vector<LinearRow> equalities;    // <c, x> = d

    std::size_t variable_count() const noexcept { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum;
    RatVector witness;
    std::vector<std::size_t> tight;  // inequality indices active at the witness
};

/// Exact two-phase primal simplex with Bland's rule. Free variables are split
/// into positive and negative parts, so an Optimal witness is a basic solution.
LpResult lp_solve(const LpProblem& problem);

}  // namespace toricsmith
