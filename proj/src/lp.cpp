#include "toricsmith/lp.hpp"

#include <optional>

namespace toricsmith {

namespace {

// Dense simplex tableau. Column layout: x+ (n), x- (n), slacks (m_ineq),
// artificials; the right-hand side lives in a separate vector.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : a_(rows, cols), rhs_(rows), basis_(rows), cost_(cols) {}

    RatMatrix a_;
    RatVector rhs_;
    std::vector<std::size_t> basis_;
    RatVector cost_;      // reduced costs of the current objective
    Rational value_ = 0;  // current objective value
    std::vector<bool> allowed_;

    void set_objective(const RatVector& c) {
        cost_ = c;
        value_ = 0;
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            const Rational cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < a_.cols(); ++j)
                if (sgn(a_(i, j)) != 0) cost_[j] -= cb * a_(i, j);
            value_ += cb * rhs_[i];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = 1 / a_(r, c);
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (sgn(a_(r, j)) != 0) a_(r, j) *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            if (i == r || sgn(a_(i, c)) == 0) continue;
            const Rational f = a_(i, c);
            for (std::size_t j = 0; j < a_.cols(); ++j)
                if (sgn(a_(r, j)) != 0) a_(i, j) -= f * a_(r, j);
            rhs_[i] -= f * rhs_[r];
        }
        if (sgn(cost_[c]) != 0) {
            const Rational f = cost_[c];
            for (std::size_t j = 0; j < a_.cols(); ++j)
                if (sgn(a_(r, j)) != 0) cost_[j] -= f * a_(r, j);
            value_ += f * rhs_[r];
        }
        basis_[r] = c;
    }

    // Bland's rule: lowest-index improving column, ratio ties to lowest basic index.
    // Returns false on unboundedness.
    bool optimize() {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < a_.cols(); ++j) {
                if (allowed_[j] && sgn(cost_[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < a_.rows(); ++i) {
                if (sgn(a_(i, *enter)) <= 0) continue;
                Rational ratio = rhs_[i] / a_(i, *enter);
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void remove_row(std::size_t r) {
        RatMatrix smaller(a_.rows() - 1, a_.cols());
        for (std::size_t i = 0, k = 0; i < a_.rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < a_.cols(); ++j) smaller(k, j) = a_(i, j);
            ++k;
        }
        a_ = std::move(smaller);
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }
};

void check_shapes(const LpProblem& p) {
    const std::size_t n = p.variable_count();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "lp_solve: no variables");
    for (const auto& row : p.inequalities)
        if (row.coeffs.size() != n) throw Error(ErrorKind::DimensionMismatch, "lp_solve: inequality row length");
    for (const auto& row : p.equalities)
        if (row.coeffs.size() != n) throw Error(ErrorKind::DimensionMismatch, "lp_solve: equality row length");
}

}  // namespace

LpResult lp_solve(const LpProblem& problem) {
    check_shapes(problem);
    const std::size_t n = problem.variable_count();
    const std::size_t m_ineq = problem.inequalities.size();
    const std::size_t m_eq = problem.equalities.size();
    const std::size_t rows = m_ineq + m_eq;

    std::vector<bool> needs_artificial(rows, false);
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m_ineq; ++i)
        if (sgn(problem.inequalities[i].rhs) < 0) needs_artificial[i] = true;
    for (std::size_t i = 0; i < m_eq; ++i) needs_artificial[m_ineq + i] = true;
    for (bool b : needs_artificial) artificial_count += b ? 1 : 0;

    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + m_ineq;
    const std::size_t cols = art0 + artificial_count;

    Tableau t(rows, cols);
    std::size_t next_art = art0;
    for (std::size_t i = 0; i < rows; ++i) {
        const LinearRow& row = i < m_ineq ? problem.inequalities[i] : problem.equalities[i - m_ineq];
        const bool flip = sgn(row.rhs) < 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(row.coeffs[k]) == 0) continue;
            const Rational c = flip ? Rational(-row.coeffs[k]) : row.coeffs[k];
            t.a_(i, k) = c;
            t.a_(i, n + k) = -c;
        }
        if (i < m_ineq) t.a_(i, slack0 + i) = flip ? -1 : 1;
        t.rhs_[i] = flip ? Rational(-row.rhs) : row.rhs;
        if (needs_artificial[i]) {
            t.a_(i, next_art) = 1;
            t.basis_[i] = next_art++;
        } else {
            t.basis_[i] = slack0 + i;
        }
    }
    t.allowed_.assign(cols, true);

    LpResult result;
    if (artificial_count > 0) {
        RatVector phase1(cols, Rational(0));
        for (std::size_t j = art0; j < cols; ++j) phase1[j] = -1;
        t.set_objective(phase1);
        t.optimize();  // bounded above by zero
        if (sgn(t.value_) < 0) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.a_.rows();) {
            if (t.basis_[i] < art0) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < art0; ++j)
                if (sgn(t.a_(i, j)) != 0) {
                    col = j;
                    break;
                }
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.remove_row(i);
            }
        }
        for (std::size_t j = art0; j < cols; ++j) t.allowed_[j] = false;
    }

    RatVector phase2(cols, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        phase2[k] = problem.objective[k];
        phase2[n + k] = -problem.objective[k];
    }
    t.set_objective(phase2);
    if (!t.optimize()) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    RatVector values(cols, Rational(0));
    for (std::size_t i = 0; i < t.a_.rows(); ++i) values[t.basis_[i]] = t.rhs_[i];
    result.witness.assign(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) result.witness[k] = values[k] - values[n + k];
    result.status = LpStatus::Optimal;
    result.optimum = dot(problem.objective, result.witness);
    for (std::size_t i = 0; i < m_ineq; ++i)
        if (dot(problem.inequalities[i].coeffs, result.witness) == problem.inequalities[i].rhs)
            result.tight.push_back(i);
    return result;
}

}  // namespace toricsmith
