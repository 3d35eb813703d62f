#include <algorithm>
#include <functional>
#include <map>

#include "kernels_common.hpp"
#include "toricsmith/kernels.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/lp.hpp"

namespace toricsmith::kernels {

namespace detail {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

BasisPlan plan_bases(const LabeledPolytope& p) {
    BasisPlan plan;
    std::vector<IntVector> eq_rows;
    std::vector<std::size_t> eq_index;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_equality()) {
            eq_rows.push_back(p[i].normal);
            eq_index.push_back(i);
        } else {
            plan.free_rows.push_back(i);
        }
    }
    for (auto k : independent_row_subset(eq_rows, p.dim())) plan.fixed_rows.push_back(eq_index[k]);
    plan.choose = p.dim() - plan.fixed_rows.size();
    return plan;
}

VertexSet canonical_vertex_set(std::vector<std::pair<RatVector, std::vector<std::size_t>>> items) {
    std::map<RatVector, std::vector<std::size_t>, bool (*)(const RatVector&, const RatVector&)> merged(
        static_cast<bool (*)(const RatVector&, const RatVector&)>(&lex_less));
    for (auto& [x, tight] : items) {
        auto& slot = merged[x];
        slot.insert(slot.end(), tight.begin(), tight.end());
    }
    VertexSet out;
    for (auto& [x, tight] : merged) {
        std::sort(tight.begin(), tight.end());
        tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
        out.points.push_back(x);
        out.tight.push_back(std::move(tight));
    }
    return out;
}

std::optional<Relation> circuit_of(const std::vector<IntVector>& normals, const RatVector& offsets,
                                   const std::vector<std::size_t>& subset) {
    const std::size_t n = normals.front().size();
    RatMatrix m(n, subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = normals[subset[j]][i];
    const auto kernel = nullspace(m);
    if (kernel.size() != 1) return std::nullopt;
    IntVector ray = primitive_integer_direction(kernel.front());
    const int s = sgn(ray.front());
    for (const auto& v : ray)
        if (sgn(v) == 0 || sgn(v) != s) return std::nullopt;
    Relation r;
    r.support = subset;
    r.value = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        r.coefficients.push_back(s > 0 ? ray[j] : Integer(-ray[j]));
        r.value += Rational(r.coefficients.back()) * offsets[subset[j]];
    }
    return r;
}

Relation relation_from_dense(const std::vector<unsigned>& a, const RatVector& offsets) {
    Relation r;
    r.value = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        r.support.push_back(j);
        r.coefficients.emplace_back(a[j]);
        r.value += Rational(a[j]) * offsets[j];
    }
    return r;
}

}  // namespace detail

bool relation_better(const Relation& a, const Relation& b, std::size_t d) {
    if (a.value != b.value) return a.value < b.value;
    Integer sa = 0, sb = 0;
    for (const auto& c : a.coefficients) sa += c;
    for (const auto& c : b.coefficients) sb += c;
    if (sa != sb) return sa < sb;
    IntVector da(d, Integer(0)), db(d, Integer(0));
    for (std::size_t k = 0; k < a.support.size(); ++k) da[a.support[k]] = a.coefficients[k];
    for (std::size_t k = 0; k < b.support.size(); ++k) db[b.support[k]] = b.coefficients[k];
    return lex_less(da, db);
}

bool is_redundant(const LabeledPolytope& slice, std::size_t index) {
    const Constraint& target = slice[index];
    if (target.is_equality()) return false;
    LpProblem lp;
    lp.objective = to_rational(target.normal);
    for (std::size_t i = 0; i < slice.size(); ++i) {
        if (i == index) continue;
        LinearRow row{to_rational(slice[i].normal), slice[i].offset};
        (slice[i].is_equality() ? lp.equalities : lp.inequalities).push_back(std::move(row));
    }
    if (lp.inequalities.empty() && lp.equalities.empty()) return false;
    const LpResult r = lp_solve(lp);
    switch (r.status) {
        case LpStatus::Unbounded: return false;
        case LpStatus::Infeasible: return true;
        case LpStatus::Optimal: return r.optimum <= target.offset;
    }
    return false;
}

namespace serial {

VertexSet basic_vertices(const LabeledPolytope& p) {
    const std::size_t n = p.dim();
    const auto plan = detail::plan_bases(p);
    std::vector<std::pair<RatVector, std::vector<std::size_t>>> found;
    for (const auto& combo : detail::combinations(plan.free_rows.size(), plan.choose)) {
        std::vector<std::size_t> rows = plan.fixed_rows;
        for (auto k : combo) rows.push_back(plan.free_rows[k]);
        RatMatrix a(n, n);
        RatVector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = p[rows[i]].normal[j];
            b[i] = p[rows[i]].offset;
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x || !p.contains(*x)) continue;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (dot(p[i].normal, *x) == p[i].offset) tight.push_back(i);
        found.emplace_back(std::move(*x), std::move(tight));
    }
    return detail::canonical_vertex_set(std::move(found));
}

std::vector<IntVector> lattice_points(const LabeledPolytope& p, const IntVector& lo, const IntVector& hi) {
    std::vector<IntVector> out;
    const std::size_t n = p.dim();
    if (n == 0) return out;
    IntVector x(n);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            if (p.contains(to_rational(x))) out.push_back(x);
            return;
        }
        for (Integer v = lo[j]; v <= hi[j]; ++v) {
            x[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<char> redundancy(const std::vector<RedundancyQuery>& queries) {
    std::vector<char> out;
    out.reserve(queries.size());
    for (const auto& q : queries) out.push_back(is_redundant(*q.slice, q.index) ? 1 : 0);
    return out;
}

std::vector<Relation> circuits(const std::vector<IntVector>& normals, const RatVector& offsets) {
    std::vector<Relation> out;
    if (normals.empty()) return out;
    const std::size_t n = normals.front().size();
    for (std::size_t size = 2; size <= std::min(n + 1, normals.size()); ++size)
        for (const auto& subset : detail::combinations(normals.size(), size))
            if (auto r = detail::circuit_of(normals, offsets, subset)) out.push_back(std::move(*r));
    return out;
}

std::optional<Relation> relation_scan(const std::vector<IntVector>& normals, const RatVector& offsets, unsigned bound) {
    const std::size_t d = normals.size();
    if (d == 0 || bound == 0) return std::nullopt;
    const std::size_t n = normals.front().size();
    std::optional<Relation> best;
    std::vector<unsigned> a(d, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned remaining) {
        if (j == d) {
            if (std::all_of(a.begin(), a.end(), [](unsigned v) { return v == 0; })) return;
            for (std::size_t k = 0; k < n; ++k) {
                Integer s = 0;
                for (std::size_t i = 0; i < d; ++i) s += Integer(a[i]) * normals[i][k];
                if (sgn(s) != 0) return;
            }
            Relation r = detail::relation_from_dense(a, offsets);
            if (!best || relation_better(r, *best, d)) best = std::move(r);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            a[j] = v;
            rec(j + 1, remaining - v);
        }
        a[j] = 0;
    };
    rec(0, bound);
    return best;
}

}  // namespace serial

}  // namespace toricsmith::kernels
