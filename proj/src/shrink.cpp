#include "toricsmith/shrink.hpp"

#include <algorithm>
#include <optional>

#include "kernels_common.hpp"
#include "toricsmith/kernels.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/lp.hpp"

namespace toricsmith {

std::vector<Rational> ShrinkTrace::times() const {
    std::vector<Rational> out;
    for (const auto& s : stages) out.push_back(s.time);
    return out;
}

std::vector<std::size_t> ShrinkTrace::all_frozen() const {
    std::vector<std::size_t> out;
    for (const auto& s : stages) out.insert(out.end(), s.frozen.begin(), s.frozen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ShrinkTrace::predicted_dimension(std::size_t n, const Rational& t) const {
    std::size_t dropped = 0;
    for (const auto& s : stages)
        if (s.time <= t) dropped += s.drop;
    return n - dropped;
}

namespace {

using FreezeTimes = std::vector<std::optional<Rational>>;

FreezeTimes freeze_times(const ShrinkTrace& trace, std::size_t d) {
    FreezeTimes out(d);
    for (const auto& s : trace.stages)
        for (auto i : s.frozen) out[i] = s.time;
    return out;
}

bool frozen_at(const FreezeTimes& ft, std::size_t i, const Rational& t, bool strict) {
    return ft[i] && (strict ? *ft[i] < t : *ft[i] <= t);
}

LabeledPolytope slice_with(const LabeledPolytope& p, const FreezeTimes& ft, const Rational& t, bool strict) {
    std::vector<Constraint> rows;
    rows.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (frozen_at(ft, i, t, strict))
            rows.push_back(Constraint{p[i].normal, p[i].offset - *ft[i], Relation::Equal});
        else
            rows.push_back(Constraint{p[i].normal, p[i].offset - t, Relation::LessEqual});
    }
    return LabeledPolytope(p.dim(), std::move(rows));
}

// maximize s subject to <x, v_i> + s <= lambda_i - t on moving rows and the
// frozen equalities. Variables are (x, s).
LpProblem slack_problem(const LabeledPolytope& p, const FreezeTimes& ft, const Rational& t, bool strict,
                        const Rational& shift) {
    const std::size_t n = p.dim();
    LpProblem lp;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        RatVector row = to_rational(p[i].normal);
        if (frozen_at(ft, i, t, strict)) {
            row.emplace_back(0);
            lp.equalities.push_back(LinearRow{std::move(row), p[i].offset - *ft[i]});
        } else {
            row.emplace_back(1);
            lp.inequalities.push_back(LinearRow{std::move(row), p[i].offset - shift});
        }
    }
    return lp;
}

ProjectedNormal project_normal(std::size_t index, const IntVector& v, const std::vector<IntVector>& span) {
    ProjectedNormal out;
    out.index = index;
    out.vector = orthogonal_component(to_rational(v), span);
    if (is_zero(out.vector)) {
        out.w.assign(v.size(), Integer(0));
        out.q = 0;
        return out;
    }
    out.w = primitive_integer_direction(out.vector);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(out.w[k]) != 0) {
            out.q = out.vector[k] / Rational(out.w[k]);
            break;
        }
    out.lattice = out.q.get_den() == 1;
    return out;
}

}  // namespace

ShrinkTrace shrink_trace(const LabeledPolytope& p, TraceDetail detail) {
    const std::size_t n = p.dim();
    if (p.has_equalities()) throw Error(ErrorKind::NotFullDimensional, "input has equality rows");
    if (dimension(p) != n) throw Error(ErrorKind::NotFullDimensional, "polytope is not full-dimensional");

    ShrinkTrace trace;
    FreezeTimes ft(p.size());
    std::vector<IntVector> frozen_normals;
    std::size_t frozen_rank = 0;
    Rational now = 0;

    for (std::size_t stage = 1;; ++stage) {
        // With shift 0 the slack variable is the time itself.
        const LpResult r = lp_solve(slack_problem(p, ft, now, false, Rational(0)));
        if (r.status == LpStatus::Unbounded) throw Error(ErrorKind::Unbounded, "shrinking never terminates");
        if (r.status != LpStatus::Optimal) throw Error(ErrorKind::InvariantViolated, "stage LP infeasible");
        const Rational t = r.optimum;
        const RatVector x(r.witness.begin(), r.witness.begin() + static_cast<std::ptrdiff_t>(n));

        const LabeledPolytope face = slice_with(p, ft, t, false);
        std::vector<std::size_t> group;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (ft[i] || dot(p[i].normal, x) != face[i].offset) continue;
            RatVector obj = to_rational(p[i].normal);
            for (auto& q : obj) q = -q;
            const LpResult m = lp_solve(as_lp(face, obj));
            if (m.status == LpStatus::Optimal && face[i].offset + m.optimum == 0) group.push_back(i);
        }
        if (group.empty()) throw Error(ErrorKind::InvariantViolated, "no facet freezes at a stage time");

        ShrinkStage s;
        s.index = stage;
        s.time = t;
        now = t;
        s.frozen = group;
        for (auto i : group) {
            ft[i] = t;
            frozen_normals.push_back(p[i].normal);
        }
        const std::size_t new_rank = rank_of_rows(frozen_normals, n);
        s.drop = new_rank - frozen_rank;
        frozen_rank = new_rank;
        RatMatrix rows(frozen_normals.size(), n);
        for (std::size_t a = 0; a < frozen_normals.size(); ++a)
            for (std::size_t b = 0; b < n; ++b) rows(a, b) = frozen_normals[a][b];
        s.directions = nullspace(rows);
        s.base_point = x;
        if (new_rank == n) {
            trace.endpoint = x;
            trace.stages.push_back(std::move(s));
            break;
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!ft[i]) s.projected_normals.push_back(project_normal(i, p[i].normal, frozen_normals));
        trace.stages.push_back(std::move(s));
    }

    if (detail == TraceDetail::Full) trace.events = event_timeline(p, trace);
    return trace;
}

LabeledPolytope slice(const LabeledPolytope& p, const ShrinkTrace& trace, const Rational& t) {
    if (sgn(t) < 0 || t > trace.final_time())
        throw Error(ErrorKind::TimeOutOfRange, "time " + to_string(t) + " outside [0, " + to_string(trace.final_time()) + "]");
    return slice_with(p, freeze_times(trace, p.size()), t, false);
}

LabeledPolytope slice(const LabeledPolytope& p, const Rational& t) {
    return slice(p, shrink_trace(p, TraceDetail::StagesOnly), t);
}

std::pair<LabeledPolytope, RatVector> center(const LabeledPolytope& p) {
    const ShrinkTrace trace = shrink_trace(p, TraceDetail::StagesOnly);
    return {translated(p, trace.endpoint), trace.endpoint};
}

bool is_centered(const LabeledPolytope&, const ShrinkTrace& trace) { return is_zero(trace.endpoint); }

Rational max_slack(const LabeledPolytope& p, const ShrinkTrace& trace, const Rational& t) {
    if (sgn(t) < 0 || t > trace.final_time())
        throw Error(ErrorKind::TimeOutOfRange, "time " + to_string(t) + " outside the shrinking interval");
    const LpResult r = lp_solve(slack_problem(p, freeze_times(trace, p.size()), t, true, t));
    if (r.status != LpStatus::Optimal) throw Error(ErrorKind::InvariantViolated, "slack LP not optimal");
    return r.optimum;
}

namespace {

// Times in (lo, hi) at which some basic point of the moving slice, feasible
// at that time, hits another moving hyperplane.
std::vector<Rational> candidate_times(const LabeledPolytope& p, const FreezeTimes& ft, const Rational& lo,
                                      const Rational& hi) {
    const std::size_t n = p.dim();
    std::vector<IntVector> eq_rows;
    std::vector<std::size_t> eq_index, moving;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (frozen_at(ft, i, lo, false)) {
            eq_rows.push_back(p[i].normal);
            eq_index.push_back(i);
        } else {
            moving.push_back(i);
        }
    }
    std::vector<std::size_t> fixed;
    for (auto k : independent_row_subset(eq_rows, n)) fixed.push_back(eq_index[k]);
    std::vector<Rational> out;
    if (fixed.size() > n) return out;
    for (const auto& combo : kernels::detail::combinations(moving.size(), n - fixed.size())) {
        std::vector<std::size_t> basis = fixed;
        for (auto k : combo) basis.push_back(moving[k]);
        RatMatrix a(n, n);
        RatVector b0(n), b1(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t i = basis[r];
            for (std::size_t c = 0; c < n; ++c) a(r, c) = p[i].normal[c];
            const bool is_fixed = r < fixed.size();
            b0[r] = is_fixed ? Rational(p[i].offset - *ft[i]) : p[i].offset;
            b1[r] = is_fixed ? 0 : -1;
        }
        auto x0 = solve_square(a, b0);
        if (!x0) continue;
        auto dx = solve_square(a, b1);
        for (auto k : moving) {
            if (std::find(basis.begin(), basis.end(), k) != basis.end()) continue;
            const Rational den = 1 + dot(p[k].normal, *dx);
            if (sgn(den) == 0) continue;
            const Rational tau = (p[k].offset - dot(p[k].normal, *x0)) / den;
            if (tau <= lo || tau >= hi) continue;
            RatVector x = *x0;
            for (std::size_t c = 0; c < n; ++c) x[c] += tau * (*dx)[c];
            if (slice_with(p, ft, tau, true).contains(x)) out.push_back(tau);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<RedundancyEvent> event_timeline(const LabeledPolytope& p, const ShrinkTrace& trace) {
    const FreezeTimes ft = freeze_times(trace, p.size());

    // Breakpoints: 0, candidate times, stage times. One sample per open gap.
    std::vector<Rational> breaks{Rational(0)};
    Rational start = 0;
    for (const auto& s : trace.stages) {
        for (auto& c : candidate_times(p, ft, start, s.time)) breaks.push_back(c);
        breaks.push_back(s.time);
        start = s.time;
    }

    std::vector<LabeledPolytope> slices;
    std::vector<Rational> samples;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        samples.push_back((breaks[k] + breaks[k + 1]) / 2);
        slices.push_back(slice_with(p, ft, samples.back(), true));
    }
    std::vector<kernels::RedundancyQuery> queries;
    for (const auto& s : slices)
        for (std::size_t i = 0; i < p.size(); ++i) queries.push_back({&s, i});
    const std::vector<char> status = kernels::omp::redundancy(queries);
    auto redundant = [&](std::size_t sample, std::size_t i) { return status[sample * p.size() + i] != 0; };

    std::vector<RedundancyEvent> events;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!samples.empty() && !frozen_at(ft, i, samples[0], true) && redundant(0, i))
            events.push_back({Rational(0), i, EventKind::BecomesRedundant});
    }
    for (std::size_t k = 1; k < samples.size(); ++k) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (frozen_at(ft, i, samples[k], true)) continue;
            const bool before = redundant(k - 1, i), after = redundant(k, i);
            if (before != after)
                events.push_back({breaks[k], i, after ? EventKind::BecomesRedundant : EventKind::BecomesRelevant});
        }
    }
    std::stable_sort(events.begin(), events.end(), [](const RedundancyEvent& a, const RedundancyEvent& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.kind != b.kind) return a.kind == EventKind::BecomesRedundant;
        return a.index < b.index;
    });
    return events;
}

std::vector<RedundancyEvent> event_timeline(const LabeledPolytope& p) {
    return event_timeline(p, shrink_trace(p, TraceDetail::StagesOnly));
}

}  // namespace toricsmith
