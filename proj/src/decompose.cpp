#include "toricsmith/decompose.hpp"

#include <algorithm>
#include <map>

#include "toricsmith/linalg.hpp"

namespace toricsmith {

std::string MonotoneFactor::name() const {
    return (kind == FactorKind::FullDim ? "full_dim_" : "cylinder_") + std::to_string(order);
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

DecompositionPlan decomposition_plan(const LabeledPolytope& p) {
    DecompositionPlan plan;
    auto [centered, shift] = center(p);
    plan.centered = std::move(centered);
    plan.translation = std::move(shift);
    plan.trace = shrink_trace(plan.centered, TraceDetail::StagesOnly);

    const auto frozen = plan.trace.all_frozen();
    std::map<Rational, std::vector<std::size_t>> by_level;
    for (std::size_t i = 0; i < plan.centered.size(); ++i)
        if (!std::binary_search(frozen.begin(), frozen.end(), i)) by_level[plan.centered[i].offset].push_back(i);
    for (auto& [level, idx] : by_level) {
        if (level <= plan.trace.final_time())
            throw Error(ErrorKind::InvariantViolated,
                        "surviving facet at level " + to_string(level) + " does not exceed the last stage time");
        plan.group_levels.push_back(level);
        plan.groups.push_back(std::move(idx));
    }
    return plan;
}

namespace {

MonotoneFactor make_factor(const LabeledPolytope& p, FactorKind kind, std::size_t order,
                           std::vector<std::size_t> sources, const Rational& level) {
    std::sort(sources.begin(), sources.end());
    MonotoneFactor f;
    f.kind = kind;
    f.order = order;
    f.level = level;
    std::vector<Constraint> rows;
    std::vector<IntVector> normals;
    for (auto i : sources) {
        rows.push_back(Constraint{p[i].normal, level, Relation::LessEqual});
        normals.push_back(p[i].normal);
    }
    f.polytope = LabeledPolytope(p.dim(), std::move(rows));
    f.sources = std::move(sources);
    f.rank = rank_of_rows(normals, p.dim());
    return f;
}

}  // namespace

std::vector<MonotoneFactor> build_factors(const DecompositionPlan& plan) {
    const auto& p = plan.centered;
    const auto& stages = plan.trace.stages;
    const auto frozen = plan.trace.all_frozen();
    std::vector<MonotoneFactor> out;
    out.push_back(make_factor(p, FactorKind::FullDim, 0, frozen, plan.trace.final_time()));
    for (std::size_t k = 0; k < plan.groups.size(); ++k) {
        auto rows = frozen;
        rows.insert(rows.end(), plan.groups[k].begin(), plan.groups[k].end());
        out.push_back(make_factor(p, FactorKind::FullDim, k + 1, std::move(rows), plan.group_levels[k]));
    }
    std::vector<std::size_t> upto;
    for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
        upto.insert(upto.end(), stages[j].frozen.begin(), stages[j].frozen.end());
        out.push_back(make_factor(p, FactorKind::Cylinder, j + 1, upto, stages[j].time));
    }
    return out;
}

LabeledPolytope essential_polytope(const MonotoneFactor& f) {
    const std::size_t n = f.polytope.dim();
    RatMatrix m(f.polytope.size(), n);
    for (std::size_t i = 0; i < f.polytope.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = f.polytope[i].normal[j];
    std::vector<Constraint> rows = f.polytope.constraints();
    for (const auto& u : nullspace(m))
        rows.push_back(Constraint{primitive_integer_direction(u), Rational(0), Relation::Equal});
    return LabeledPolytope(n, std::move(rows));
}

VerificationReport verify_decomposition(const LabeledPolytope& p, const std::vector<MonotoneFactor>& factors) {
    VerificationReport report;

    VerificationCheck contained{"contained", true, ""};
    try {
        for (const auto& f : factors)
            if (!is_subset(p, f.polytope)) {
                contained.passed = false;
                contained.detail = "P is not inside " + f.name();
                break;
            }
    } catch (const Error& e) {
        contained = {"contained", false, e.what()};
    }
    report.checks.push_back(contained);

    VerificationCheck intersection{"intersection", false, ""};
    try {
        std::vector<Constraint> stacked;
        for (const auto& f : factors)
            stacked.insert(stacked.end(), f.polytope.constraints().begin(), f.polytope.constraints().end());
        const auto lhs = vertices(p);
        const auto rhs = vertices(LabeledPolytope(p.dim(), std::move(stacked)));
        intersection.passed = lhs.same_points(rhs);
        if (!intersection.passed)
            intersection.detail = std::to_string(lhs.size()) + " vertices in P, " + std::to_string(rhs.size()) +
                                  " in the intersection";
    } catch (const Error& e) {
        intersection.detail = e.what();
    }
    report.checks.push_back(intersection);

    VerificationCheck essential{"essential", true, ""};
    for (const auto& f : factors) {
        const bool level_ok =
            sgn(f.level) > 0 && std::all_of(f.polytope.constraints().begin(), f.polytope.constraints().end(),
                                            [&](const Constraint& c) { return c.offset == f.level; });
        if (!level_ok || !is_compact(essential_polytope(f))) {
            essential.passed = false;
            essential.detail = f.name() + (level_ok ? " is not compact" : " is not monotone");
            break;
        }
    }
    report.checks.push_back(essential);
    return report;
}

bool rescaled_inclusion(const MonotoneFactor& full_k, const MonotoneFactor& full_0) {
    return is_subset(full_k.polytope, scaled(full_0.polytope, full_k.level / full_0.level));
}

}  // namespace toricsmith
