#include "toricsmith/gromov.hpp"

#include <algorithm>
#include <set>

#include "toricsmith/decompose.hpp"
#include "toricsmith/kernels.hpp"
#include "toricsmith/lattice.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/shrink.hpp"

namespace toricsmith {

LabeledPolytope reflexive_companion(const LabeledPolytope& p) {
    std::vector<Constraint> rows;
    for (const auto& c : p.constraints()) rows.push_back(Constraint{c.normal, Rational(1), c.relation});
    return LabeledPolytope(p.dim(), std::move(rows));
}

LabeledPolytope primitive_companion(const LabeledPolytope& p) {
    std::vector<Constraint> rows;
    for (std::size_t i = 0; i < p.size(); ++i) rows.push_back(Constraint{p.primitive_normal(i), Rational(1), p[i].relation});
    return LabeledPolytope(p.dim(), std::move(rows));
}

namespace {

Integer l1_norm(const IntVector& v) {
    Integer s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

bool search(const std::vector<IntVector>& cand, std::size_t n, std::size_t from, std::vector<IntVector>& chosen) {
    if (chosen.size() == n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = chosen[i][j];
        return abs(determinant(m)) == 1;
    }
    for (std::size_t k = from; k + (n - chosen.size()) <= cand.size(); ++k) {
        chosen.push_back(cand[k]);
        if (rank_of_rows(chosen, n) == chosen.size() && search(cand, n, k + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<IntVector>> ewald_basis(const LabeledPolytope& companion) {
    for (const auto& c : companion.constraints())
        if (c.is_equality() || c.offset != 1)
            throw Error(ErrorKind::NotReflexiveCompanion, "every offset of the companion must be 1");
    const std::size_t n = companion.dim();
    std::vector<IntVector> cand;
    for (const auto& v : enumerate_lattice_points(companion)) {
        if (is_zero(v)) continue;
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
        if (sgn(*first) < 0) continue;
        IntVector neg(v);
        for (auto& x : neg) x = -x;
        if (companion.contains(to_rational(neg))) cand.push_back(v);
    }
    std::sort(cand.begin(), cand.end(), [](const IntVector& a, const IntVector& b) {
        const Integer na = l1_norm(a), nb = l1_norm(b);
        if (na != nb) return na < nb;
        return lex_less(b, a);
    });
    std::vector<IntVector> chosen;
    if (!search(cand, n, 0, chosen)) return std::nullopt;
    return chosen;
}

LowerBound lower_bound(const LabeledPolytope& p) {
    const LabeledPolytope centered = center(p).first;
    const ShrinkTrace trace = shrink_trace(centered, TraceDetail::StagesOnly);
    LowerBound out;
    out.t1 = trace.stages.front().time;
    out.coefficient = 4 * out.t1;
    out.ewald_basis = ewald_basis(reflexive_companion(centered));
    if (out.ewald_basis) {
        for (const auto& b : *out.ewald_basis)
            for (int s : {1, -1}) {
                RatVector x = to_rational(b);
                for (auto& q : x) q *= s * out.t1;
                if (!centered.contains(x))
                    throw Error(ErrorKind::InvariantViolated, "diamond vertex outside the polytope");
            }
    }
    if (!classify(p).smooth)
        out.status = LowerStatus::NotApplicable;
    else
        out.status = out.ewald_basis ? LowerStatus::Certified : LowerStatus::EwaldNotFound;
    return out;
}

UpperBound lu_upper_bound(const LabeledPolytope& p, unsigned search_bound) {
    std::vector<IntVector> w;
    RatVector l;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto pd = primitive_decompose(p[i].normal);
        w.push_back(pd.primitive);
        l.push_back(p[i].offset / Rational(pd.label));
    }
    std::optional<kernels::Relation> best;
    for (auto& r : kernels::omp::circuits(w, l))
        if (!best || kernels::relation_better(r, *best, w.size())) best = std::move(r);
    if (auto r = kernels::omp::relation_scan(w, l, search_bound))
        if (!best || kernels::relation_better(*r, *best, w.size())) best = std::move(r);
    if (!best) throw Error(ErrorKind::NoRelationFound, "no positive relation among the primitive normals");

    UpperBound out;
    out.search_bound = search_bound;
    out.coefficient = 2 * best->value;
    out.witness = LuWitness{best->support, best->coefficients};
    out.fano = fano_check(p);
    out.normal_fan_matches = normal_fan_matches(p);
    return out;
}

FanoStatus fano_check(const LabeledPolytope& p) {
    const LabeledPolytope companion = primitive_companion(center(p).first);
    for (const auto& x : vertices(companion).points)
        for (const auto& q : x)
            if (q.get_den() != 1) return FanoStatus::NotVerified;
    for (const auto& y : polar_dual(companion))
        for (const auto& q : y)
            if (q.get_den() != 1) return FanoStatus::NotVerified;
    return FanoStatus::ReflexiveCompanionOK;
}

bool normal_fan_matches(const LabeledPolytope& p) {
    const LabeledPolytope centered = center(p).first;
    const VertexSet pv = vertices(centered);
    const VertexSet cv = vertices(primitive_companion(centered));
    const std::set<std::vector<std::size_t>> a(pv.tight.begin(), pv.tight.end());
    const std::set<std::vector<std::size_t>> b(cv.tight.begin(), cv.tight.end());
    return a == b;
}

GromovBounds width_report(const LabeledPolytope& p, unsigned search_bound) {
    GromovBounds out;
    out.lower = lower_bound(p);
    out.upper = lu_upper_bound(p, search_bound);

    const DecompositionPlan plan = decomposition_plan(p);
    const auto factors = build_factors(plan);
    const MonotoneFactor& relevant = plan.m() == 0 ? factors.front() : factors[1 + plan.n_groups()];
    const auto& c = plan.centered;
    for (std::size_t a = 0; a < relevant.sources.size() && !out.opposite_pair; ++a)
        for (std::size_t b = a + 1; b < relevant.sources.size(); ++b) {
            const std::size_t ia = relevant.sources[a], ib = relevant.sources[b];
            IntVector neg = c.primitive_normal(ib);
            for (auto& x : neg) x = -x;
            if (c.primitive_normal(ia) != neg) continue;
            const Rational width = 2 * (c[ia].offset / Rational(c.label(ia)) + c[ib].offset / Rational(c.label(ib)));
            if (width == out.lower.coefficient) {
                out.opposite_pair = std::make_pair(ia, ib);
                break;
            }
        }
    out.equality = out.opposite_pair && out.upper.fano == FanoStatus::ReflexiveCompanionOK &&
                   out.lower.status == LowerStatus::Certified && out.upper.coefficient &&
                   *out.upper.coefficient == out.lower.coefficient;
    return out;
}

}  // namespace toricsmith
