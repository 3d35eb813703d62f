#include "toricsmith/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricsmith/kernels.hpp"
#include "toricsmith/lattice.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/lp.hpp"

namespace toricsmith {

LabeledPolytope::LabeledPolytope(std::size_t dim, std::vector<Constraint> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
    if (dim_ == 0) throw Error(ErrorKind::DimensionMismatch, "polytope dimension must be positive");
    for (const auto& c : constraints_) {
        if (c.normal.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "normal length differs from dimension");
        if (is_zero(c.normal)) throw Error(ErrorKind::ZeroVector, "constraint normal is zero");
    }
}

LabeledPolytope LabeledPolytope::from_rows(std::size_t dim, const std::vector<std::pair<IntVector, Rational>>& rows) {
    std::vector<Constraint> cs;
    cs.reserve(rows.size());
    for (const auto& [v, l] : rows) cs.push_back(Constraint{v, l, Relation::LessEqual});
    return LabeledPolytope(dim, std::move(cs));
}

bool LabeledPolytope::has_equalities() const noexcept {
    return std::any_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) { return c.is_equality(); });
}

std::vector<std::size_t> LabeledPolytope::inequality_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < constraints_.size(); ++i)
        if (!constraints_[i].is_equality()) out.push_back(i);
    return out;
}

Integer LabeledPolytope::label(std::size_t i) const { return primitive_decompose(constraints_[i].normal).label; }

IntVector LabeledPolytope::primitive_normal(std::size_t i) const {
    return primitive_decompose(constraints_[i].normal).primitive;
}

bool LabeledPolytope::contains(const RatVector& x) const {
    for (const auto& c : constraints_) {
        const Rational lhs = dot(c.normal, x);
        if (c.is_equality() ? lhs != c.offset : lhs > c.offset) return false;
    }
    return true;
}

LpProblem as_lp(const LabeledPolytope& p, RatVector objective) {
    LpProblem lp;
    lp.objective = std::move(objective);
    for (const auto& c : p.constraints()) {
        LinearRow row{to_rational(c.normal), c.offset};
        (c.is_equality() ? lp.equalities : lp.inequalities).push_back(std::move(row));
    }
    return lp;
}

namespace {

bool is_nonempty(const LabeledPolytope& p) {
    return lp_solve(as_lp(p, RatVector(p.dim(), Rational(0)))).status != LpStatus::Infeasible;
}

// Dimension from implicit equalities; works for unbounded polyhedra too.
std::size_t dimension_by_lp(const LabeledPolytope& p) {
    std::vector<IntVector> implicit;
    for (const auto& c : p.constraints()) {
        if (c.is_equality()) {
            implicit.push_back(c.normal);
            continue;
        }
        RatVector obj = to_rational(c.normal);
        for (auto& q : obj) q = -q;
        const LpResult r = lp_solve(as_lp(p, obj));
        // max slack = offset - min <x, v>
        if (r.status == LpStatus::Optimal && c.offset + r.optimum == 0) implicit.push_back(c.normal);
    }
    return p.dim() - rank_of_rows(implicit, p.dim());
}

}  // namespace

bool is_compact(const LabeledPolytope& p) {
    const std::size_t n = p.dim();
    std::vector<IntVector> all;
    for (const auto& c : p.constraints()) all.push_back(c.normal);
    if (rank_of_rows(all, n) < n) return false;
    // Bounded iff the normals (equality rows with both signs) positively span
    // R^n, iff a relation with every inequality coefficient >= 1 exists.
    const std::size_t m = p.size();
    LpProblem lp;
    lp.objective.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (p[i].is_equality()) continue;
        RatVector row(m, Rational(0));
        row[i] = -1;
        lp.inequalities.push_back(LinearRow{std::move(row), Rational(-1)});
        lp.objective[i] = -1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        RatVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = p[i].normal[k];
        lp.equalities.push_back(LinearRow{std::move(row), Rational(0)});
    }
    return lp_solve(lp).status != LpStatus::Infeasible;
}

VertexSet vertices(const LabeledPolytope& p) {
    if (!is_compact(p)) {
        if (!is_nonempty(p)) throw Error(ErrorKind::Empty, "polytope is empty");
        throw Error(ErrorKind::Unbounded, "polyhedron is not bounded");
    }
    VertexSet v = kernels::omp::basic_vertices(p);
    if (v.points.empty()) throw Error(ErrorKind::Empty, "polytope is empty");
    return v;
}

std::size_t dimension_of_points(const std::vector<RatVector>& points) {
    if (points.size() <= 1) return 0;
    const std::size_t n = points.front().size();
    RatMatrix diffs(points.size() - 1, n);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
    return rank(diffs);
}

std::size_t dimension(const LabeledPolytope& p) {
    if (is_compact(p)) return dimension_of_points(vertices(p).points);
    if (!is_nonempty(p)) throw Error(ErrorKind::Empty, "polytope is empty");
    return dimension_by_lp(p);
}

PropertyReport classify(const LabeledPolytope& p) {
    PropertyReport r;
    r.compact = is_compact(p);
    r.trivially_labeled = true;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.label(i) != 1) r.trivially_labeled = false;
    if (!p.has_equalities() && p.size() > 0) {
        const Rational& level = p[0].offset;
        r.monotone = sgn(level) > 0 && std::all_of(p.constraints().begin(), p.constraints().end(),
                                                    [&](const Constraint& c) { return c.offset == level; });
        r.reflexive = r.monotone && level == 1;
    }
    if (!r.compact) {
        if (!is_nonempty(p)) throw Error(ErrorKind::Empty, "polytope is empty");
        r.dimension = dimension_by_lp(p);
        return r;
    }

    const VertexSet vs = vertices(p);
    r.dimension = dimension_of_points(vs.points);
    const std::size_t dim = r.dimension;

    // Facet-defining rows, identified by hyperplane so that duplicate rows count once.
    std::map<std::size_t, std::pair<IntVector, Rational>> facet_plane;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_equality() || dim == 0) continue;
        std::vector<RatVector> on;
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (std::binary_search(vs.tight[k].begin(), vs.tight[k].end(), i)) on.push_back(vs.points[k]);
        if (on.empty() || dimension_of_points(on) + 1 != dim) continue;
        const auto pd = primitive_decompose(p[i].normal);
        facet_plane.emplace(i, std::make_pair(pd.primitive, Rational(p[i].offset / Rational(pd.label))));
    }

    r.simple = true;
    r.smooth = dim == p.dim();
    for (std::size_t k = 0; k < vs.size(); ++k) {
        std::set<std::pair<IntVector, Rational>> planes;
        for (auto i : vs.tight[k]) {
            auto it = facet_plane.find(i);
            if (it != facet_plane.end()) planes.insert(it->second);
        }
        if (planes.size() != dim) {
            r.simple = false;
            r.smooth = false;
            continue;
        }
        if (!r.smooth) continue;
        IntMatrix m(dim, dim);
        std::size_t row = 0;
        for (const auto& [w, l] : planes) {
            for (std::size_t j = 0; j < dim; ++j) m(row, j) = w[j];
            ++row;
        }
        if (abs(determinant(m)) != 1) r.smooth = false;
    }
    return r;
}

LabeledPolytope wps_polytope(const std::vector<Integer>& weights, const Rational& level) {
    if (weights.size() < 2) throw Error(ErrorKind::BadWeights, "need at least two weights");
    for (const auto& m : weights)
        if (sgn(m) <= 0) throw Error(ErrorKind::BadWeights, "weights must be positive");
    if (weights.back() != 1) throw Error(ErrorKind::BadWeights, "last weight must be 1");
    if (gcd_of(weights) != 1) throw Error(ErrorKind::BadWeights, "weights are not coprime");
    if (sgn(level) <= 0) throw Error(ErrorKind::BadWeights, "level must be positive");
    const std::size_t n = weights.size() - 1;
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector v(n, Integer(0));
        v[i] = -1;
        cs.push_back(Constraint{std::move(v), level, Relation::LessEqual});
    }
    cs.push_back(Constraint{IntVector(weights.begin(), weights.end() - 1), level, Relation::LessEqual});
    return LabeledPolytope(n, std::move(cs));
}

std::vector<RatVector> polar_dual(const LabeledPolytope& p) {
    if (p.has_equalities()) throw Error(ErrorKind::OriginNotInterior, "polytope is not full-dimensional");
    for (const auto& c : p.constraints())
        if (sgn(c.offset) <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
    const VertexSet vs = vertices(p);
    std::vector<Constraint> rows;
    for (const auto& x : vs.points) {
        const Integer den = lcm_of_denominators(x);
        IntVector z;
        for (const auto& q : x) z.push_back(Integer(q.get_num() * (den / q.get_den())));
        rows.push_back(Constraint{std::move(z), Rational(den), Relation::LessEqual});
    }
    return kernels::omp::basic_vertices(LabeledPolytope(p.dim(), std::move(rows))).points;
}

bool is_subset(const LabeledPolytope& p, const LabeledPolytope& q) {
    if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "is_subset: ambient dimensions differ");
    const VertexSet vs = vertices(p);
    return std::all_of(vs.points.begin(), vs.points.end(), [&](const RatVector& x) { return q.contains(x); });
}

std::vector<IntVector> enumerate_lattice_points(const LabeledPolytope& p) {
    if (!is_compact(p)) throw Error(ErrorKind::Unbounded, "lattice points of an unbounded polyhedron");
    const std::size_t n = p.dim();
    IntVector lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
        RatVector e(n, Rational(0));
        e[k] = 1;
        const LpResult up = lp_solve(as_lp(p, e));
        if (up.status == LpStatus::Infeasible) return {};
        e[k] = -1;
        const LpResult down = lp_solve(as_lp(p, e));
        mpz_fdiv_q(hi[k].get_mpz_t(), up.optimum.get_num_mpz_t(), up.optimum.get_den_mpz_t());
        const Rational low = -down.optimum;
        mpz_cdiv_q(lo[k].get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());
    }
    return kernels::omp::lattice_points(p, lo, hi);
}

LabeledPolytope scaled(const LabeledPolytope& p, const Rational& factor) {
    std::vector<Constraint> cs = p.constraints();
    for (auto& c : cs) c.offset *= factor;
    return LabeledPolytope(p.dim(), std::move(cs));
}

LabeledPolytope translated(const LabeledPolytope& p, const RatVector& shift) {
    std::vector<Constraint> cs = p.constraints();
    for (auto& c : cs) c.offset -= dot(c.normal, shift);
    return LabeledPolytope(p.dim(), std::move(cs));
}

}  // namespace toricsmith
