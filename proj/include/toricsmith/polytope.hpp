#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricsmith/lp.hpp"
#include "toricsmith/rational.hpp"

namespace toricsmith {

enum class Relation { LessEqual, Equal };

/// One row <x, normal> <= offset (or = offset for frozen rows of a slice).
struct Constraint {
    IntVector normal;
    Rational offset;
    Relation relation = Relation::LessEqual;

    bool is_equality() const noexcept { return relation == Relation::Equal; }
    bool operator==(const Constraint&) const = default;
};

/// Labeled rational polytope in H-representation. Constraint order is the
/// facet numbering and is preserved by every operation in the library.
class LabeledPolytope {
public:
    LabeledPolytope() = default;
    LabeledPolytope(std::size_t dim, std::vector<Constraint> constraints);

    /// Convenience: all rows are inequalities.
    static LabeledPolytope from_rows(std::size_t dim, const std::vector<std::pair<IntVector, Rational>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return constraints_.size(); }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    const Constraint& operator[](std::size_t i) const { return constraints_[i]; }

    bool has_equalities() const noexcept;
    std::vector<std::size_t> inequality_indices() const;

    /// Label a_i (gcd of the normal) and primitive normal w_i.
    Integer label(std::size_t i) const;
    IntVector primitive_normal(std::size_t i) const;

    bool contains(const RatVector& x) const;
    bool operator==(const LabeledPolytope&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Constraint> constraints_;
};

/// Vertex coordinates (deduplicated, lexicographically sorted) with the
/// indices of the constraints tight at each vertex.
struct VertexSet {
    std::vector<RatVector> points;
    std::vector<std::vector<std::size_t>> tight;

    std::size_t size() const noexcept { return points.size(); }
    bool same_points(const VertexSet& other) const { return points == other.points; }
};

struct PropertyReport {
    bool compact = false;
    bool simple = false;
    bool smooth = false;
    bool monotone = false;
    bool reflexive = false;
    bool trivially_labeled = false;
    std::size_t dimension = 0;
};

/// The rows of `p` as an LP over x with the given objective.
LpProblem as_lp(const LabeledPolytope& p, RatVector objective);

/// Compactness via a positive-spanning test on the normals (one exact LP).
bool is_compact(const LabeledPolytope& p);

/// Throws Unbounded / Empty as appropriate.
VertexSet vertices(const LabeledPolytope& p);
std::size_t dimension(const LabeledPolytope& p);
std::size_t dimension_of_points(const std::vector<RatVector>& points);
PropertyReport classify(const LabeledPolytope& p);

/// Weighted projective polytope for weights m (m.back() == 1) at level lambda.
LabeledPolytope wps_polytope(const std::vector<Integer>& weights, const Rational& level);

/// Vertices of the polar {y : <y, x> <= 1 for all x in P}. Needs 0 in the interior.
std::vector<RatVector> polar_dual(const LabeledPolytope& p);

bool is_subset(const LabeledPolytope& p, const LabeledPolytope& q);

/// Integer points of a compact polytope, lexicographically sorted.
std::vector<IntVector> enumerate_lattice_points(const LabeledPolytope& p);

/// Same normals, every offset multiplied by `factor`.
LabeledPolytope scaled(const LabeledPolytope& p, const Rational& factor);

/// Offsets shifted so that the polytope is translated by -shift.
LabeledPolytope translated(const LabeledPolytope& p, const RatVector& shift);

}  // namespace toricsmith
