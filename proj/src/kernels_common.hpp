#pragma once

// Pieces shared by the OpenMP and serial kernels.

#include <optional>
#include <utility>
#include <vector>

#include "toricsmith/kernels.hpp"

namespace toricsmith::kernels::detail {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Which rows are always part of a basis (independent equality rows) and
/// which rows a basis chooses `choose` of (inequality rows).
struct BasisPlan {
    std::vector<std::size_t> fixed_rows;
    std::vector<std::size_t> free_rows;
    std::size_t choose = 0;
};

BasisPlan plan_bases(const LabeledPolytope& p);

/// Sort lexicographically, merge duplicates (union of tight sets).
VertexSet canonical_vertex_set(std::vector<std::pair<RatVector, std::vector<std::size_t>>> items);

/// The positive relation supported exactly on `subset`, if the subset is a
/// circuit with a strictly positive kernel ray.
std::optional<Relation> circuit_of(const std::vector<IntVector>& normals, const RatVector& offsets,
                                   const std::vector<std::size_t>& subset);

Relation relation_from_dense(const std::vector<unsigned>& a, const RatVector& offsets);

}  // namespace toricsmith::kernels::detail
