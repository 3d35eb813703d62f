#pragma once

// Data-parallel inner loops of the library. Each kernel has an OpenMP
// implementation (namespace omp, used by the public API) and a plain serial
// reference (namespace serial) that the tests and benchmarks compare against.
// Both produce identical, canonically ordered output.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricsmith/polytope.hpp"

namespace toricsmith::kernels {

/// One "is constraint `index` of `slice` redundant?" question.
struct RedundancyQuery {
    const LabeledPolytope* slice = nullptr;
    std::size_t index = 0;
};

/// A positive integer relation sum_j a_j w_j = 0 and its Lu value sum_j a_j l_j.
struct Relation {
    std::vector<std::size_t> support;  // sorted constraint indices
    std::vector<Integer> coefficients;  // a_j >= 1, aligned with support
    Rational value;
};

/// Deterministic preference between relations: smaller value, then smaller
/// coefficient sum, then lexicographically smaller dense coefficient vector.
bool relation_better(const Relation& a, const Relation& b, std::size_t d);

namespace omp {
VertexSet basic_vertices(const LabeledPolytope& p);
std::vector<IntVector> lattice_points(const LabeledPolytope& p, const IntVector& lo, const IntVector& hi);
std::vector<char> redundancy(const std::vector<RedundancyQuery>& queries);
std::vector<Relation> circuits(const std::vector<IntVector>& normals, const RatVector& offsets);
std::optional<Relation> relation_scan(const std::vector<IntVector>& normals, const RatVector& offsets, unsigned bound);
}  // namespace omp

namespace serial {
VertexSet basic_vertices(const LabeledPolytope& p);
std::vector<IntVector> lattice_points(const LabeledPolytope& p, const IntVector& lo, const IntVector& hi);
std::vector<char> redundancy(const std::vector<RedundancyQuery>& queries);
std::vector<Relation> circuits(const std::vector<IntVector>& normals, const RatVector& offsets);
std::optional<Relation> relation_scan(const std::vector<IntVector>& normals, const RatVector& offsets, unsigned bound);
}  // namespace serial

/// Single redundancy test: maximize <x, v_i> over the other rows of the slice
/// and compare with the offset of row i.
bool is_redundant(const LabeledPolytope& slice, std::size_t index);

}  // namespace toricsmith::kernels
