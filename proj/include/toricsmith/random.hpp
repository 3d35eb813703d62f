#pragma once

// Seeded generator of compact rational polytopes for property tests and the
// fuzz subcommand. Output depends only on the seed.

#include <cstddef>
#include <cstdint>

#include "toricsmith/polytope.hpp"

namespace toricsmith {

struct RandomOptions {
    std::size_t min_dim = 2;
    std::size_t max_dim = 4;
    std::size_t max_constraints = 10;
    long normal_range = 4;  // entries of extra normals in [-range, range]
};

/// Box rows +-e_i plus random extra normals, every offset a positive
/// rational, so the origin is interior. Not centered.
LabeledPolytope random_polytope(std::uint64_t seed, const RandomOptions& opts = {});

/// random_polytope followed by center().
LabeledPolytope random_centered_polytope(std::uint64_t seed, const RandomOptions& opts = {});

}  // namespace toricsmith
