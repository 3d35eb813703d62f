#pragma once

// Presentation of a centered polytope as an intersection of monotone
// polytopes and cylinders over lower-dimensional monotone polytopes.

#include <cstddef>
#include <string>
#include <vector>

#include "toricsmith/polytope.hpp"
#include "toricsmith/shrink.hpp"

namespace toricsmith {

struct DecompositionPlan {
    LabeledPolytope centered;  // input translated so that the shrink endpoint is 0
    RatVector translation;     // the endpoint of the original input
    ShrinkTrace trace;         // trace of `centered`
    std::vector<std::vector<std::size_t>> groups;  // I_1..I_N, 0-based
    std::vector<Rational> group_levels;            // lambda_{j_1} < ... < lambda_{j_N}

    std::size_t m() const noexcept { return trace.m(); }
    std::size_t n_groups() const noexcept { return groups.size(); }
};

enum class FactorKind { FullDim, Cylinder };

struct MonotoneFactor {
    FactorKind kind = FactorKind::FullDim;
    std::size_t order = 0;  // k for FullDim(k), j for Cylinder(j)
    LabeledPolytope polytope;  // ambient R^n, every offset equal to `level`
    Rational level;
    std::vector<std::size_t> sources;  // input constraint index of each row
    std::size_t rank = 0;              // dimension of the essential polytope

    std::string name() const;
};

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;

    bool passed() const;
    const VerificationCheck* find(const std::string& name) const;
};

/// Centers the input first. Throws InvariantViolated if the group levels do
/// not exceed the last stage time.
DecompositionPlan decomposition_plan(const LabeledPolytope& p);

/// FullDim(0), FullDim(1..N), Cylinder(1..M), in that order.
std::vector<MonotoneFactor> build_factors(const DecompositionPlan& plan);

/// The factor restricted to the span of its normals (equality rows <x, u> = 0
/// for u spanning the orthogonal complement). Same as the factor for FullDim.
LabeledPolytope essential_polytope(const MonotoneFactor& f);

/// Checks: contained (P in every factor), intersection (same vertex set as the
/// stacked factor rows), essential (each essential polytope compact and monotone).
VerificationReport verify_decomposition(const LabeledPolytope& p, const std::vector<MonotoneFactor>& factors);

/// FullDim(k) lies inside FullDim(0) scaled by level_k / level_0.
bool rescaled_inclusion(const MonotoneFactor& full_k, const MonotoneFactor& full_0);

}  // namespace toricsmith
