#pragma once

// Gromov width certificates. All widths are rational coefficients of pi.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "toricsmith/polytope.hpp"

namespace toricsmith {

enum class LowerStatus { Certified, EwaldNotFound, NotApplicable };
enum class FanoStatus { ReflexiveCompanionOK, NotVerified };

struct LowerBound {
    Rational coefficient;  // 4 t_1
    Rational t1;
    std::optional<std::vector<IntVector>> ewald_basis;
    LowerStatus status = LowerStatus::EwaldNotFound;
};

struct LuWitness {
    std::vector<std::size_t> support;  // 0-based constraint indices
    std::vector<Integer> coefficients;
};

struct UpperBound {
    std::optional<Rational> coefficient;  // 2 sum a_j l_j
    std::optional<LuWitness> witness;
    FanoStatus fano = FanoStatus::NotVerified;
    bool normal_fan_matches = false;  // informational, not used for equality
    unsigned search_bound = 0;
};

struct GromovBounds {
    LowerBound lower;
    UpperBound upper;
    std::optional<std::pair<std::size_t, std::size_t>> opposite_pair;  // rows of the relevant factor
    bool equality = false;
};

inline constexpr unsigned kDefaultLuBound = 12;

/// Same normals, every offset 1.
LabeledPolytope reflexive_companion(const LabeledPolytope& p);
/// Primitive normals w_i, every offset 1.
LabeledPolytope primitive_companion(const LabeledPolytope& p);

/// n centrally symmetric lattice points of D with determinant +-1.
/// Candidates ordered by L1 norm, then lexicographically descending.
/// Throws NotReflexiveCompanion if some offset is not 1.
std::optional<std::vector<IntVector>> ewald_basis(const LabeledPolytope& companion);

/// Centers first. Status NotApplicable for non-smooth input (value still reported).
LowerBound lower_bound(const LabeledPolytope& p);

/// Best relation among circuits and all relations with sum a_j <= search_bound.
/// Throws NoRelationFound.
UpperBound lu_upper_bound(const LabeledPolytope& p, unsigned search_bound = kDefaultLuBound);

/// Proxy: the primitive companion is reflexive (integral vertices and
/// integral polar vertices).
FanoStatus fano_check(const LabeledPolytope& p);

/// The vertex tight sets of the centered input and of its primitive companion
/// coincide. For smooth input this is the usual Fano test.
bool normal_fan_matches(const LabeledPolytope& p);

GromovBounds width_report(const LabeledPolytope& p, unsigned search_bound = kDefaultLuBound);

}  // namespace toricsmith
