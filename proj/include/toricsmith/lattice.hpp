#pragma once

#include <vector>

#include "toricsmith/rational.hpp"

namespace toricsmith {

struct PrimitiveDecomposition {
    Integer label;  // gcd of the entries, always positive
    IntVector primitive;
};

/// v = label * primitive with gcd(primitive) = 1. Throws ZeroVector for v = 0.
PrimitiveDecomposition primitive_decompose(const IntVector& v);

/// Result of column-style Hermite reduction: a * transform = reduced, with
/// `transform` unimodular and the first `rank` columns of `reduced` in
/// lower-echelon form, the remaining columns zero.
struct ColumnHermite {
    IntMatrix reduced;
    IntMatrix transform;
    std::size_t rank = 0;
};

ColumnHermite column_hermite(const IntMatrix& a);

/// Row Hermite normal form of the lattice spanned by the rows of `rows`
/// (zero rows dropped). Pivots positive, entries above a pivot reduced into [0, pivot).
std::vector<IntVector> row_hermite_basis(const std::vector<IntVector>& rows, std::size_t cols);

/// Nonzero diagonal of the Smith normal form (the invariant factors).
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Lattice basis of {z in Z^d : a z = 0}, saturated, returned in row Hermite form.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

/// Coordinates of `v` in the basis `basis` (which must be linearly independent).
/// Throws NotSaturated if `v` is not an integer combination.
IntVector lattice_coordinates(const IntVector& v, const std::vector<IntVector>& basis);

/// Completes `sub` to a basis of the lattice spanned by `ambient`.
/// Throws NotSaturated when `sub` is not a saturated sublattice of it.
std::vector<IntVector> complement_basis(const std::vector<IntVector>& sub, const std::vector<IntVector>& ambient);

/// Index of the lattice spanned by `vectors` inside the lattice with basis `ambient`
/// (0 when `vectors` does not have full rank there). 1 means `vectors` is a basis.
Integer sublattice_index(const std::vector<IntVector>& vectors, const std::vector<IntVector>& ambient);

}  // namespace toricsmith
