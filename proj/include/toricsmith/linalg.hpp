#pragma once

#include <optional>
#include <vector>

#include "toricsmith/rational.hpp"

namespace toricsmith {

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t cols);

/// Basis of {x : m x = 0} over Q, one vector per free column (standard RREF basis).
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Unique solution of a square nonsingular system, nullopt if singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);

/// Indices of a maximal linearly independent subset of `rows`, greedy in order.
std::vector<std::size_t> independent_row_subset(const std::vector<IntVector>& rows, std::size_t cols);

/// Component of `v` orthogonal to span(`span`), via rational Gram-Schmidt.
RatVector orthogonal_component(const RatVector& v, const std::vector<IntVector>& span);

RatMatrix to_rational(const IntMatrix& m);
IntMatrix matrix_from_columns(const std::vector<IntVector>& columns, std::size_t rows);

}  // namespace toricsmith
