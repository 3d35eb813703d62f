#pragma once

// Lattice data exhibiting a centered polytope as the reduction of a product
// of weighted projective spaces.

#include <cstddef>
#include <string>
#include <vector>

#include "toricsmith/decompose.hpp"
#include "toricsmith/polytope.hpp"

namespace toricsmith {

using WeightVector = std::vector<Integer>;

/// Coprime m_i >= 1 with sum m_i v_i = 0, minimizing sum m_i.
/// Throws Infeasible when no such weights exist (the input is not compact).
WeightVector minkowski_weights(const LabeledPolytope& p);

struct KernelData {
    IntMatrix pi;  // n x d, column i is v_i
    std::vector<IntVector> basis;
};

/// Throws RankDeficient when the normals do not span R^n.
KernelData lt_kernel(const LabeledPolytope& p);

struct CertificateBlock {
    std::string factor;
    std::size_t start = 0;  // first column of the block in the stacked system
    WeightVector weights;
    Rational level;
    IntVector circle;  // weights embedded in Z^{d_total}
};

struct ReductionCertificate {
    LabeledPolytope centered;
    RatVector translation;
    std::vector<MonotoneFactor> factors;
    std::size_t d_total = 0;
    IntMatrix pi;
    std::vector<IntVector> kernel_basis;
    std::vector<CertificateBlock> blocks;
    std::vector<IntVector> complement;
    RatVector offsets;         // Lambda: the factor level of every stacked row
    RatVector central_levels;  // 2 * Lambda
};

/// Requires a simple, compact, full-dimensional input (centered automatically).
/// Throws NotSimple, CertificateCheckFailed.
ReductionCertificate reduction_certificate(const LabeledPolytope& p);

/// Checks weights, kernel_membership, complement_index, central_levels,
/// decomposition, origin_interior.
VerificationReport verify_certificate(const LabeledPolytope& p, const ReductionCertificate& cert);

}  // namespace toricsmith
