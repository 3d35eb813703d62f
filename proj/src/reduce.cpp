#include "toricsmith/reduce.hpp"

#include <algorithm>

#include "toricsmith/lattice.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/lp.hpp"

namespace toricsmith {

WeightVector minkowski_weights(const LabeledPolytope& p) {
    const std::size_t d = p.size();
    const std::size_t n = p.dim();
    LpProblem lp;
    lp.objective.assign(d, Rational(-1));
    for (std::size_t i = 0; i < d; ++i) {
        RatVector row(d, Rational(0));
        row[i] = -1;
        lp.inequalities.push_back(LinearRow{std::move(row), Rational(-1)});
    }
    for (std::size_t k = 0; k < n; ++k) {
        RatVector row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = p[i].normal[k];
        lp.equalities.push_back(LinearRow{std::move(row), Rational(0)});
    }
    const LpResult r = lp_solve(lp);
    if (r.status != LpStatus::Optimal) throw Error(ErrorKind::Infeasible, "no positive relation among the normals");
    return primitive_integer_direction(r.witness);
}

KernelData lt_kernel(const LabeledPolytope& p) {
    std::vector<IntVector> columns;
    for (const auto& c : p.constraints()) columns.push_back(c.normal);
    KernelData out;
    out.pi = matrix_from_columns(columns, p.dim());
    if (rank(out.pi) != p.dim()) throw Error(ErrorKind::RankDeficient, "normals do not span the ambient space");
    out.basis = integer_kernel_basis(out.pi);
    return out;
}

ReductionCertificate reduction_certificate(const LabeledPolytope& p) {
    if (!classify(p).simple) throw Error(ErrorKind::NotSimple, "reduction certificate needs a simple polytope");
    const DecompositionPlan plan = decomposition_plan(p);

    ReductionCertificate cert;
    cert.centered = plan.centered;
    cert.translation = plan.translation;
    cert.factors = build_factors(plan);

    std::vector<IntVector> columns;
    for (const auto& f : cert.factors)
        for (const auto& c : f.polytope.constraints()) {
            columns.push_back(c.normal);
            cert.offsets.push_back(f.level);
            cert.central_levels.push_back(2 * f.level);
        }
    cert.d_total = columns.size();
    cert.pi = matrix_from_columns(columns, p.dim());
    cert.kernel_basis = integer_kernel_basis(cert.pi);

    std::vector<IntVector> circles;
    std::size_t start = 0;
    for (const auto& f : cert.factors) {
        CertificateBlock b;
        b.factor = f.name();
        b.start = start;
        b.weights = minkowski_weights(f.polytope);
        b.level = f.level;
        b.circle.assign(cert.d_total, Integer(0));
        for (std::size_t i = 0; i < b.weights.size(); ++i) b.circle[start + i] = b.weights[i];
        start += f.polytope.size();
        circles.push_back(b.circle);
        cert.blocks.push_back(std::move(b));
    }
    cert.complement = complement_basis(circles, cert.kernel_basis);

    const VerificationReport report = verify_certificate(p, cert);
    for (const auto& c : report.checks)
        if (!c.passed) throw Error(ErrorKind::CertificateCheckFailed, c.name + ": " + c.detail);
    return cert;
}

namespace {

VerificationCheck check_weights(const ReductionCertificate& cert) {
    VerificationCheck out{"weights", true, ""};
    auto fail = [&](const std::string& why) {
        out.passed = false;
        if (out.detail.empty()) out.detail = why;
    };
    if (cert.blocks.size() != cert.factors.size()) fail("block count differs from factor count");
    for (std::size_t b = 0; b < cert.blocks.size() && out.passed; ++b) {
        const auto& blk = cert.blocks[b];
        const auto& f = cert.factors[b];
        if (blk.weights.size() != f.polytope.size()) {
            fail(blk.factor + ": weight count differs from row count");
            break;
        }
        IntVector sum(cert.pi.rows(), Integer(0));
        for (std::size_t i = 0; i < blk.weights.size(); ++i) {
            if (sgn(blk.weights[i]) <= 0) fail(blk.factor + ": weight " + std::to_string(i + 1) + " not positive");
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += blk.weights[i] * f.polytope[i].normal[k];
        }
        if (gcd_of(blk.weights) != 1) fail(blk.factor + ": weights not coprime");
        if (!is_zero(sum)) fail(blk.factor + ": sum m_i v_i is not zero");
        IntVector embedded(cert.d_total, Integer(0));
        for (std::size_t i = 0; i < blk.weights.size(); ++i) embedded[blk.start + i] = blk.weights[i];
        if (embedded != blk.circle) fail(blk.factor + ": circle vector differs from the embedded weights");
    }
    return out;
}

VerificationCheck check_kernel(const ReductionCertificate& cert) {
    VerificationCheck out{"kernel_membership", true, ""};
    for (const auto& blk : cert.blocks) {
        bool in = blk.circle.size() == cert.d_total;
        for (std::size_t k = 0; in && k < cert.pi.rows(); ++k) {
            Integer s = 0;
            for (std::size_t i = 0; i < cert.d_total; ++i) s += cert.pi(k, i) * blk.circle[i];
            in = sgn(s) == 0;
        }
        if (in) {
            try {
                lattice_coordinates(blk.circle, cert.kernel_basis);
            } catch (const Error&) {
                in = false;
            }
        }
        if (!in) {
            out.passed = false;
            out.detail = blk.factor + ": circle is not in the kernel lattice";
            break;
        }
    }
    return out;
}

VerificationCheck check_complement(const ReductionCertificate& cert) {
    VerificationCheck out{"complement_index", true, ""};
    std::vector<IntVector> all;
    for (const auto& blk : cert.blocks) all.push_back(blk.circle);
    all.insert(all.end(), cert.complement.begin(), cert.complement.end());
    if (all.size() != cert.kernel_basis.size()) {
        out.passed = false;
        out.detail = std::to_string(all.size()) + " vectors for a kernel of rank " +
                     std::to_string(cert.kernel_basis.size());
        return out;
    }
    const Integer index = sublattice_index(all, cert.kernel_basis);
    if (index != 1) {
        out.passed = false;
        out.detail = "index " + to_string(index);
    }
    return out;
}

VerificationCheck check_levels(const ReductionCertificate& cert) {
    VerificationCheck out{"central_levels", true, ""};
    if (cert.offsets.size() != cert.d_total || cert.central_levels.size() != cert.d_total) {
        out.passed = false;
        out.detail = "level vectors have the wrong length";
        return out;
    }
    std::size_t row = 0;
    for (const auto& f : cert.factors)
        for (std::size_t i = 0; i < f.polytope.size(); ++i, ++row)
            if (cert.offsets[row] != f.level || -cert.central_levels[row] / 2 + cert.offsets[row] != 0) {
                out.passed = false;
                out.detail = "row " + std::to_string(row + 1);
                return out;
            }
    return out;
}

}  // namespace

VerificationReport verify_certificate(const LabeledPolytope& p, const ReductionCertificate& cert) {
    VerificationReport report;
    report.checks.push_back(check_weights(cert));
    report.checks.push_back(check_kernel(cert));
    report.checks.push_back(check_complement(cert));
    report.checks.push_back(check_levels(cert));

    VerificationCheck thm{"decomposition", true, ""};
    if (cert.translation.size() != p.dim() || !(translated(p, cert.translation) == cert.centered)) {
        thm = {"decomposition", false, "centered polytope is not the translated input"};
    } else {
        const auto sub = verify_decomposition(cert.centered, cert.factors);
        for (const auto& c : sub.checks)
            if (!c.passed) {
                thm = {"decomposition", false, c.name + ": " + c.detail};
                break;
            }
    }
    report.checks.push_back(thm);

    VerificationCheck origin{"origin_interior", true, ""};
    for (const auto& c : cert.centered.constraints())
        if (c.is_equality() || sgn(c.offset) <= 0) {
            origin = {"origin_interior", false, "origin is not strictly inside the centered polytope"};
            break;
        }
    report.checks.push_back(origin);
    return report;
}

}  // namespace toricsmith
