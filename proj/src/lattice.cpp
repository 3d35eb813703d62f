#include "toricsmith/lattice.hpp"

#include <algorithm>
#include <optional>

#include "toricsmith/linalg.hpp"

namespace toricsmith {

PrimitiveDecomposition primitive_decompose(const IntVector& v) {
    if (v.empty() || is_zero(v)) throw Error(ErrorKind::ZeroVector, "primitive_decompose: zero vector");
    PrimitiveDecomposition out;
    out.label = gcd_of(v);
    out.primitive.reserve(v.size());
    for (const auto& z : v) out.primitive.push_back(Integer(z / out.label));
    return out;
}

namespace {

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

ColumnHermite column_hermite(const IntMatrix& a) {
    ColumnHermite out;
    out.reduced = a;
    out.transform = IntMatrix::identity(a.cols());
    IntMatrix& h = out.reduced;
    IntMatrix& u = out.transform;
    std::size_t c = 0;
    for (std::size_t i = 0; i < h.rows() && c < h.cols(); ++i) {
        for (;;) {
            // Smallest nonzero magnitude in row i among the unreduced columns.
            std::optional<std::size_t> best;
            for (std::size_t j = c; j < h.cols(); ++j) {
                if (sgn(h(i, j)) == 0) continue;
                if (!best || abs(h(i, j)) < abs(h(i, *best))) best = j;
            }
            if (!best) break;
            h.swap_cols(c, *best);
            u.swap_cols(c, *best);
            bool clean = true;
            for (std::size_t j = c + 1; j < h.cols(); ++j) {
                if (sgn(h(i, j)) == 0) continue;
                const Integer q = floor_div(h(i, j), h(i, c));
                add_col_multiple(h, j, c, q);
                add_col_multiple(u, j, c, q);
                if (sgn(h(i, j)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (sgn(h(i, c)) == 0) continue;
        if (sgn(h(i, c)) < 0) {
            negate_col(h, c);
            negate_col(u, c);
        }
        for (std::size_t j = 0; j < c; ++j) {
            const Integer q = floor_div(h(i, j), h(i, c));
            add_col_multiple(h, j, c, q);
            add_col_multiple(u, j, c, q);
        }
        ++c;
    }
    out.rank = c;
    return out;
}

std::vector<IntVector> row_hermite_basis(const std::vector<IntVector>& rows, std::size_t cols) {
    if (rows.empty()) return {};
    IntMatrix t = IntMatrix::from_rows(rows, cols).transposed();
    ColumnHermite ch = column_hermite(t);
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < ch.rank; ++j) out.push_back(ch.reduced.col(j));
    return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> piv;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (sgn(m(i, j)) != 0 && (!piv || abs(m(i, j)) < abs(m(piv->first, piv->second))))
                        piv = std::make_pair(i, j);
            if (!piv) return diag;
            m.swap_rows(t, piv->first);
            m.swap_cols(t, piv->second);
            bool done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m(i, t)) == 0) continue;
                const Integer q = floor_div(m(i, t), m(t, t));
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (sgn(m(i, t)) != 0) done = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m(t, j)) == 0) continue;
                const Integer q = floor_div(m(t, j), m(t, t));
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (sgn(m(t, j)) != 0) done = false;
            }
            if (!done) continue;
            // Divisibility condition: fold an offending row into row t and retry.
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < rows && !bad; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            for (std::size_t j = t; j < cols; ++j) m(t, j) += m(*bad, j);
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a) {
    ColumnHermite ch = column_hermite(a);
    std::vector<IntVector> kernel;
    for (std::size_t j = ch.rank; j < a.cols(); ++j) kernel.push_back(ch.transform.col(j));
    return row_hermite_basis(kernel, a.cols());
}

IntVector lattice_coordinates(const IntVector& v, const std::vector<IntVector>& basis) {
    const std::size_t k = basis.size();
    const std::size_t d = v.size();
    RatMatrix aug(d, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != d) throw Error(ErrorKind::DimensionMismatch, "lattice_coordinates: length");
        for (std::size_t i = 0; i < d; ++i) aug(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < d; ++i) aug(i, k) = v[i];
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == k)
        throw Error(ErrorKind::NotSaturated, "vector is outside the span of the lattice basis");
    if (pivots.size() != k) throw Error(ErrorKind::RankDeficient, "lattice basis is linearly dependent");
    IntVector coords(k);
    for (std::size_t r = 0; r < k; ++r) {
        const Rational& c = aug(r, k);
        if (c.get_den() != 1) throw Error(ErrorKind::NotSaturated, "vector is not in the lattice");
        coords[pivots[r]] = c.get_num();
    }
    return coords;
}

namespace {

IntMatrix invert_unimodular(const IntMatrix& u) {
    const std::size_t n = u.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = u(i, j);
        aug(i, n + i) = 1;
    }
    rref_in_place(aug);
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j).get_num();
    return inv;
}

IntVector combine(const IntVector& coeffs, const std::vector<IntVector>& basis, std::size_t d) {
    IntVector out(d, Integer(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (sgn(coeffs[j]) != 0)
            for (std::size_t i = 0; i < d; ++i) out[i] += coeffs[j] * basis[j][i];
    return out;
}

}  // namespace

std::vector<IntVector> complement_basis(const std::vector<IntVector>& sub, const std::vector<IntVector>& ambient) {
    if (ambient.empty()) {
        if (!sub.empty()) throw Error(ErrorKind::NotSaturated, "sublattice of the zero lattice must be empty");
        return {};
    }
    const std::size_t d = ambient.front().size();
    const std::vector<IntVector> basis = row_hermite_basis(ambient, d);
    const std::size_t r = basis.size();
    if (sub.empty()) return basis;

    IntMatrix coords(sub.size(), r);
    for (std::size_t i = 0; i < sub.size(); ++i) {
        const IntVector c = lattice_coordinates(sub[i], basis);
        for (std::size_t j = 0; j < r; ++j) coords(i, j) = c[j];
    }
    const ColumnHermite ch = column_hermite(coords);
    if (ch.rank != sub.size()) throw Error(ErrorKind::NotSaturated, "sublattice generators are linearly dependent");
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (ch.reduced(i, i) != 1) throw Error(ErrorKind::NotSaturated, "sublattice is not saturated");

    const IntMatrix inv = invert_unimodular(ch.transform);
    std::vector<IntVector> complement;
    for (std::size_t i = sub.size(); i < r; ++i) complement.push_back(combine(inv.row(i), basis, d));
    return row_hermite_basis(complement, d);
}

Integer sublattice_index(const std::vector<IntVector>& vectors, const std::vector<IntVector>& ambient) {
    if (ambient.empty()) return vectors.empty() ? Integer(1) : Integer(0);
    const std::size_t d = ambient.front().size();
    const std::vector<IntVector> basis = row_hermite_basis(ambient, d);
    const std::size_t r = basis.size();
    if (vectors.empty()) return r == 0 ? Integer(1) : Integer(0);
    IntMatrix coords(vectors.size(), r);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        IntVector c;
        try {
            c = lattice_coordinates(vectors[i], basis);
        } catch (const Error&) {
            return 0;
        }
        for (std::size_t j = 0; j < r; ++j) coords(i, j) = c[j];
    }
    const auto inv = smith_invariants(coords);
    if (inv.size() != r) return 0;
    Integer index = 1;
    for (const auto& f : inv) index *= f;
    return index;
}

}  // namespace toricsmith
