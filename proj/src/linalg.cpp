#include "toricsmith/linalg.hpp"

namespace toricsmith {

std::vector<std::size_t> rref_in_place(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix copy = m;
    return rref_in_place(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return rank(IntMatrix::from_rows(rows, cols));
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_square(RatMatrix a, RatVector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "solve_square: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(p, c);
        std::swap(b[p], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    RatVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

Integer determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<std::size_t> independent_row_subset(const std::vector<IntVector>& rows, std::size_t cols) {
    std::vector<std::size_t> chosen;
    std::vector<RatVector> echelon;  // reduced copies of the chosen rows
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RatVector v = to_rational(rows[i]);
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            if (sgn(v[lead[k]]) == 0) continue;
            const Rational f = v[lead[k]] / echelon[k][lead[k]];
            for (std::size_t j = 0; j < cols; ++j) v[j] -= f * echelon[k][j];
        }
        std::size_t l = 0;
        while (l < cols && sgn(v[l]) == 0) ++l;
        if (l == cols) continue;
        chosen.push_back(i);
        echelon.push_back(std::move(v));
        lead.push_back(l);
    }
    return chosen;
}

RatVector orthogonal_component(const RatVector& v, const std::vector<IntVector>& span) {
    std::vector<RatVector> ortho;
    for (const auto& s : span) {
        RatVector u = to_rational(s);
        for (const auto& q : ortho) {
            const Rational f = dot(u, q) / dot(q, q);
            for (std::size_t j = 0; j < u.size(); ++j) u[j] -= f * q[j];
        }
        if (!is_zero(u)) ortho.push_back(std::move(u));
    }
    RatVector out = v;
    for (const auto& q : ortho) {
        const Rational f = dot(out, q) / dot(q, q);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * q[j];
    }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

IntMatrix matrix_from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error(ErrorKind::DimensionMismatch, "column has wrong length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

}  // namespace toricsmith
