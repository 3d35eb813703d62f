#include <algorithm>
#include <cstdint>
#include <limits>

#include <omp.h>

#include "kernels_common.hpp"
#include "toricsmith/kernels.hpp"
#include "toricsmith/linalg.hpp"

namespace toricsmith::kernels::omp {

namespace {

// Fraction-free solve of the square system formed by `rows` (indices into the
// integer-scaled system). Returns numerators z and denominator det > 0 with
// x = z / det, or nothing when singular.
bool bareiss_solve(const std::vector<IntVector>& normals, const std::vector<Integer>& rhs,
                   const std::vector<std::size_t>& rows, IntVector& z, Integer& det) {
    const std::size_t n = rows.size();
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = normals[rows[i]][j];
        m(i, n) = rhs[rows[i]];
    }
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return false;
            m.swap_rows(p, k);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    // After Bareiss elimination the last pivot is +-det of the (row-permuted) system.
    det = m(n - 1, n - 1);
    z.assign(n, Integer(0));
    for (std::size_t i = n; i-- > 0;) {
        Integer s = det * m(i, n);
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * z[j];
        mpz_divexact(z[i].get_mpz_t(), s.get_mpz_t(), m(i, i).get_mpz_t());
    }
    if (sgn(det) < 0) {
        det = -det;
        for (auto& v : z) v = -v;
    }
    return true;
}

struct ScaledSystem {
    std::vector<IntVector> normals;
    std::vector<Integer> rhs;  // offsets * scale
    Integer scale;
};

ScaledSystem scale_offsets(const LabeledPolytope& p) {
    ScaledSystem s;
    s.scale = 1;
    for (const auto& c : p.constraints()) s.scale = lcm(s.scale, c.offset.get_den());
    for (const auto& c : p.constraints()) {
        s.normals.push_back(c.normal);
        s.rhs.push_back(Integer(c.offset.get_num() * (s.scale / c.offset.get_den())));
    }
    return s;
}

}  // namespace

VertexSet basic_vertices(const LabeledPolytope& p) {
    const std::size_t n = p.dim();
    const ScaledSystem sys = scale_offsets(p);
    const auto plan = detail::plan_bases(p);
    const auto combos = detail::combinations(plan.free_rows.size(), plan.choose);

    std::vector<std::vector<std::pair<RatVector, std::vector<std::size_t>>>> per_thread(
        static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(combos.size()); ++c) {
        std::vector<std::size_t> rows = plan.fixed_rows;
        for (auto k : combos[static_cast<std::size_t>(c)]) rows.push_back(plan.free_rows[k]);
        IntVector z;
        Integer det;
        if (!bareiss_solve(sys.normals, sys.rhs, rows, z, det)) continue;
        std::vector<std::size_t> tight;
        bool feasible = true;
        for (std::size_t i = 0; i < p.size() && feasible; ++i) {
            const Integer lhs = dot(sys.normals[i], z);
            const Integer bound = sys.rhs[i] * det;
            if (lhs == bound) {
                tight.push_back(i);
            } else if (p[i].is_equality() || lhs > bound) {
                feasible = false;
            }
        }
        if (!feasible) continue;
        RatVector x(n);
        const Integer den = det * sys.scale;
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = Rational(z[j], den);
            x[j].canonicalize();
        }
        per_thread[static_cast<std::size_t>(omp_get_thread_num())].emplace_back(std::move(x), std::move(tight));
    }

    std::vector<std::pair<RatVector, std::vector<std::size_t>>> all;
    for (auto& chunk : per_thread)
        for (auto& item : chunk) all.push_back(std::move(item));
    return detail::canonical_vertex_set(std::move(all));
}

std::vector<IntVector> lattice_points(const LabeledPolytope& p, const IntVector& lo, const IntVector& hi) {
    const std::size_t n = p.dim();
    if (n == 0) return {};
    for (std::size_t j = 0; j < n; ++j)
        if (lo[j] > hi[j]) return {};
    const ScaledSystem sys = scale_offsets(p);
    const Integer first_lo = lo[0];
    const long span = Integer(hi[0] - lo[0] + 1).get_si();
    std::vector<std::vector<IntVector>> by_first(static_cast<std::size_t>(std::max(span, 0L)));

#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < span; ++k) {
        IntVector x(lo);
        x[0] = first_lo + k;
        auto& out = by_first[static_cast<std::size_t>(k)];
        for (;;) {
            bool inside = true;
            for (std::size_t i = 0; i < p.size() && inside; ++i) {
                const Integer lhs = dot(sys.normals[i], x) * sys.scale;
                inside = p[i].is_equality() ? lhs == sys.rhs[i] : lhs <= sys.rhs[i];
            }
            if (inside) out.push_back(x);
            // Odometer over coordinates 1..n-1, last coordinate fastest.
            std::size_t j = n - 1;
            while (j >= 1 && x[j] == hi[j]) {
                x[j] = lo[j];
                --j;
            }
            if (j == 0) break;
            ++x[j];
        }
    }
    std::vector<IntVector> out;
    for (auto& chunk : by_first)
        for (auto& v : chunk) out.push_back(std::move(v));
    return out;  // already lexicographic: first coordinate outer, odometer inner
}

std::vector<char> redundancy(const std::vector<RedundancyQuery>& queries) {
    std::vector<char> out(queries.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t q = 0; q < static_cast<std::int64_t>(queries.size()); ++q) {
        const auto& query = queries[static_cast<std::size_t>(q)];
        out[static_cast<std::size_t>(q)] = is_redundant(*query.slice, query.index) ? 1 : 0;
    }
    return out;
}

std::vector<Relation> circuits(const std::vector<IntVector>& normals, const RatVector& offsets) {
    if (normals.empty()) return {};
    const std::size_t n = normals.front().size();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t size = 2; size <= std::min(n + 1, normals.size()); ++size)
        for (auto& s : detail::combinations(normals.size(), size)) subsets.push_back(std::move(s));

    std::vector<std::optional<Relation>> found(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(subsets.size()); ++s)
        found[static_cast<std::size_t>(s)] = detail::circuit_of(normals, offsets, subsets[static_cast<std::size_t>(s)]);

    std::vector<Relation> out;
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    return out;
}

namespace {

struct ScanState {
    const std::vector<std::vector<std::int64_t>>* w = nullptr;
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::int64_t> sum;
    std::vector<unsigned> a;
    std::vector<std::vector<unsigned>> hits;
};

void scan(ScanState& st, std::size_t j, unsigned remaining) {
    if (j == st.d) {
        bool zero = true;
        for (auto s : st.sum)
            if (s != 0) {
                zero = false;
                break;
            }
        if (zero && std::any_of(st.a.begin(), st.a.end(), [](unsigned v) { return v > 0; })) st.hits.push_back(st.a);
        return;
    }
    const auto& wj = (*st.w)[j];
    for (unsigned v = 0; v <= remaining; ++v) {
        st.a[j] = v;
        scan(st, j + 1, remaining - v);
        for (std::size_t k = 0; k < st.n; ++k) st.sum[k] += wj[k];
    }
    for (std::size_t k = 0; k < st.n; ++k) st.sum[k] -= static_cast<std::int64_t>(remaining + 1) * wj[k];
    st.a[j] = 0;
}

}  // namespace

std::optional<Relation> relation_scan(const std::vector<IntVector>& normals, const RatVector& offsets, unsigned bound) {
    const std::size_t d = normals.size();
    if (d == 0 || bound == 0) return std::nullopt;
    const std::size_t n = normals.front().size();
    std::vector<std::vector<std::int64_t>> w(d, std::vector<std::int64_t>(n));
    const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 4) / (Integer(bound) * Integer(d) + 1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (abs(normals[j][k]) > limit) return serial::relation_scan(normals, offsets, bound);
            w[j][k] = normals[j][k].get_si();
        }

    std::vector<std::vector<std::vector<unsigned>>> hits(bound + 1);
#pragma omp parallel for schedule(dynamic)
    for (long first = 0; first <= static_cast<long>(bound); ++first) {
        ScanState st;
        st.w = &w;
        st.d = d;
        st.n = n;
        st.sum.assign(n, 0);
        st.a.assign(d, 0);
        st.a[0] = static_cast<unsigned>(first);
        for (std::size_t k = 0; k < n; ++k) st.sum[k] = first * w[0][k];
        scan(st, 1, bound - static_cast<unsigned>(first));
        hits[static_cast<std::size_t>(first)] = std::move(st.hits);
    }

    std::optional<Relation> best;
    for (const auto& bucket : hits)
        for (const auto& a : bucket) {
            Relation r = detail::relation_from_dense(a, offsets);
            if (!best || relation_better(r, *best, d)) best = std::move(r);
        }
    return best;
}

}  // namespace toricsmith::kernels::omp
