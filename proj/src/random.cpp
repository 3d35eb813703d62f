#include "toricsmith/random.hpp"

#include <random>

#include "toricsmith/shrink.hpp"

namespace toricsmith {

namespace {

// Modulo draws instead of std distributions: the engine output is fixed by
// the standard, the distributions are not.
struct Draw {
    std::mt19937_64 rng;
    long in(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational offset() {
        Rational q(in(1, 24), in(1, 3));
        q.canonicalize();
        return q;
    }
};

}  // namespace

LabeledPolytope random_polytope(std::uint64_t seed, const RandomOptions& opts) {
    Draw draw{std::mt19937_64(seed)};
    const auto n = static_cast<std::size_t>(draw.in(static_cast<long>(opts.min_dim), static_cast<long>(opts.max_dim)));
    std::vector<Constraint> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            IntVector v(n, Integer(0));
            v[i] = s;
            rows.push_back(Constraint{std::move(v), draw.offset(), Relation::LessEqual});
        }
    const std::size_t room = opts.max_constraints > rows.size() ? opts.max_constraints - rows.size() : 0;
    const auto extra = static_cast<std::size_t>(draw.in(room > 0 ? 1 : 0, static_cast<long>(room)));
    while (rows.size() < 2 * n + extra) {
        IntVector v(n);
        for (auto& x : v) x = draw.in(-opts.normal_range, opts.normal_range);
        if (is_zero(v)) continue;
        rows.push_back(Constraint{std::move(v), draw.offset(), Relation::LessEqual});
    }
    // Shuffle so that box rows are not always first.
    for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[static_cast<std::size_t>(draw.in(0, static_cast<long>(i - 1)))]);
    return LabeledPolytope(n, std::move(rows));
}

LabeledPolytope random_centered_polytope(std::uint64_t seed, const RandomOptions& opts) {
    return center(random_polytope(seed, opts)).first;
}

}  // namespace toricsmith
