#include "doctest.h"
#include "support.hpp"
#include "toricsmith/kernels.hpp"
#include "toricsmith/lattice.hpp"
#include "toricsmith/random.hpp"
#include "toricsmith/shrink.hpp"

using namespace toricsmith;
using namespace fixtures;

namespace {

bool same(const kernels::Relation& a, const kernels::Relation& b) {
    return a.support == b.support && a.coefficients == b.coefficients && a.value == b.value;
}

bool same(const std::vector<kernels::Relation>& a, const std::vector<kernels::Relation>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same(a[i], b[i])) return false;
    return true;
}

std::vector<std::pair<std::string, LabeledPolytope>> corpus() {
    auto out = all();
    for (std::uint64_t s = 1; s <= 12; ++s) out.emplace_back("seed " + std::to_string(s), random_polytope(s));
    return out;
}

}  // namespace

TEST_CASE("parallel kernels match serial references") {
    for (const auto& [name, p] : corpus()) {
        CAPTURE(name);
        const auto a = kernels::omp::basic_vertices(p), b = kernels::serial::basic_vertices(p);
        CHECK(a.points == b.points);
        CHECK(a.tight == b.tight);

        IntVector lo(p.dim(), Integer(-3)), hi(p.dim(), Integer(3));
        CHECK(kernels::omp::lattice_points(p, lo, hi) == kernels::serial::lattice_points(p, lo, hi));

        std::vector<kernels::RedundancyQuery> queries;
        for (std::size_t i = 0; i < p.size(); ++i) queries.push_back({&p, i});
        CHECK(kernels::omp::redundancy(queries) == kernels::serial::redundancy(queries));

        std::vector<IntVector> w;
        RatVector l;
        for (std::size_t i = 0; i < p.size(); ++i) {
            w.push_back(p.primitive_normal(i));
            l.push_back(p[i].offset / Rational(p.label(i)));
        }
        CHECK(same(kernels::omp::circuits(w, l), kernels::serial::circuits(w, l)));
        const auto ra = kernels::omp::relation_scan(w, l, 6), rb = kernels::serial::relation_scan(w, l, 6);
        REQUIRE(ra.has_value() == rb.has_value());
        if (ra) CHECK(same(*ra, *rb));
    }
}

TEST_CASE("redundancy of a single row") {
    CHECK(kernels::is_redundant(make(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, 1}, 5}}), 4));
    CHECK_FALSE(kernels::is_redundant(ex1(), 5));
    CHECK(kernels::is_redundant(slice(ex1(), 2), 5));
}

TEST_CASE("circuits of the square") {
    const std::vector<IntVector> w{iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})};
    const auto cs = kernels::serial::circuits(w, rv({"1", "1", "1", "1"}));
    REQUIRE(cs.size() == 2);
    for (const auto& c : cs) {
        CHECK(c.coefficients == std::vector<Integer>{1, 1});
        CHECK(c.value == 2);
    }
}
