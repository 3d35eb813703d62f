#include "doctest.h"
#include "golden.hpp"
#include "support.hpp"
#include "toricsmith/lattice.hpp"
#include "toricsmith/linalg.hpp"
#include "toricsmith/lp.hpp"
#include "toricsmith/shrink.hpp"

using namespace toricsmith;
using namespace fixtures;

TEST_CASE("rationals parse canonically") {
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-10/5")) == "-2");
    CHECK(to_string(q("0")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(primitive_integer_direction(rv({"-2/3", "4/9"})) == iv({-3, 2}));
}

TEST_CASE("exact simplex") {
    LpProblem lp;
    lp.objective = rv({"1", "1"});
    lp.inequalities = {{rv({"3", "1"}), q("6")}, {rv({"1", "3"}), q("6")}, {rv({"-1", "0"}), q("0")}, {rv({"0", "-1"}), q("0")}};
    const auto r = lp_solve(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.optimum == q("3"));
    CHECK(r.witness == rv({"3/2", "3/2"}));

    lp.inequalities = {{rv({"1", "0"}), q("1")}};
    CHECK(lp_solve(lp).status == LpStatus::Unbounded);

    lp.inequalities = {{rv({"1", "0"}), q("1")}, {rv({"-1", "0"}), q("-2")}};
    CHECK(lp_solve(lp).status == LpStatus::Infeasible);

    LpProblem eq;
    eq.objective = rv({"0", "1"});
    eq.inequalities = {{rv({"0", "1"}), q("5")}};
    eq.equalities = {{rv({"1", "1"}), q("2")}};
    const auto e = lp_solve(eq);
    CHECK(e.status == LpStatus::Optimal);
    CHECK(e.optimum == 5);
}

TEST_CASE("lattice algorithms") {
    CHECK(primitive_decompose(iv({4, -6})).label == 2);
    CHECK(primitive_decompose(iv({4, -6})).primitive == iv({2, -3}));
    CHECK_THROWS_AS(primitive_decompose(iv({0, 0})), Error);

    IntMatrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 4; a(1, 0) = 6; a(1, 1) = 8;
    CHECK(smith_invariants(a) == std::vector<Integer>{2, 4});

    IntMatrix cp(2, 3);
    cp(0, 0) = -1; cp(0, 1) = 0; cp(0, 2) = 1;
    cp(1, 0) = 0; cp(1, 1) = -1; cp(1, 2) = 1;
    CHECK(integer_kernel_basis(cp) == std::vector<IntVector>{iv({1, 1, 1})});

    const auto h = column_hermite(cp);
    CHECK(h.rank == 2);
    CHECK(abs(determinant(h.transform)) == 1);

    CHECK(row_hermite_basis({iv({2, 4}), iv({3, 3})}, 2) == std::vector<IntVector>{iv({1, 5}), iv({0, 6})});
    CHECK(lattice_coordinates(iv({3, 5}), {iv({1, 1}), iv({0, 1})}) == iv({3, 2}));
    CHECK_THROWS_AS(lattice_coordinates(iv({1, 0}), {iv({2, 0}), iv({0, 1})}), Error);

    const std::vector<IntVector> z2{iv({1, 0}), iv({0, 1})};
    CHECK(complement_basis({iv({1, 1})}, z2).size() == 1);
    CHECK(sublattice_index({iv({1, 1}), complement_basis({iv({1, 1})}, z2)[0]}, z2) == 1);
    CHECK(complement_basis({iv({1, 1, 1})}, {iv({1, 1, 1})}).empty());
    CHECK_THROWS_AS(complement_basis({iv({2, 0})}, z2), Error);
    CHECK(sublattice_index({iv({2, 0}), iv({0, 1})}, z2) == 2);
}

TEST_CASE("vertices") {
    const auto v = vertices(cp2(1));
    CHECK(v.points == std::vector<RatVector>{rv({"-1", "-1"}), rv({"-1", "2"}), rv({"2", "-1"})});
    std::vector<RatVector> expected;
    for (const auto& x : golden::load("ex1_vertices.json")) {
        RatVector p;
        for (const auto& s : x) p.push_back(q(s.get<std::string>().c_str()));
        expected.push_back(p);
    }
    CHECK(vertices(ex1()).points == expected);
    CHECK_THROWS_AS(vertices(make(2, {{{1, 0}, 1}, {{0, 1}, 1}})), Error);
    CHECK_THROWS_AS(vertices(make(1, {{{1}, -1}, {{-1}, -1}})), Error);
}

TEST_CASE("lattice points") {
    const auto as_ints = [](const golden::json& j) {
        std::vector<IntVector> out;
        for (const auto& x : j) {
            IntVector p;
            for (const auto& c : x) p.emplace_back(c.get<long>());
            out.push_back(p);
        }
        return out;
    };
    CHECK(enumerate_lattice_points(cp2(1)) == as_ints(golden::load("cp2_lattice_points.json")));
    CHECK(enumerate_lattice_points(sq(1)) == as_ints(golden::load("sq_lattice_points.json")));
    CHECK(enumerate_lattice_points(cp2(1)).size() == 10);
    CHECK(enumerate_lattice_points(sq(1)).size() == 9);
    CHECK(enumerate_lattice_points(seg(q("3/2"))) == std::vector<IntVector>{iv({-1}), iv({0}), iv({1})});
}

TEST_CASE("polar duals") {
    CHECK(polar_dual(sq(1)) == std::vector<RatVector>{rv({"-1", "0"}), rv({"0", "-1"}), rv({"0", "1"}), rv({"1", "0"})});
    CHECK(polar_dual(cp2(1)) == std::vector<RatVector>{rv({"-1", "0"}), rv({"0", "-1"}), rv({"1", "1"})});
    CHECK(polar_dual(seg(2)) == std::vector<RatVector>{rv({"-1/2"}), rv({"1/2"})});
    CHECK_THROWS_AS(polar_dual(make(1, {{{1}, 1}, {{-1}, 0}})), Error);
}

TEST_CASE("weighted projective polytopes") {
    const auto w = wps_polytope({2, 3, 1}, 1);
    CHECK(w.size() == 3);
    CHECK(classify(w).compact);
    CHECK(classify(w).monotone);
    CHECK(classify(wps_polytope({1, 1, 1}, 1)).smooth);
    CHECK(wps_polytope({1, 2, 1}, 1) == make(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 2}, 1}}));
    CHECK(wps_polytope({1, 1, 1}, 3) == make(2, {{{-1, 0}, 3}, {{0, -1}, 3}, {{1, 1}, 3}}));
    CHECK(is_zero(shrink_trace(wps_polytope({2, 3, 1}, 2)).endpoint));
    CHECK_THROWS_AS(wps_polytope({1, 1, 2}, 1), Error);
    CHECK_THROWS_AS(wps_polytope({0, 1}, 1), Error);
    CHECK_THROWS_AS(wps_polytope({1, 1}, 0), Error);
}

TEST_CASE("classification") {
    const auto r = classify(ex1());
    CHECK(r.compact);
    CHECK(r.simple);
    CHECK(r.trivially_labeled);
    CHECK_FALSE(r.monotone);
    CHECK_FALSE(r.smooth);
    CHECK(r.dimension == 2);

    const auto c = classify(cp2(1));
    CHECK(c.smooth);
    CHECK(c.monotone);
    CHECK(c.reflexive);
    CHECK_FALSE(classify(cp2(2)).reflexive);

    CHECK(classify(ex2()).smooth);
    CHECK(classify(ex3()).simple);
    CHECK_FALSE(classify(ex5()).smooth);
    CHECK_FALSE(classify(make(2, {{{2, 0}, 2}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}})).trivially_labeled);
    CHECK_FALSE(is_compact(make(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}})));

    const auto flat = make(2, {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 1}});
    CHECK(dimension(flat) == 1);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}}), Error);
    CHECK_THROWS_AS(make(2, {{{1}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}}), Error);
    CHECK_THROWS_AS(LabeledPolytope(0, {}), Error);
}

TEST_CASE("scaling and translation") {
    CHECK(scaled(cp2(1), 3) == cp2(3));
    const auto t = translated(sq(1), rv({"1", "-2"}));
    CHECK(t.contains(rv({"0", "1"})));
    CHECK(t.contains(rv({"-2", "3"})));
    CHECK_FALSE(t.contains(rv({"0", "0"})));
    CHECK(is_subset(cp2(1), cp2(2)));
    CHECK_FALSE(is_subset(cp2(2), cp2(1)));
}
