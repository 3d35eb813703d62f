#include "doctest.h"
#include "support.hpp"
#include "toricsmith/reduce.hpp"

using namespace toricsmith;
using namespace fixtures;

TEST_CASE("minkowski weights") {
    CHECK(minkowski_weights(cp2(3)) == WeightVector{1, 1, 1});
    CHECK(minkowski_weights(seg(2)) == WeightVector{1, 1});
    CHECK(minkowski_weights(make(2, {{{0, 1}, 6}, {{0, -1}, 6}, {{1, 1}, 6}, {{-1, 0}, 6}})) ==
          WeightVector{1, 2, 1, 1});
    CHECK_THROWS_AS(minkowski_weights(make(2, {{{1, 0}, 1}, {{0, 1}, 1}})), Error);
}

TEST_CASE("kernels") {
    CHECK(lt_kernel(cp2()).basis == std::vector<IntVector>{iv({1, 1, 1})});
    CHECK(lt_kernel(sq()).basis == std::vector<IntVector>{iv({1, 1, 0, 0}), iv({0, 0, 1, 1})});
    CHECK(lt_kernel(wps_polytope({2, 3, 1}, 1)).basis == std::vector<IntVector>{iv({2, 3, 1})});
}

TEST_CASE("certificates verify on fixtures") {
    for (const auto& [name, p] : all()) {
        if (!classify(p).simple) continue;
        CAPTURE(name);
        const auto cert = reduction_certificate(p);
        CHECK(verify_certificate(p, cert).passed());
    }
}

TEST_CASE("CP2 certificate") {
    const auto cert = reduction_certificate(cp2(2));
    CHECK(cert.blocks.size() == 1);
    CHECK(cert.blocks[0].circle == iv({1, 1, 1}));
    CHECK(cert.complement.empty());
    CHECK(cert.central_levels == rv({"4", "4", "4"}));
}

TEST_CASE("negated weight fails only the weights check") {
    for (const auto& p : {sq(), ex2(), ex5()}) {
        auto cert = reduction_certificate(p);
        cert.blocks.back().weights[0] = -cert.blocks.back().weights[0];
        const auto rep = verify_certificate(p, cert);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.passed == (c.name != "weights"));
        }
    }
}

TEST_CASE("truncated complement fails only the index check") {
    for (const auto& p : {sq(), ex2()}) {
        auto cert = reduction_certificate(p);
        REQUIRE_FALSE(cert.complement.empty());
        cert.complement.pop_back();
        const auto rep = verify_certificate(p, cert);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.passed == (c.name != "complement_index"));
        }
    }
}

TEST_CASE("non-simple input is rejected") {
    const auto pyramid = make(3, {{{0, 0, -1}, 1}, {{2, 0, 1}, 2}, {{-2, 0, 1}, 2}, {{0, 2, 1}, 2}, {{0, -2, 1}, 2}});
    REQUIRE_FALSE(classify(pyramid).simple);
    try {
        reduction_certificate(pyramid);
        FAIL("expected NotSimple");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSimple);
    }
}
