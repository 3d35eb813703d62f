#include "doctest.h"
#include "support.hpp"
#include "toricsmith/shrink.hpp"

using namespace toricsmith;
using namespace fixtures;

namespace {

std::vector<std::vector<std::size_t>> groups(const ShrinkTrace& t) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : t.stages) out.push_back(s.frozen);
    return out;
}

std::vector<std::size_t> drops(const ShrinkTrace& t) {
    std::vector<std::size_t> out;
    for (const auto& s : t.stages) out.push_back(s.drop);
    return out;
}

}  // namespace

TEST_CASE("EX1 shrinks to zero at t=3 with facet 6 lost at t=2") {
    const auto tr = shrink_trace(ex1());
    CHECK(tr.times() == std::vector<Rational>{3});
    CHECK(groups(tr) == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4}});
    CHECK(is_zero(tr.endpoint));
    REQUIRE(tr.events.size() == 1);
    CHECK(tr.events[0] == RedundancyEvent{2, 5, EventKind::BecomesRedundant});
}

TEST_CASE("EX2 two stages") {
    const auto tr = shrink_trace(ex2());
    CHECK(tr.times() == std::vector<Rational>{1, 2});
    CHECK(drops(tr) == std::vector<std::size_t>{1, 2});
    CHECK(groups(tr) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3, 4, 5}});
    CHECK(tr.events.empty());
    CHECK(dimension(slice(ex2(), tr, 1)) == 2);
}

TEST_CASE("EX3 redundancies") {
    const auto tr = shrink_trace(ex3());
    CHECK(tr.times() == std::vector<Rational>{4});
    CHECK(is_zero(tr.endpoint));
    const std::vector<RedundancyEvent> want{{1, 5, EventKind::BecomesRedundant},
                                            {2, 4, EventKind::BecomesRedundant},
                                            {2, 6, EventKind::BecomesRedundant}};
    CHECK(tr.events == want);
}

TEST_CASE("EX4 three stages") {
    const auto tr = shrink_trace(ex4());
    CHECK(tr.times() == std::vector<Rational>{1, 3, 4});
    CHECK(drops(tr) == std::vector<std::size_t>{1, 1, 1});
    CHECK(tr.events == std::vector<RedundancyEvent>{{2, 4, EventKind::BecomesRedundant}});
}

TEST_CASE("EX5 reappearing facet") {
    const auto tr = shrink_trace(ex5());
    CHECK(tr.times() == std::vector<Rational>{2, 6});
    CHECK(groups(tr) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 4}});
    const std::vector<RedundancyEvent> want{{1, 2, EventKind::BecomesRedundant},
                                            {4, 3, EventKind::BecomesRedundant},
                                            {4, 2, EventKind::BecomesRelevant}};
    CHECK(tr.events == want);
    const auto& pn = tr.stages[0].projected_normals;
    REQUIRE(pn.size() == 3);
    CHECK(pn[0].w == iv({1, 0}));
    CHECK(pn[0].q == 1);
    CHECK(pn[1].q == 2);
    CHECK(pn[2].w == iv({-1, 0}));
    CHECK(pn[2].q == 1);
}

TEST_CASE("monotone inputs have no events") {
    CHECK(shrink_trace(sq()).events.empty());
    CHECK(shrink_trace(cp2(q("5/2"))).times() == std::vector<Rational>{q("5/2")});
}
