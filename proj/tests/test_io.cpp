#include "doctest.h"
#include "golden.hpp"
#include "support.hpp"
#include "toricsmith/io.hpp"

using namespace toricsmith;
using namespace fixtures;
using io::json;

TEST_CASE("rationals round-trip") {
    for (const char* s : {"0", "-7", "22/7", "-3/8", "123456789012345678901234567891/7"}) {
        CHECK(io::rational(q(s)) == json(s));
        CHECK(io::parse_rational_json(io::rational(q(s))) == q(s));
    }
    CHECK(io::parse_rational_json(json(5)) == 5);
    CHECK(io::pi_multiple(q("9/2")) == json{{"pi_coefficient", "9/2"}});
    CHECK_THROWS_AS(io::parse_rational_json(json(1.5)), Error);
}

TEST_CASE("polytope files round-trip") {
    for (const auto& [name, p] : all()) {
        CAPTURE(name);
        const io::PolytopeFile f{name, p};
        const auto back = io::parse_polytope(io::to_json(f));
        CHECK(back.name == name);
        CHECK(back.polytope == p);
        CHECK(io::input_digest(back) == io::input_digest(f));
    }
}

TEST_CASE("fixture files parse to the builders") {
    for (const auto& [name, p] : all()) {
        CAPTURE(name);
        CHECK(io::parse_polytope_text(golden::read(golden::fixture_path(name))).polytope == p);
    }
}

TEST_CASE("digest ignores formatting") {
    const auto a = io::parse_polytope_text(R"({"dim":1,"constraints":[{"normal":[1],"offset":"2/4"},{"normal":[-1],"offset":1}]})");
    const auto b = io::parse_polytope_text(R"({ "constraints": [ {"offset":"1/2","normal":[1]}, {"offset":"1","normal":[-1]} ], "dim": 1 })");
    CHECK(io::input_digest(a) == io::input_digest(b));
    CHECK(io::input_digest(a).rfind("sha256:", 0) == 0);
    CHECK(io::input_digest(a).size() == 7 + 64);
}

TEST_CASE("malformed documents") {
    const auto kind = [](const std::string& text) {
        try {
            io::parse_polytope_text(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    CHECK(kind("{") == ErrorKind::Parse);
    CHECK(kind(R"({"dim":"2","constraints":[]})") == ErrorKind::Parse);
    CHECK(kind(R"({"dim":2,"constraints":[{"normal":[1,"a"],"offset":"1"}]})") == ErrorKind::Parse);
    CHECK(kind(R"({"dim":2,"constraints":[{"normal":[1,0],"offset":"x"}]})") == ErrorKind::Parse);
    CHECK(kind(R"({"dim":1,"constraints":[{"normal":[1,0],"offset":"1"},{"normal":[-1],"offset":"1"}]})") ==
          ErrorKind::Validation);
    CHECK(kind(R"({"dim":1,"constraints":[{"normal":[0],"offset":"1"},{"normal":[-1],"offset":"1"}]})") ==
          ErrorKind::Validation);
    CHECK(kind(R"({"dim":0,"constraints":[]})") == ErrorKind::Validation);
    CHECK(kind(golden::read(golden::fixture_path("bad"))) == ErrorKind::Validation);
}

TEST_CASE("shrink report uses one-based indices") {
    const auto j = io::trace_json(shrink_trace(ex5()));
    CHECK(j["times"] == json{"2", "6"});
    CHECK(j["D"] == json{{1, 2}, {3, 5}});
}

TEST_CASE("canonical dump") {
    const json j{{"b", 1}, {"a", json::array()}};
    CHECK(io::dump(j) == "{\n  \"a\": [],\n  \"b\": 1\n}\n");
    CHECK(io::render_text(json{{"x", json{{"y", "1/2"}}}}) == "x.y: 1/2\n");
}
