#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "toricsmith/polytope.hpp"

namespace fixtures {

using toricsmith::IntVector;
using toricsmith::LabeledPolytope;
using toricsmith::Rational;

inline LabeledPolytope make(std::size_t n, std::initializer_list<std::pair<std::vector<long>, Rational>> rows) {
    std::vector<std::pair<IntVector, Rational>> out;
    for (const auto& [v, l] : rows) {
        IntVector w;
        for (long x : v) w.emplace_back(x);
        out.emplace_back(std::move(w), l);
    }
    return LabeledPolytope::from_rows(n, out);
}

inline Rational q(const char* s) { return toricsmith::parse_rational(s); }

inline LabeledPolytope ex1() {
    return make(2, {{{0, 1}, 3}, {{0, -1}, 3}, {{-1, 0}, 3}, {{1, 1}, 3}, {{1, -1}, 3}, {{2, 1}, 4}});
}
inline LabeledPolytope ex2() {
    return make(3, {{{0, 0, 1}, 1}, {{0, 0, -1}, 1}, {{1, 0, 1}, 2}, {{-1, 0, 1}, 2}, {{0, 1, 1}, 2}, {{0, -1, 1}, 2}});
}
inline LabeledPolytope ex3() {
    return make(2, {{{1, 0}, 4}, {{-1, 0}, 4}, {{0, 1}, 4}, {{0, -1}, 4}, {{1, 1}, 6}, {{-1, 1}, 7}, {{-2, -3}, 12}});
}
inline LabeledPolytope ex4() {
    return make(3, {{{1, 0, 0}, 4}, {{-1, 0, 0}, 4}, {{0, 1, 0}, 3}, {{0, -1, 0}, 3}, {{1, 1, 0}, 5},
                    {{0, 0, 1}, 1}, {{0, 0, -1}, 1}});
}
inline LabeledPolytope ex5() {
    return make(2, {{{0, 1}, 2}, {{0, -1}, 2}, {{1, 1}, 6}, {{2, -1}, 8}, {{-1, 0}, 6}});
}
inline LabeledPolytope cp2(const Rational& l = 1) { return make(2, {{{-1, 0}, l}, {{0, -1}, l}, {{1, 1}, l}}); }
inline LabeledPolytope sq(const Rational& l = 1) {
    return make(2, {{{1, 0}, l}, {{-1, 0}, l}, {{0, 1}, l}, {{0, -1}, l}});
}
inline LabeledPolytope seg(const Rational& l = 1) { return make(1, {{{1}, l}, {{-1}, l}}); }

inline std::vector<std::pair<std::string, LabeledPolytope>> all() {
    return {{"ex1", ex1()}, {"ex2", ex2()}, {"ex3", ex3()}, {"ex4", ex4()}, {"ex5", ex5()},
            {"cp2", cp2()}, {"sq", sq()},   {"seg", seg()}};
}

inline toricsmith::RatVector rv(std::initializer_list<const char*> xs) {
    toricsmith::RatVector v;
    for (auto s : xs) v.push_back(q(s));
    return v;
}

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace fixtures
