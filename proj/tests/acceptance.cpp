// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "support.hpp"
#include "toricsmith/gromov.hpp"
#include "toricsmith/io.hpp"
#include "toricsmith/random.hpp"
#include "toricsmith/reduce.hpp"
#include "toricsmith/shrink.hpp"

using namespace toricsmith;
using namespace fixtures;

namespace {

constexpr std::uint64_t kRandomSeeds = 120;
constexpr int kTimesPerPolytope = 50;

struct Outcome {
    bool passed = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) note << "first failure: " << what;
        passed = passed && ok;
    }
};

std::vector<std::vector<std::size_t>> frozen_sets(const ShrinkTrace& t) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : t.stages) out.push_back(s.frozen);
    return out;
}

std::vector<std::size_t> drops(const ShrinkTrace& t) {
    std::vector<std::size_t> out;
    for (const auto& s : t.stages) out.push_back(s.drop);
    return out;
}

void shrink_traces(Outcome& o) {
    using E = RedundancyEvent;
    constexpr auto R = EventKind::BecomesRedundant;
    constexpr auto V = EventKind::BecomesRelevant;

    const auto t1 = shrink_trace(ex1());
    o.require(t1.times() == std::vector<Rational>{3}, "EX1 t1 = 3");
    o.require(is_zero(t1.endpoint), "EX1 endpoint 0");
    o.require(t1.events == std::vector<E>{{2, 5, R}}, "EX1 facet 6 redundant at t=2");

    const auto t2 = shrink_trace(ex2());
    o.require(t2.times() == std::vector<Rational>{1, 2}, "EX2 times (1,2)");
    o.require(drops(t2) == std::vector<std::size_t>{1, 2}, "EX2 drops (1,2)");

    const auto t3 = shrink_trace(ex3());
    o.require(t3.times() == std::vector<Rational>{4}, "EX3 t1 = 4");
    o.require(t3.events == std::vector<E>{{1, 5, R}, {2, 4, R}, {2, 6, R}}, "EX3 redundancies at t=1 and t=2");

    const auto t4 = shrink_trace(ex4());
    o.require(t4.times() == std::vector<Rational>{1, 3, 4}, "EX4 times (1,3,4)");
    o.require(t4.events == std::vector<E>{{2, 4, R}}, "EX4 redundancy at t=2");

    const auto t5 = shrink_trace(ex5());
    o.require(t5.times() == std::vector<Rational>{2, 6}, "EX5 times (2,6)");
    o.require(frozen_sets(t5) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 4}}, "EX5 D sets");
    o.require(t5.events == std::vector<E>{{1, 2, R}, {4, 3, R}, {4, 2, V}}, "EX5 transition at t=4");
    o.note << (o.passed ? "EX1-EX5 times, drops and events exact" : "");
}

void golden_decompositions(Outcome& o) {
    for (const char* name : {"ex1", "ex2", "ex5"}) {
        const auto file = io::parse_polytope_text(golden::read(golden::fixture_path(name)));
        const auto plan = decomposition_plan(file.polytope);
        const std::string got = io::dump(io::decomposition_summary(plan, build_factors(plan)));
        o.require(got == golden::read(golden::path(std::string(name) + "_decomposition.json")),
                  std::string(name) + " differs from golden");
    }
    o.note << (o.passed ? "EX1, EX2, EX5 byte-identical to golden files" : "");
}

void decomposition_property(Outcome& o) {
    std::size_t stages = 0, groups = 0;
    for (std::uint64_t s = 1; s <= kRandomSeeds && o.passed; ++s) {
        const std::string tag = "seed " + std::to_string(s) + ": ";
        const auto p = random_centered_polytope(s);
        const auto plan = decomposition_plan(p);
        const auto factors = build_factors(plan);
        o.require(verify_decomposition(p, factors).passed(), tag + "verify_decomposition");
        for (const auto& f : factors) {
            const auto e = essential_polytope(f);
            o.require(is_compact(e), tag + f.name() + " compact");
            const auto& cs = f.polytope.constraints();
            for (const auto& c : cs) o.require(c.offset == f.level, tag + f.name() + " monotone");
        }
        const auto times = plan.trace.times();
        for (std::size_t j = 1; j < times.size(); ++j) o.require(times[j - 1] < times[j], tag + "t_j increasing");
        Rational prev = times.back();
        for (const auto& l : plan.group_levels) {
            o.require(prev < l, tag + "levels after t_{M+1} increasing");
            prev = l;
        }
        stages += times.size();
        groups += plan.n_groups();
    }
    if (o.passed)
        o.note << kRandomSeeds << " centered polytopes, " << stages << " stages, " << groups << " level groups";
}

void shrink_oracle(Outcome& o) {
    std::mt19937_64 rng(20261016);
    std::size_t samples = 0;
    for (std::uint64_t s = 1; s <= kRandomSeeds && o.passed; ++s) {
        const std::string tag = "seed " + std::to_string(s) + ": ";
        const auto p = random_polytope(s);
        const auto trace = shrink_trace(p, TraceDetail::StagesOnly);
        const Rational end = trace.final_time();
        for (int k = 0; k < kTimesPerPolytope && o.passed; ++k) {
            // Stage times themselves are included among the samples.
            Rational t = k < static_cast<int>(trace.stages.size())
                             ? trace.stages[static_cast<std::size_t>(k)].time
                             : end * Rational(static_cast<long>(rng() % 1001)) / 1000;
            t.canonicalize();
            o.require(dimension(slice(p, trace, t)) == trace.predicted_dimension(p.dim(), t), tag + "dimension profile");
            const auto& next = *std::find_if(trace.stages.begin(), trace.stages.end(),
                                             [&](const ShrinkStage& st) { return t <= st.time; });
            o.require(max_slack(p, trace, t) == next.time - t, tag + "max slack linear");
            ++samples;
        }
    }
    if (o.passed) o.note << samples << " sampled times agree";
}

void minkowski_suite(Outcome& o) {
    auto check = [&](const LabeledPolytope& p, const std::string& tag) {
        const auto m = minkowski_weights(p);
        Integer g = 0;
        IntVector sum(p.dim(), Integer(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            o.require(m[i] >= 1, tag + " positive");
            g = gcd(g, m[i]);
            for (std::size_t k = 0; k < p.dim(); ++k) sum[k] += m[i] * p[i].normal[k];
        }
        o.require(g == 1, tag + " coprime");
        o.require(is_zero(sum), tag + " balanced");
    };
    for (const auto& [name, p] : all()) check(p, name);
    for (std::uint64_t s = 1; s <= kRandomSeeds; ++s) check(random_polytope(s), "seed " + std::to_string(s));
    bool infeasible = false;
    try {
        minkowski_weights(make(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    } catch (const Error& e) {
        infeasible = e.kind() == ErrorKind::Infeasible;
    }
    o.require(infeasible, "non-compact control reports Infeasible");
    if (o.passed) o.note << all().size() << " fixtures, " << kRandomSeeds << " random, negative control Infeasible";
}

bool only_fails(const VerificationReport& rep, const std::string& check) {
    bool ok = rep.checks.size() == 6;
    for (const auto& c : rep.checks) ok = ok && c.passed == (c.name != check);
    return ok;
}

void certificates(Outcome& o) {
    std::size_t complement_mutants = 0;
    for (const auto& [name, p] : all()) {
        const auto cert = reduction_certificate(p);
        const auto rep = verify_certificate(p, cert);
        o.require(rep.passed() && rep.checks.size() == 6, name + " certificate");

        auto negated = cert;
        negated.blocks.front().weights[0] = -negated.blocks.front().weights[0];
        o.require(only_fails(verify_certificate(p, negated), "weights"), name + " negated weight");

        if (!cert.complement.empty()) {
            auto truncated = cert;
            truncated.complement.pop_back();
            o.require(only_fails(verify_certificate(p, truncated), "complement_index"), name + " truncated complement");
            ++complement_mutants;
        }
    }
    o.require(complement_mutants > 0, "some fixture has a nonempty complement");
    if (o.passed)
        o.note << all().size() << " certificates pass; " << all().size() << " weight and " << complement_mutants
               << " complement mutants caught";
}

void gromov_bounds(Outcome& o) {
    for (const char* l : {"1", "5/2", "3"}) {
        const Rational lambda = q(l);
        const auto s = width_report(sq(lambda));
        o.require(s.lower.coefficient == 4 * lambda && s.upper.coefficient == 4 * lambda && s.equality,
                  std::string("SQ(") + l + ")");
        const auto c = width_report(cp2(lambda));
        o.require(c.lower.coefficient == 4 * lambda && c.upper.coefficient == 6 * lambda && !c.equality,
                  std::string("CP2(") + l + ")");
    }
    const auto e = width_report(ex2());
    const auto factors = build_factors(decomposition_plan(ex2()));
    const auto& cyl = factors.back();
    o.require(e.lower.coefficient == 4 && e.upper.coefficient == 4 && e.equality, "EX2 width 4");
    o.require(e.opposite_pair && cyl.kind == FactorKind::Cylinder &&
                  std::vector<std::size_t>{e.opposite_pair->first, e.opposite_pair->second} == cyl.sources,
              "EX2 opposite pair in the cylinder factor");
    std::size_t smooth = 0;
    for (const auto& [name, p] : all()) {
        if (!classify(p).smooth) continue;
        ++smooth;
        o.require(ewald_basis(reflexive_companion(center(p).first)).has_value(), name + " Ewald basis");
    }
    if (o.passed) o.note << "SQ, CP2 at three levels, EX2 cylinder path, " << smooth << " Ewald bases";
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

void determinism(Outcome& o) {
    const std::string cli = TORICSMITH_CLI;
    std::string files, singles;
    for (const auto& [name, p] : all()) {
        const std::string f = golden::fixture_path(name);
        const std::string a = capture(cli + " all " + f + " 2>/dev/null");
        const std::string b = capture(cli + " all " + f + " 2>/dev/null");
        o.require(!a.empty() && a == b, name + " repeat run");
        files += " " + f;
        singles += a;
    }
    const std::string serial = capture(cli + " all --jobs 1" + files + " 2>/dev/null");
    const std::string parallel = capture(cli + " all --jobs 4" + files + " 2>/dev/null");
    o.require(serial == singles, "multi-file output equals single runs");
    o.require(parallel == serial, "fan-out output equals serial");
    if (o.passed) o.note << all().size() << " fixtures, " << serial.size() << " bytes identical across runs and --jobs 4";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"shrink traces", shrink_traces},
        {"golden decompositions", golden_decompositions},
        {"monotone decomposition property", decomposition_property},
        {"shrink oracle equivalence", shrink_oracle},
        {"minkowski weights", minkowski_suite},
        {"reduction certificates", certificates},
        {"gromov bounds", gromov_bounds},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.note << "exception: " << e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << " ("
                  << ms.count() << " ms): " << o.note.str() << "\n";
        failures += o.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
