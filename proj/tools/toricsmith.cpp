// Command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "toricsmith/io.hpp"
#include "toricsmith/random.hpp"

namespace fs = std::filesystem;
using namespace toricsmith;
using io::json;

namespace {

enum Exit { kOk = 0, kIo = 1, kValidation = 2, kVerification = 3 };

struct Options {
    std::string format = "json";
    unsigned lu_bound = kDefaultLuBound;
    bool verify = true;
    std::string output;
    int jobs = 1;
};

struct Outcome {
    json doc;
    int code = kOk;
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::Io: return kIo;
        case ErrorKind::CertificateCheckFailed:
        case ErrorKind::InvariantViolated: return kVerification;
        default: return kValidation;
    }
}

int first_failure(int a, int b) { return a != kOk ? a : b; }

Outcome validate(const io::PolytopeFile& f) {
    const PropertyReport r = classify(f.polytope);
    const bool ok = r.compact && r.dimension == f.polytope.dim();
    json out{{"valid", ok}, {"dim", f.polytope.dim()}, {"constraints", f.polytope.size()}, {"properties", io::properties_json(r)}};
    if (!ok) out["reason"] = r.compact ? "polytope is not full-dimensional" : "polyhedron is not compact";
    return {out, ok ? kOk : kValidation};
}

Outcome shrink(const io::PolytopeFile& f) { return {io::trace_json(shrink_trace(f.polytope)), kOk}; }

Outcome centering(const io::PolytopeFile& f) {
    auto [centered, shift] = center(f.polytope);
    return {json{{"translation", io::vector_json(shift)}, {"centered", io::polytope_json(centered)}}, kOk};
}

Outcome decompose(const io::PolytopeFile& f, const Options& opt) {
    const DecompositionPlan plan = decomposition_plan(f.polytope);
    const auto factors = build_factors(plan);
    Outcome out{io::plan_json(plan, factors), kOk};
    if (opt.verify) {
        const VerificationReport rep = verify_decomposition(plan.centered, factors);
        out.doc["verification"] = io::verification_json(rep);
        if (!rep.passed()) out.code = kVerification;
    }
    return out;
}

Outcome reduce(const io::PolytopeFile& f, const Options& opt) {
    const ReductionCertificate cert = reduction_certificate(f.polytope);
    Outcome out{io::certificate_json(cert), kOk};
    if (opt.verify) {
        const VerificationReport rep = verify_certificate(f.polytope, cert);
        out.doc["verification"] = io::verification_json(rep);
        if (!rep.passed()) out.code = kVerification;
    }
    return out;
}

Outcome gromov(const io::PolytopeFile& f, const Options& opt) {
    return {io::gromov_json(width_report(f.polytope, opt.lu_bound)), kOk};
}

template <class Fn>
Outcome guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return {io::error_json(e), exit_code_for(e.kind())};
    }
}

Outcome everything(const io::PolytopeFile& f, const Options& opt) {
    Outcome out{json::object(), kOk};
    auto add = [&](const char* key, Outcome part) {
        out.doc[key] = std::move(part.doc);
        out.code = first_failure(out.code, part.code);
    };
    Outcome v = guarded([&] { return validate(f); });
    const bool valid = v.code == kOk;
    add("validate", std::move(v));
    if (!valid) return out;
    add("shrink", guarded([&] { return shrink(f); }));
    add("center", guarded([&] { return centering(f); }));
    add("decompose", guarded([&] { return decompose(f, opt); }));
    add("reduce", guarded([&] { return reduce(f, opt); }));
    add("gromov", guarded([&] { return gromov(f, opt); }));
    return out;
}

Outcome run_file(const std::string& command, const std::string& path, const Options& opt) {
    json env{{"tool", io::kToolName}, {"version", io::kToolVersion}, {"command", command}, {"source", path},
             {"input_digest", nullptr}};
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        env["error"] = io::error_json(Error(ErrorKind::Io, "cannot read " + path))["error"];
        return {env, kIo};
    }
    std::stringstream buf;
    buf << in.rdbuf();

    io::PolytopeFile file;
    try {
        file = io::parse_polytope_text(buf.str());
    } catch (const Error& e) {
        env["error"] = io::error_json(e)["error"];
        return {env, exit_code_for(e.kind())};
    }
    env["input_digest"] = io::input_digest(file);
    if (!file.name.empty()) env["name"] = file.name;

    Outcome body = guarded([&]() -> Outcome {
        if (command == "validate") return validate(file);
        if (command == "shrink") return shrink(file);
        if (command == "center") return centering(file);
        if (command == "decompose") return decompose(file, opt);
        if (command == "reduce") return reduce(file, opt);
        if (command == "gromov") return gromov(file, opt);
        return everything(file, opt);
    });
    if (body.doc.contains("error") && body.doc.size() == 1)
        env["error"] = body.doc["error"];
    else
        env["result"] = std::move(body.doc);
    return {env, body.code};
}

std::string render(const json& doc, const Options& opt) {
    return opt.format == "text" ? io::render_text(doc) : io::dump(doc);
}

int emit(const std::vector<std::string>& inputs, const std::vector<Outcome>& outs, const std::string& command,
         const Options& opt) {
    int code = kOk;
    for (const auto& o : outs) code = first_failure(code, o.code);
    if (opt.output.empty()) {
        for (const auto& o : outs) std::cout << render(o.doc, opt);
        return code;
    }
    try {
        if (outs.size() == 1) {
            std::ofstream(opt.output, std::ios::binary) << render(outs[0].doc, opt);
        } else {
            fs::create_directories(opt.output);
            for (std::size_t i = 0; i < outs.size(); ++i) {
                const std::string ext = opt.format == "text" ? ".txt" : ".json";
                const fs::path target =
                    fs::path(opt.output) / (fs::path(inputs[i]).stem().string() + "." + command + ext);
                std::ofstream(target, std::ios::binary) << render(outs[i].doc, opt);
            }
        }
    } catch (const fs::filesystem_error& e) {
        std::cerr << io::dump(io::error_json(Error(ErrorKind::Io, e.what())));
        return kIo;
    }
    return code;
}

int run_fuzz(std::uint64_t seed, std::size_t count, const Options& opt) {
    std::vector<json> results(count);
    std::vector<int> codes(count, kOk);
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
    for (long i = 0; i < static_cast<long>(count); ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        json r{{"seed", s}};
        try {
            const LabeledPolytope p = random_polytope(s);
            r["polytope"] = io::polytope_json(p);
            const DecompositionPlan plan = decomposition_plan(p);
            const auto factors = build_factors(plan);
            const VerificationReport rep = verify_decomposition(plan.centered, factors);
            r["M"] = plan.m();
            r["N"] = plan.n_groups();
            r["verification"] = io::verification_json(rep);
            if (!rep.passed()) codes[static_cast<std::size_t>(i)] = kVerification;
        } catch (const Error& e) {
            r["error"] = io::error_json(e)["error"];
            codes[static_cast<std::size_t>(i)] = exit_code_for(e.kind());
        }
        results[static_cast<std::size_t>(i)] = std::move(r);
    }
    int code = kOk;
    for (int c : codes) code = first_failure(code, c);
    json doc{{"tool", io::kToolName}, {"version", io::kToolVersion}, {"command", "fuzz"}, {"seed", seed},
             {"count", count}, {"passed", code == kOk}, {"results", results}};
    std::vector<Outcome> outs{{doc, code}};
    return emit({"fuzz"}, outs, "fuzz", opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of labeled rational polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::optional<unsigned> lu_flag;
    bool no_verify = false;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--lu-bound", lu_flag, "Coefficient-sum bound of the Lu relation scan (default 12)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-verify", no_verify, "Skip verification reports");
    app.add_option("--output", opt.output, "Output file (one input) or directory (several inputs)");
    app.add_option("--jobs", opt.jobs, "Files processed in parallel")->check(CLI::PositiveNumber);

    std::vector<std::string> inputs;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"validate", "Schema check and classification"},
        {"shrink", "Shrinking trace with redundancy events"},
        {"center", "Translate the shrink endpoint to the origin"},
        {"decompose", "Monotone decomposition and its verification"},
        {"reduce", "Reduction certificate and its verification"},
        {"gromov", "Gromov width bounds"},
        {"all", "Every report above"}};
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->add_option("files", inputs, "Polytope JSON files")->required();

    std::uint64_t seed = 1;
    std::size_t count = 10;
    auto* fuzz = app.add_subcommand("fuzz", "Check the decomposition on seeded random polytopes");
    fuzz->add_option("--seed", seed, "First seed");
    fuzz->add_option("--count", count, "Number of polytopes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << io::dump(io::error_json(Error(ErrorKind::Parse, e.what())));
        return kIo;
    }

    opt.verify = !no_verify;
    if (lu_flag) {
        opt.lu_bound = *lu_flag;
    } else if (const char* env = std::getenv("TORICSMITH_LU_BOUND")) {
        try {
            const long v = std::stol(env);
            if (v <= 0) throw std::invalid_argument("non-positive");
            opt.lu_bound = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            std::cout << io::dump(io::error_json(Error(ErrorKind::Parse, "TORICSMITH_LU_BOUND must be a positive integer")));
            return kIo;
        }
    }

    if (fuzz->parsed()) return run_fuzz(seed, count, opt);

    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<Outcome> outs(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
    for (long i = 0; i < static_cast<long>(inputs.size()); ++i)
        outs[static_cast<std::size_t>(i)] = run_file(command, inputs[static_cast<std::size_t>(i)], opt);
    return emit(inputs, outs, command, opt);
}
