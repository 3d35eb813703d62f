#include "toricsmith/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace toricsmith::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }
[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

Integer parse_integer_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) parse_fail("normal entry is not an integer: " + j.get<std::string>());
        return q.get_num();
    }
    parse_fail("normal entry must be an integer");
}

json index_list(const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

}  // namespace

Rational parse_rational_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(parse_integer_json(j));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(e.what());
        }
    }
    parse_fail("offset must be an integer or a \"p/q\" string");
}

PolytopeFile parse_polytope(const json& doc) {
    if (!doc.is_object()) parse_fail("polytope document must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) parse_fail("missing integer field \"dim\"");
    if (!doc.contains("constraints") || !doc["constraints"].is_array())
        parse_fail("missing array field \"constraints\"");
    const long long dim = doc["dim"].get<long long>();
    if (dim <= 0) invalid("dim must be positive");

    PolytopeFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) parse_fail("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    std::vector<Constraint> rows;
    for (const auto& c : doc["constraints"]) {
        if (!c.is_object() || !c.contains("normal") || !c.contains("offset") || !c["normal"].is_array())
            parse_fail("constraint needs \"normal\" (array) and \"offset\"");
        IntVector v;
        for (const auto& x : c["normal"]) v.push_back(parse_integer_json(x));
        const Rational l = parse_rational_json(c["offset"]);
        if (v.size() != static_cast<std::size_t>(dim))
            invalid("constraint " + std::to_string(rows.size() + 1) + ": normal length differs from dim");
        if (is_zero(v)) invalid("constraint " + std::to_string(rows.size() + 1) + ": zero normal");
        rows.push_back(Constraint{std::move(v), l, Relation::LessEqual});
    }
    if (rows.size() < static_cast<std::size_t>(dim) + 1)
        invalid("need at least dim+1 = " + std::to_string(dim + 1) + " constraints, got " + std::to_string(rows.size()));
    out.polytope = LabeledPolytope(static_cast<std::size_t>(dim), std::move(rows));
    return out;
}

PolytopeFile parse_polytope_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_polytope(doc);
}

json rational(const Rational& q) { return toricsmith::to_string(q); }

json pi_multiple(const Rational& q) { return json{{"pi_coefficient", rational(q)}}; }

json vector_json(const RatVector& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(rational(q));
    return out;
}

namespace {

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return toricsmith::to_string(z);
}

}  // namespace

json vector_json(const IntVector& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(integer_json(z));
    return out;
}

json polytope_json(const LabeledPolytope& p) {
    json rows = json::array();
    for (const auto& c : p.constraints()) {
        json row{{"normal", vector_json(c.normal)}, {"offset", rational(c.offset)}};
        if (c.is_equality()) row["relation"] = "=";
        rows.push_back(std::move(row));
    }
    return json{{"dim", p.dim()}, {"constraints", std::move(rows)}};
}

json to_json(const PolytopeFile& file) {
    json out = polytope_json(file.polytope);
    if (!file.name.empty()) out["name"] = file.name;
    return out;
}

std::string to_string(EventKind k) {
    return k == EventKind::BecomesRedundant ? "BecomesRedundant" : "BecomesRelevant";
}

std::string to_string(LowerStatus s) {
    switch (s) {
        case LowerStatus::Certified: return "Certified";
        case LowerStatus::EwaldNotFound: return "EwaldNotFound";
        case LowerStatus::NotApplicable: return "NotApplicable";
    }
    return "";
}

std::string to_string(FanoStatus s) {
    return s == FanoStatus::ReflexiveCompanionOK ? "ReflexiveCompanionOK" : "NotVerified";
}

json properties_json(const PropertyReport& r) {
    return json{{"compact", r.compact},     {"simple", r.simple},       {"smooth", r.smooth},
                {"monotone", r.monotone},   {"reflexive", r.reflexive}, {"trivially_labeled", r.trivially_labeled},
                {"dimension", r.dimension}};
}

json events_json(const std::vector<RedundancyEvent>& events) {
    json out = json::array();
    for (const auto& e : events)
        out.push_back(json{{"time", rational(e.time)}, {"index", e.index + 1}, {"kind", to_string(e.kind)}});
    return out;
}

json trace_json(const ShrinkTrace& trace) {
    json stages = json::array(), times = json::array(), groups = json::array(), drops = json::array();
    for (const auto& s : trace.stages) {
        json dirs = json::array();
        for (const auto& d : s.directions) dirs.push_back(vector_json(d));
        json projected = json::array();
        for (const auto& pn : s.projected_normals)
            projected.push_back(json{{"index", pn.index + 1},
                                     {"vector", vector_json(pn.vector)},
                                     {"q", rational(pn.q)},
                                     {"w", vector_json(pn.w)},
                                     {"lattice", pn.lattice}});
        stages.push_back(json{{"index", s.index},
                              {"time", rational(s.time)},
                              {"D", index_list(s.frozen)},
                              {"drop", s.drop},
                              {"directions", std::move(dirs)},
                              {"base_point", vector_json(s.base_point)},
                              {"projected_normals", std::move(projected)}});
        times.push_back(rational(s.time));
        groups.push_back(index_list(s.frozen));
        drops.push_back(s.drop);
    }
    return json{{"stages", std::move(stages)},
                {"times", std::move(times)},
                {"D", std::move(groups)},
                {"drops", std::move(drops)},
                {"M", trace.m()},
                {"endpoint", vector_json(trace.endpoint)},
                {"events", events_json(trace.events)}};
}

json factor_json(const MonotoneFactor& f) {
    json rows = json::array();
    for (const auto& c : f.polytope.constraints())
        rows.push_back(json{{"normal", vector_json(c.normal)}, {"offset", rational(c.offset)}});
    return json{{"name", f.name()},
                {"kind", f.kind == FactorKind::FullDim ? "FullDim" : "Cylinder"},
                {"order", f.order},
                {"level", rational(f.level)},
                {"rank", f.rank},
                {"sources", index_list(f.sources)},
                {"constraints", std::move(rows)}};
}

json decomposition_summary(const DecompositionPlan& plan, const std::vector<MonotoneFactor>& factors) {
    json d = json::array(), groups = json::array(), levels = json::array(), fs = json::array();
    for (const auto& s : plan.trace.stages) d.push_back(index_list(s.frozen));
    for (const auto& g : plan.groups) groups.push_back(index_list(g));
    for (const auto& l : plan.group_levels) levels.push_back(rational(l));
    for (const auto& f : factors) fs.push_back(factor_json(f));
    return json{{"M", plan.m()},
                {"N", plan.n_groups()},
                {"D", std::move(d)},
                {"I", std::move(groups)},
                {"group_levels", std::move(levels)},
                {"factors", std::move(fs)}};
}

json plan_json(const DecompositionPlan& plan, const std::vector<MonotoneFactor>& factors) {
    json out = decomposition_summary(plan, factors);
    out["translation"] = vector_json(plan.translation);
    out["times"] = json::array();
    for (const auto& t : plan.trace.times()) out["times"].push_back(rational(t));
    return out;
}

json verification_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

json certificate_json(const ReductionCertificate& cert) {
    json pi = json::array();
    for (std::size_t r = 0; r < cert.pi.rows(); ++r) pi.push_back(vector_json(cert.pi.row(r)));
    json kernel = json::array(), complement = json::array(), blocks = json::array();
    for (const auto& v : cert.kernel_basis) kernel.push_back(vector_json(v));
    for (const auto& v : cert.complement) complement.push_back(vector_json(v));
    for (const auto& b : cert.blocks)
        blocks.push_back(json{{"factor", b.factor},
                              {"start", b.start + 1},
                              {"weights", vector_json(b.weights)},
                              {"level", rational(b.level)},
                              {"circle", vector_json(b.circle)}});
    return json{{"translation", vector_json(cert.translation)},
                {"d_total", cert.d_total},
                {"pi_matrix", std::move(pi)},
                {"kernel_basis", std::move(kernel)},
                {"factors", std::move(blocks)},
                {"complement_basis", std::move(complement)},
                {"offsets", vector_json(cert.offsets)},
                {"central_levels", vector_json(cert.central_levels)}};
}

json gromov_json(const GromovBounds& b) {
    json lower = pi_multiple(b.lower.coefficient);
    lower["t1"] = rational(b.lower.t1);
    lower["status"] = to_string(b.lower.status);
    if (b.lower.ewald_basis) {
        json basis = json::array();
        for (const auto& v : *b.lower.ewald_basis) basis.push_back(vector_json(v));
        lower["ewald_basis"] = std::move(basis);
    } else {
        lower["ewald_basis"] = nullptr;
    }
    json upper = b.upper.coefficient ? pi_multiple(*b.upper.coefficient) : json{{"pi_coefficient", nullptr}};
    upper["fano_status"] = to_string(b.upper.fano);
    upper["normal_fan_matches"] = b.upper.normal_fan_matches;
    upper["search_bound"] = b.upper.search_bound;
    if (b.upper.witness) {
        json a = json::array();
        for (const auto& c : b.upper.witness->coefficients) a.push_back(integer_json(c));
        upper["witness"] = json{{"J", index_list(b.upper.witness->support)}, {"a", std::move(a)}};
    } else {
        upper["witness"] = nullptr;
    }
    json out{{"lower", std::move(lower)}, {"upper", std::move(upper)}, {"equality", b.equality}};
    out["opposite_pair"] = b.opposite_pair ? index_list({b.opposite_pair->first, b.opposite_pair->second}) : json(nullptr);
    return out;
}

json error_json(const Error& e) {
    return json{{"error", json{{"kind", std::string(toricsmith::to_string(e.kind()))}, {"message", e.what()}}}};
}

std::string input_digest(const PolytopeFile& file) {
    const std::string text = to_json(file).dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return "sha256:" + hex;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

void render(const json& j, const std::string& path, std::ostringstream& out) {
    if (j.is_object()) {
        if (j.empty()) out << path << ": {}\n";
        for (auto it = j.begin(); it != j.end(); ++it) render(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
        if (flat) {
            out << path << ": [";
            for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            out << "]\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream out;
    render(j, "", out);
    return out.str();
}

}  // namespace toricsmith::io
