#pragma once

// JSON encoding of polytopes and reports. Rationals are "p/q" strings ("p"
// when integral); multiples of pi are {"pi_coefficient": "p/q"}. Constraint
// indices are 1-based in every document.

#include <string>

#include "json.hpp"
#include "toricsmith/decompose.hpp"
#include "toricsmith/gromov.hpp"
#include "toricsmith/polytope.hpp"
#include "toricsmith/reduce.hpp"
#include "toricsmith/shrink.hpp"

namespace toricsmith::io {

using json = nlohmann::json;

inline constexpr const char* kToolName = "toricsmith";
inline constexpr const char* kToolVersion = "0.1.0";

struct PolytopeFile {
    std::string name;
    LabeledPolytope polytope;
};

/// Throws Parse for malformed documents and Validation for well-formed ones
/// that break the schema rules (lengths, zero normals, fewer than dim+1 rows).
PolytopeFile parse_polytope(const json& doc);
PolytopeFile parse_polytope_text(const std::string& text);
json to_json(const PolytopeFile& file);
json polytope_json(const LabeledPolytope& p);

json rational(const Rational& q);
json pi_multiple(const Rational& q);
json vector_json(const RatVector& v);
json vector_json(const IntVector& v);
Rational parse_rational_json(const json& j);

json properties_json(const PropertyReport& r);
json trace_json(const ShrinkTrace& trace);
json events_json(const std::vector<RedundancyEvent>& events);
json plan_json(const DecompositionPlan& plan, const std::vector<MonotoneFactor>& factors);
/// The part of a decomposition compared against golden files.
json decomposition_summary(const DecompositionPlan& plan, const std::vector<MonotoneFactor>& factors);
json factor_json(const MonotoneFactor& f);
json verification_json(const VerificationReport& r);
json certificate_json(const ReductionCertificate& cert);
json gromov_json(const GromovBounds& b);
json error_json(const Error& e);

std::string to_string(EventKind k);
std::string to_string(LowerStatus s);
std::string to_string(FanoStatus s);

/// Hex SHA-256 of the canonical dump of the polytope document.
std::string input_digest(const PolytopeFile& file);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

/// Line-per-leaf rendering ("path: value") for --format text.
std::string render_text(const json& j);

}  // namespace toricsmith::io
