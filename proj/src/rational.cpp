#include "toricsmith/rational.hpp"

#include <algorithm>
#include <cctype>

namespace toricsmith {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSaturated: return "NotSaturated";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::Empty: return "Empty";
        case ErrorKind::BadWeights: return "BadWeights";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::TimeOutOfRange: return "TimeOutOfRange";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotReflexiveCompanion: return "NotReflexiveCompanion";
        case ErrorKind::NoRelationFound: return "NoRelationFound";
        case ErrorKind::CertificateCheckFailed: return "CertificateCheckFailed";
        case ErrorKind::InvariantViolated: return "InvariantViolated";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Validation: return "Validation";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorKind::Parse, "not a rational literal: '" + text + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s += Rational(a[i]) * b[i];
    return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return sgn(z) == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& z : v) g = gcd(g, z);
    return g;
}

Integer lcm_of_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, q.get_den());
    return l;
}

IntVector primitive_integer_direction(const RatVector& v) {
    const Integer l = lcm_of_denominators(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(Integer(q.get_num() * (l / q.get_den())));
    const Integer g = gcd_of(out);
    if (g > 1)
        for (auto& z : out) z /= g;
    return out;
}

bool lex_less(const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace toricsmith
