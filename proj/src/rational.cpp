#include "rankdrop/rational.hpp"

#include "rankdrop/error.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <cctype>

namespace rankdrop {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::PointNotOnConic: return "PointNotOnConic";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::SideNotCollinear: return "SideNotCollinear";
    case ErrorKind::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorKind::HomographyRelated: return "HomographyRelated";
    case ErrorKind::NoCommonPoint: return "NoCommonPoint";
    case ErrorKind::CenterNotOnConic: return "CenterNotOnConic";
    case ErrorKind::NotDeficient: return "NotDeficient";
    case ErrorKind::NoRationalCenter: return "NoRationalCenter";
    case ErrorKind::RankNotTwo: return "RankNotTwo";
    case ErrorKind::NotOnSurface: return "NotOnSurface";
    }
    return "UnknownError";
}

Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    // Denominators must be positive in the text form; signs live on the
    // numerator.
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    const Int d(den);
    if (d == 0)
        throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
    return Rat(Int(num), d);
}

std::string rat_str(const Rat& q) {
    const Int d = denominator(q);
    if (d == 1) return numerator(q).str();
    return numerator(q).str() + "/" + d.str();
}

Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

std::vector<Rat> canonical_integer_vector(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    Int g = 0;
    std::vector<Int> scaled;
    scaled.reserve(v.size());
    for (const auto& q : v) {
        Int e = numerator(q) * (lcm_den / denominator(q));
        g = int_gcd(g, e);
        scaled.push_back(std::move(e));
    }
    if (g == 0) return v; // zero vector
    for (const auto& e : scaled) {
        if (e != 0) {
            if (e < 0) g = -g;
            break;
        }
    }
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& e : scaled) out.emplace_back(e / g);
    return out;
}

} // namespace rankdrop
