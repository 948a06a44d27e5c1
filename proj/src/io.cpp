#include "rankdrop/io.hpp"

#include "rankdrop/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rankdrop {
namespace {

using Json = nlohmann::ordered_json;

Rat parse_coord(const Json& j, const char* what) {
    if (!j.is_string())
        throw Error(ErrorKind::ParseError,
                    std::string(what) + " coordinates must be rational strings");
    return parse_rat(j.get<std::string>());
}

std::array<Rat, 3> parse_triple(const Json& arr, const char* what) {
    return {parse_coord(arr[0], what), parse_coord(arr[1], what), parse_coord(arr[2], what)};
}

Json coords_json(const std::vector<Rat>& coords) {
    Json arr = Json::array();
    for (const auto& q : coords) arr.push_back(rat_str(q));
    return arr;
}

Json sextuple_json(const Sextuple& s) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < 6; ++i) arr.push_back(rat_str(s[i]));
    return arr;
}

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json condition_json(const Condition& cond) {
    Json j;
    j["kind"] = condition_kind_name(cond.kind);
    if (cond.side) j["side"] = side_name(*cond.side);
    if (!cond.indices.empty()) j["indices"] = cond.indices;
    if (!cond.residuals.empty()) {
        Json arr = Json::array();
        for (const auto& q : cond.residuals) arr.push_back(rat_str(q));
        j["residuals"] = std::move(arr);
    }
    if (cond.homography) j["homography"] = matrix_json(cond.homography->matrix());
    if (cond.homography_p1) j["homography_p1"] = matrix_json(cond.homography_p1->matrix());
    if (cond.inner) j["inner"] = condition_json(*cond.inner);
    return j;
}

Json conditions_json(const std::vector<Condition>& conditions) {
    Json arr = Json::array();
    for (const auto& cond : conditions) arr.push_back(condition_json(cond));
    return arr;
}

/// Conditions with the minimal inherited entries swapped for the full
/// lattice, preserving the order: inherited first, then the rest.
std::vector<Condition> with_full_lattice(const Config& c, const Report& r) {
    std::vector<Condition> out = inherited_conditions(c, false);
    for (const auto& cond : r.conditions)
        if (cond.kind != ConditionKind::Inherited) out.push_back(cond);
    return out;
}

Json report_body(const Report& r, const std::vector<Condition>& conditions,
                 long long classify_microseconds) {
    Json j;
    j["k"] = r.k;
    j["rank"] = r.rank;
    j["deficient"] = r.deficient;
    j["unexplained"] = r.unexplained;
    j["conditions"] = conditions_json(conditions);
    j["timings"] = Json{{"classify_microseconds", classify_microseconds}};
    return j;
}

ParsedConfig parse_json_config(const Json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
    if (!doc.contains("version") || !doc.at("version").is_string())
        throw Error(ErrorKind::ParseError, "missing string field 'version'");
    if (!doc.contains("points") || !doc.at("points").is_array())
        throw Error(ErrorKind::ParseError, "missing array field 'points'");
    const Json& points = doc.at("points");
    if (points.empty()) throw Error(ErrorKind::ParseError, "'points' is empty");

    std::size_t dim = 0;
    for (const Json& entry : points) {
        if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
            !entry.at("x").is_array() || !entry.at("y").is_array())
            throw Error(ErrorKind::ParseError,
                        "each point must be an object with coordinate arrays 'x' and 'y'");
        const std::size_t nx = entry.at("x").size();
        const std::size_t ny = entry.at("y").size();
        if (nx != ny || (nx != 2 && nx != 3))
            throw Error(ErrorKind::ParseError,
                        "coordinate arrays must both have length 2 or both length 3");
        if (dim == 0) dim = nx;
        if (nx != dim)
            throw Error(ErrorKind::ParseError, "coordinate lengths differ between points");
    }

    ParsedConfig out;
    out.version = doc.at("version").get<std::string>();
    const std::size_t k = points.size();
    try {
        if (dim == 3) {
            if (k < 2 || k > 6)
                throw Error(ErrorKind::ParseError,
                            "plane files carry 2..6 points, got " + std::to_string(k));
            Config c;
            for (const Json& entry : points) {
                const auto x = parse_triple(entry.at("x"), "x");
                const auto y = parse_triple(entry.at("y"), "y");
                c.push_back({PointP2(x[0], x[1], x[2]), PointP2(y[0], y[1], y[2])});
            }
            out.plane = std::move(c);
        } else {
            if (k < 2 || k > 4)
                throw Error(ErrorKind::ParseError,
                            "line files carry 2..4 points, got " + std::to_string(k));
            ConfigP1 c;
            for (const Json& entry : points) {
                c.push_back({PointP1(parse_coord(entry.at("x")[0], "x"),
                                     parse_coord(entry.at("x")[1], "x")),
                             PointP1(parse_coord(entry.at("y")[0], "y"),
                                     parse_coord(entry.at("y")[1], "y"))});
            }
            out.line = std::move(c);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        // Point constructors reject zero vectors; surface that as bad input.
        throw Error(ErrorKind::ParseError, e.what());
    }
    return out;
}

} // namespace

ParsedConfig parse_config_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return parse_json_config(doc);
}

ParsedConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string config_to_json(const Config& c) {
    Json doc;
    doc["version"] = "1";
    Json points = Json::array();
    for (const auto& pair : c) {
        Json entry;
        entry["x"] = coords_json(pair.x.coords());
        entry["y"] = coords_json(pair.y.coords());
        points.push_back(std::move(entry));
    }
    doc["points"] = std::move(points);
    return doc.dump(2);
}

std::string config_p1_to_json(const ConfigP1& c) {
    Json doc;
    doc["version"] = "1";
    Json points = Json::array();
    for (const auto& pair : c) {
        Json entry;
        entry["x"] = coords_json(pair.x.coords());
        entry["y"] = coords_json(pair.y.coords());
        points.push_back(std::move(entry));
    }
    doc["points"] = std::move(points);
    return doc.dump(2);
}

std::string report_to_json(const Config& c, const Report& r, long long classify_microseconds,
                           bool verbose_inherited) {
    Json j = report_body(r, verbose_inherited ? with_full_lattice(c, r) : r.conditions,
                         classify_microseconds);
    if (r.invariant_summary) {
        Json inv;
        inv["coble_x"] = sextuple_json(r.invariant_summary->first);
        inv["coble_y"] = sextuple_json(r.invariant_summary->second);
        std::vector<PointP2> xs;
        std::vector<PointP2> ys;
        for (const auto& pair : c) {
            xs.push_back(pair.x);
            ys.push_back(pair.y);
        }
        if (const auto jx = collinear_side_joubert(xs)) inv["joubert_x"] = sextuple_json(*jx);
        if (const auto jy = collinear_side_joubert(ys)) inv["joubert_y"] = sextuple_json(*jy);
        j["invariants"] = std::move(inv);
    }
    return j.dump(2);
}

std::string report_p1_to_json(const ConfigP1& c, const Report& r,
                              long long classify_microseconds, bool verbose_inherited) {
    std::vector<Condition> conditions = r.conditions;
    if (verbose_inherited) {
        std::vector<Condition> full = inherited_conditions_p1(c, false);
        for (const auto& cond : r.conditions)
            if (cond.kind != ConditionKind::Inherited) full.push_back(cond);
        conditions = std::move(full);
    }
    return report_body(r, conditions, classify_microseconds).dump(2);
}

} // namespace rankdrop
