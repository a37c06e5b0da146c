#pragma once

// JSON and CSV surfaces: field and quadrature configs, circle paths,
// polyline CSV files, Stokes reports, fringe tables and charge lists.

#include <abflux/error.hpp>
#include <abflux/fields.hpp>
#include <abflux/geometry.hpp>
#include <abflux/phase.hpp>
#include <abflux/quadrature.hpp>
#include <abflux/quantize.hpp>
#include <abflux/stokes.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace abflux::io {

using nlohmann::json;

inline constexpr int significant_digits = 12;

/// Value rounded to 12 significant digits, so JSON dumps stay short and stable.
inline double rounded(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return std::strtod(buf, nullptr);
}

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

template <class T>
T required(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::ConfigError, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, std::string("bad value for '") + key + "': " + e.what());
    }
}

inline json to_json(const SolenoidField& f) { return {{"B", rounded(f.B())}, {"R", rounded(f.R())}, {"gamma", rounded(f.gamma())}}; }

inline SolenoidField field_from_json(const json& j) {
    return {required<double>(j, "B"), required<double>(j, "R"), required<double>(j, "gamma")};
}

inline json to_json(const QuadratureSpec& s) {
    return {{"rel_tol", s.rel_tol}, {"abs_tol", s.abs_tol}, {"max_subdivisions", s.max_subdivisions}};
}

/// Missing keys keep their defaults.
inline QuadratureSpec quadrature_from_json(const json& j) {
    QuadratureSpec s;
    if (j.contains("rel_tol")) s.rel_tol = required<double>(j, "rel_tol");
    if (j.contains("abs_tol")) s.abs_tol = required<double>(j, "abs_tol");
    if (j.contains("max_subdivisions")) s.max_subdivisions = required<std::uint64_t>(j, "max_subdivisions");
    s.validate();
    return s;
}

/// {"center":[x,y,z],"radius":r,"turns":n}; center and turns are optional.
inline ClosedPath circle_from_json(const json& j) {
    Point c;
    if (j.contains("center")) {
        const auto v = required<std::vector<double>>(j, "center");
        if (v.size() != 3) throw Error(ErrorCode::ConfigError, "circle center needs 3 components");
        c = Point(v[0], v[1], v[2]);
    }
    const int turns = j.contains("turns") ? required<int>(j, "turns") : 1;
    return ClosedPath::circle(c, required<double>(j, "radius"), turns);
}

inline json to_json(const ClosedPath& path) {
    if (path.is_circle()) {
        const Circle& c = path.as_circle();
        return {{"center", {c.center.x(), c.center.y(), c.center.z()}}, {"radius", c.radius}, {"turns", c.turns}};
    }
    json v = json::array();
    for (const auto& p : path.as_polyline().vertices) v.push_back({p.x(), p.y(), p.z()});
    return {{"vertices", v}};
}

/// Rows "x,y,z" (z optional). Blank lines, '#' comments and a leading
/// header row of non-numeric text are skipped.
inline ClosedPath polyline_from_csv(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::vector<double> cols;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                cols.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
        }
        if (!numeric) {
            if (pts.empty() && lineno == 1) continue;
            throw Error(ErrorCode::ParseError, "bad polyline row " + std::to_string(lineno) + ": '" + line + "'");
        }
        if (cols.size() < 2 || cols.size() > 3)
            throw Error(ErrorCode::ParseError, "polyline row " + std::to_string(lineno) + " needs 2 or 3 columns");
        pts.emplace_back(cols[0], cols[1], cols.size() == 3 ? cols[2] : 0.0);
    }
    return ClosedPath::polyline(std::move(pts));
}

inline ClosedPath polyline_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    return polyline_from_csv(in);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

inline json to_json(const StokesReport& r) {
    return {{"phi_1", rounded(r.phi_1)},           {"phi_2", rounded(r.phi_2)},
            {"phi_total", rounded(r.phi_total)},   {"circ_outer", rounded(r.circ_outer)},
            {"circ_inner", rounded(r.circ_inner)}, {"discrepancy", rounded(r.discrepancy)}};
}

/// Report plus the configuration that produced it.
inline json stokes_document(const SolenoidField& f, double L, const StokesReport& r) {
    json j = to_json(r);
    j["field"] = to_json(f);
    j["L"] = rounded(L);
    return j;
}

inline StokesReport stokes_from_json(const json& j) {
    StokesReport r;
    r.phi_1 = required<double>(j, "phi_1");
    r.phi_2 = required<double>(j, "phi_2");
    r.phi_total = required<double>(j, "phi_total");
    r.circ_outer = required<double>(j, "circ_outer");
    r.circ_inner = required<double>(j, "circ_inner");
    r.discrepancy = required<double>(j, "discrepancy");
    return r;
}

inline std::string fringes_csv(const std::vector<FringeSample>& rows) {
    std::string out = "x,intensity\n";
    for (const auto& r : rows) out += format_number(r.x) + "," + format_number(r.intensity) + "\n";
    return out;
}

inline json charges_json(const std::vector<RationalCharge>& qs) {
    json a = json::array();
    for (const auto& q : qs) a.push_back(q.str());
    return a;
}

inline std::vector<RationalCharge> parse_charges(const std::vector<std::string>& items) {
    std::vector<RationalCharge> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(Rational::parse(s));
    return out;
}

}  // namespace abflux::io
