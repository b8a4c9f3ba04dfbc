#pragma once

// Text inputs of the command line tool: exact numbers, lattice bases, grids
// and arc-pair documents.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "intlen/cylinder.hpp"
#include "intlen/errors.hpp"
#include "intlen/flat_torus.hpp"
#include "intlen/real.hpp"

namespace intlen::cli {

using torus::Rational;

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Exact value of a decimal ("-1.25e-3") or rational ("3/4") literal.
inline Rational parse_exact(std::string_view text) {
    using boost::multiprecision::cpp_int;
    static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
    static const std::regex ratio(R"(([+-]?\d+)\s*/\s*([+-]?\d+))");
    const std::string s = trim(text);
    std::smatch m;
    if (std::regex_match(s, m, ratio)) {
        auto integer = [](std::string t) {
            const bool neg = !t.empty() && t[0] == '-';
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.erase(0, 1);
            t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
            const cpp_int v(t);
            return neg ? cpp_int(-v) : v;
        };
        const cpp_int den = integer(m[2].str());
        if (den == 0) {
            throw InputError("zero denominator in '" + s + "'");
        }
        return Rational(integer(m[1].str()), den);
    }
    if (!std::regex_match(s, m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
        throw InputError("not a number: '" + s + "'");
    }
    std::string digits = m[2].str() + m[3].str();
    // a leading 0 would make cpp_int read the digits as octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
        const std::string e = m[4].str();
        long ev = 0;
        const char* first = e.data() + (e[0] == '+' ? 1 : 0);
        const auto res = std::from_chars(first, e.data() + e.size(), ev);
        if (res.ec != std::errc() || ev > 4000 || ev < -4000) {
            throw InputError("exponent out of range in '" + s + "'");
        }
        exponent += ev;
    }
    Rational value{cpp_int(digits)};
    const Rational ten_pow{boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)))};
    if (exponent >= 0) {
        value *= ten_pow;
    } else {
        value /= ten_pow;
    }
    return m[1].str() == "-" ? Rational(-value) : value;
}

template <ScalarReal Real>
Real parse_real(std::string_view text) {
    return torus::Lattice<Real>::from_rational(parse_exact(text));
}

/// "e1x,e1y,e2x,e2y" with decimal or rational entries.
inline torus::ExactBasis parse_lattice(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw InputError("lattice needs four comma-separated numbers, got '" + std::string(text) + "'");
    }
    torus::ExactBasis b{parse_exact(parts[0]), parse_exact(parts[1]), parse_exact(parts[2]), parse_exact(parts[3])};
    if (b.det() == 0) {
        throw InputError("degenerate lattice basis '" + std::string(text) + "'");
    }
    return b;
}

/// "lo:hi:steps": steps points from lo to hi inclusive, evenly spaced, or
/// with constant ratio when `geometric` is set.
template <ScalarReal Real>
std::vector<Real> parse_grid(std::string_view text, bool geometric) {
    using std::exp;
    using std::log;
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw InputError("grid must have the form lo:hi:steps, got '" + std::string(text) + "'");
    }
    const Real lo = parse_real<Real>(parts[0]);
    const Real hi = parse_real<Real>(parts[1]);
    std::int64_t steps = 0;
    const auto res = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
    if (res.ec != std::errc() || res.ptr != parts[2].data() + parts[2].size() || steps < 1) {
        throw InputError("grid step count must be a positive integer, got '" + parts[2] + "'");
    }
    if (steps == 1 && lo != hi) {
        throw InputError("a one-point grid needs lo == hi");
    }
    if (geometric && !(lo > 0 && hi > 0)) {
        throw InputError("geometric grid needs positive end points");
    }
    std::vector<Real> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (std::int64_t i = 0; i < steps; ++i) {
        if (i == steps - 1) {
            grid.push_back(hi);
            break;
        }
        const Real f = Real(i) / Real(steps - 1);
        grid.push_back(geometric ? exp(log(lo) + f * (log(hi) - log(lo))) : lo + f * (hi - lo));
    }
    return grid;
}

/// A sequence of arc pairs read from a JSON document:
///   {"core_length": 0.2, "mode": "shrunk",
///    "pairs": [{"first": {"entry_t": 0.03, "winding": 0, "crossing_sign": 1},
///               "second": {...}}, ...]}
/// Numbers may also be given as strings, which are parsed exactly.
template <ScalarReal Real = double>
struct ArcPairDocument {
    std::string core_length;
    std::string mode = "shrunk";
    std::vector<std::pair<cylinder::ArcSpec<Real>, cylinder::ArcSpec<Real>>> pairs;
};

namespace detail {

inline std::string number_text(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number()) {
        // shortest round-trip form, as written in the document
        return v.dump();
    }
    throw InputError(std::string("field '") + key + "' must be a number");
}

template <ScalarReal Real>
cylinder::ArcSpec<Real> parse_arc(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InputError("arc must be a JSON object");
    }
    cylinder::ArcSpec<Real> arc;
    arc.entry_t = parse_real<Real>(number_text(j, "entry_t"));
    arc.winding = parse_real<Real>(number_text(j, "winding"));
    arc.crossing_sign = j.value("crossing_sign", 1);
    if (arc.crossing_sign != 1 && arc.crossing_sign != -1) {
        throw InputError("crossing_sign must be +1 or -1");
    }
    return arc;
}

}  // namespace detail

template <ScalarReal Real>
ArcPairDocument<Real> parse_arc_pairs(const nlohmann::json& doc) {
    ArcPairDocument<Real> out;
    try {
        if (!doc.is_object()) {
            throw InputError("arc-pair document must be a JSON object");
        }
        if (doc.contains("core_length")) out.core_length = detail::number_text(doc, "core_length");
        out.mode = doc.value("mode", std::string("shrunk"));
        if (!doc.contains("pairs") || !doc.at("pairs").is_array()) {
            throw InputError("arc-pair document needs a 'pairs' array");
        }
        for (const auto& p : doc.at("pairs")) {
            out.pairs.emplace_back(detail::parse_arc<Real>(p.at("first")), detail::parse_arc<Real>(p.at("second")));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed arc-pair document: ") + e.what());
    }
    return out;
}

template <ScalarReal Real>
ArcPairDocument<Real> load_arc_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
    return parse_arc_pairs<Real>(doc);
}

}  // namespace intlen::cli
