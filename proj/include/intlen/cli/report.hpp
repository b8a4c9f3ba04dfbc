#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "intlen/errors.hpp"
#include "intlen/real.hpp"

namespace intlen::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

enum class Command { Torus, Cylinder, Bounds, Verify };
enum class OutputFormat { Json, Csv };

inline const char* command_name(Command c) {
    switch (c) {
        case Command::Torus: return "torus";
        case Command::Cylinder: return "cylinder";
        case Command::Bounds: return "bounds";
        case Command::Verify: return "verify";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::Verify;
    std::uint64_t seed = 1;
    Precision precision = Precision::Double;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    /// wall-clock timing makes reports differ between runs, so it is opt-in
    bool timing = false;
};

/// Report values: doubles as JSON numbers, extended values as decimal strings
/// with 40 significant digits so that nothing is lost in transit.
template <ScalarReal Real>
Json value(const Real& x) {
    if constexpr (std::floating_point<Real>) {
        if (!std::isfinite(x)) return nullptr;
        return static_cast<double>(x);
    } else {
        return to_string(x, 40);
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

template <ScalarReal Real>
std::string cell(const Real& x) {
    return to_string(x, std::floating_point<Real> ? 17 : 40);
}

inline std::string cell(std::int64_t x) { return std::to_string(x); }
inline std::string cell(bool x) { return x ? "true" : "false"; }

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> violations;
    std::optional<double> timing_ms;
    /// filled by commands that produce a sweep; used for CSV output
    std::optional<Table> table;

    bool ok() const { return violations.empty(); }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["violations"] = violations;
        j["timing_ms"] = timing_ms ? Json(*timing_ms) : Json(nullptr);
        j["version"] = kVersion;
        return j;
    }

    std::string to_csv() const {
        if (!table) {
            throw InputError("csv output is only available for tabular commands (cylinder, bounds)");
        }
        std::ostringstream out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << ',';
                out << cells[i];
            }
            out << '\n';
        };
        line(table->header);
        for (const auto& r : table->rows) line(r);
        return out.str();
    }

    std::string render(OutputFormat format) const {
        return format == OutputFormat::Csv ? to_csv() : to_json().dump(2) + "\n";
    }
};

/// Writes the report to the configured path, or stdout.
inline void emit(const Report& report, const RunConfig& config) {
    const std::string text = report.render(config.format);
    if (config.output_path) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) {
            throw InputError("cannot write '" + *config.output_path + "'");
        }
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace intlen::cli
