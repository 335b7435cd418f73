#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qboundary {

using Json = nlohmann::ordered_json;

/// One scalar check. pass == (|computed - expected| <= tolerance). Boolean
/// checks are encoded as computed in {0, 1}, expected 1, tolerance 0.
struct Comparison {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string provenance;
    bool pass = false;
};

struct Report {
    std::string experiment_id;
    Json params = Json::object();
    std::vector<Comparison> comparisons;
    Json values = Json::object();
    std::vector<std::string> notes;
    std::int64_t runtime_ms = 0;

    const Comparison& compare(std::string name, double computed, double expected, double tolerance,
                              std::string provenance);
    const Comparison& check(std::string name, bool condition, std::string provenance);
    void note(std::string text) { notes.push_back(std::move(text)); }

    bool all_pass() const;
    std::size_t failures() const;
};

/// Fixed key order: experiment_id, params, comparisons, values, notes,
/// pass, runtime_ms. Each comparison: name, computed, expected, tolerance,
/// provenance, pass.
Json to_json(const Report& report);

/// Serializes with every double printed as %.17g; non-finite doubles become
/// null. indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = 2);

/// Header plus one row per comparison.
std::string to_csv(const Report& report);

}  // namespace qboundary
