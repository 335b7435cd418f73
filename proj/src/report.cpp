#include "qboundary/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qboundary {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(std::ostringstream& os, const Json& v, int indent, int depth) {
    const bool pretty = indent >= 0;
    const auto newline = [&](int level) {
        if (!pretty) return;
        os << '\n' << std::string(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) os << ',';
                first = false;
                newline(depth + 1);
                os << Json(it.key()).dump() << (pretty ? ": " : ":");
                write(os, it.value(), indent, depth + 1);
            }
            newline(depth);
            os << '}';
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                os << "[]";
                return;
            }
            // Short numeric arrays such as [re, im] pairs stay on one line.
            const bool flat = v.size() <= 2 && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number(); });
            os << '[';
            bool first = true;
            for (const auto& e : v) {
                if (!first) os << (flat && pretty ? ", " : ",");
                first = false;
                if (!flat) newline(depth + 1);
                write(os, e, indent, depth + 1);
            }
            if (!flat) newline(depth);
            os << ']';
            return;
        }
        case Json::value_t::number_float:
            os << format_double(v.get<double>());
            return;
        default:
            os << v.dump();
            return;
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

const Comparison& Report::compare(std::string name, double computed, double expected, double tolerance,
                                  std::string provenance) {
    Comparison c;
    c.name = std::move(name);
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.provenance = std::move(provenance);
    c.pass = std::abs(computed - expected) <= tolerance;
    comparisons.push_back(std::move(c));
    return comparisons.back();
}

const Comparison& Report::check(std::string name, bool condition, std::string provenance) {
    return compare(std::move(name), condition ? 1.0 : 0.0, 1.0, 0.0, std::move(provenance));
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : comparisons)
        if (!c.pass) ++n;
    return n;
}

Json to_json(const Report& report) {
    Json out = Json::object();
    out["experiment_id"] = report.experiment_id;
    out["params"] = report.params;
    Json comps = Json::array();
    for (const auto& c : report.comparisons) {
        Json j = Json::object();
        j["name"] = c.name;
        j["computed"] = c.computed;
        j["expected"] = c.expected;
        j["tolerance"] = c.tolerance;
        j["provenance"] = c.provenance;
        j["pass"] = c.pass;
        comps.push_back(std::move(j));
    }
    out["comparisons"] = std::move(comps);
    out["values"] = report.values;
    out["notes"] = report.notes;
    out["pass"] = report.all_pass();
    out["runtime_ms"] = report.runtime_ms;
    return out;
}

std::string dump_json(const Json& value, int indent) {
    std::ostringstream os;
    write(os, value, indent, 0);
    return os.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream os;
    os << "experiment_id,name,computed,expected,tolerance,provenance,pass\n";
    for (const auto& c : report.comparisons) {
        os << csv_field(report.experiment_id) << ',' << csv_field(c.name) << ',' << format_double(c.computed) << ','
           << format_double(c.expected) << ',' << format_double(c.tolerance) << ',' << csv_field(c.provenance) << ','
           << (c.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace qboundary
