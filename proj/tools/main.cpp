// qboundary command-line driver.
//
// Exit status: 0 when every comparison passes, 1 when at least one fails,
// 2 for usage, parse and library errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qboundary/errors.hpp"
#include "qboundary/experiments.hpp"
#include "qboundary/report.hpp"
#include "qboundary/state_file.hpp"

namespace {

using namespace qboundary;

enum class Format { Text, Json, Csv };

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void print_text(const Report& r, std::ostream& os) {
    os << r.experiment_id << ": " << (r.all_pass() ? "PASS" : "FAIL") << " (" << r.comparisons.size()
       << " comparisons, " << r.failures() << " failed, " << r.runtime_ms << " ms)\n";
    for (const auto& c : r.comparisons) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": computed " << dump_json(c.computed, -1)
           << ", expected " << dump_json(c.expected, -1) << ", tol " << dump_json(c.tolerance, -1) << "  ("
           << c.provenance << ")\n";
    }
    if (!r.values.empty()) os << "  values: " << dump_json(r.values, -1) << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

int emit(const Report& r, Format format) {
    switch (format) {
        case Format::Json: std::cout << dump_json(to_json(r), 2) << "\n"; break;
        case Format::Csv: std::cout << to_csv(r); break;
        case Format::Text: print_text(r, std::cout); break;
    }
    return r.all_pass() ? 0 : kExitFail;
}

int list_catalogue(Format format) {
    if (format == Format::Json) {
        Json out = Json::array();
        for (const auto& e : catalogue()) {
            Json j = Json::object();
            j["id"] = e.id;
            j["summary"] = e.summary;
            Json defaults = Json::object();
            for (const auto& [k, v] : e.defaults) defaults[k] = v;
            j["defaults"] = defaults;
            j["budget_ms"] = e.budget_ms;
            out.push_back(j);
        }
        std::cout << dump_json(out, 2) << "\n";
        return 0;
    }
    if (format == Format::Csv) std::cout << "id,budget_ms,summary\n";
    for (const auto& e : catalogue()) {
        if (format == Format::Csv) {
            std::cout << e.id << "," << e.budget_ms << ",\"" << e.summary << "\"\n";
            continue;
        }
        std::cout << e.id << "  " << e.summary << "\n";
        for (const auto& [k, v] : e.defaults) std::cout << "    --param " << k << "=" << v << "\n";
    }
    return 0;
}

Params parse_params(const std::vector<std::string>& items) {
    Params out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::BadParams, "expected key=value, got \"" + item + "\"");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-separable, eps-entangled and discordant state certification"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = kPsdTol;
    std::uint64_t seed = kDefaultSeed;
    bool as_json = false;
    bool as_csv = false;
    app.add_option("--tol", tol, "decision tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized experiments");
    auto* json_flag = app.add_flag("--json", as_json, "JSON report");
    app.add_flag("--csv", as_csv, "CSV report")->excludes(json_flag);

    std::string id;
    std::vector<std::string> params;
    auto* reproduce = app.add_subcommand("reproduce", "run a catalogue experiment");
    reproduce->add_option("id", id, "experiment id (see list)")->required();
    reproduce->add_option("--param", params, "k=v parameter override")->allow_extra_args(false);

    std::string in_path;
    bool raw = false;
    auto* certify = app.add_subcommand("certify", "certify a state file");
    certify->add_option("--in", in_path, "state file")->required();
    certify->add_flag("--raw", raw, "accept any Hermitian operator");

    std::string rho0_path;
    std::string rho1_path;
    auto* boundary = app.add_subcommand("boundary", "boundary of the line through two states");
    boundary->add_option("--rho0", rho0_path, "state file for rho0")->required();
    boundary->add_option("--rho1", rho1_path, "state file for rho1")->required();

    std::string discord_in;
    std::string basis_path;
    auto* discord = app.add_subcommand("discord", "classicality with respect to A");
    discord->add_option("--in", discord_in, "state file")->required();
    discord->add_option("--basis", basis_path, "file whose matrix columns are a basis of A");

    auto* list = app.add_subcommand("list", "list catalogue experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    const Format format = as_json ? Format::Json : as_csv ? Format::Csv : Format::Text;
    const RunOptions options{tol, seed};
    try {
        if (*list) return list_catalogue(format);
        if (*reproduce) return emit(run_experiment(id, parse_params(params), options), format);
        if (*certify) {
            if (raw) return emit(certify_operator(load_operator(in_path), options), format);
            return emit(certify_state(load_state(in_path, tol), options), format);
        }
        if (*boundary) return emit(boundary_report(load_state(rho0_path, tol), load_state(rho1_path, tol), options), format);
        if (*discord) {
            std::optional<ComplexMatrix> basis;
            if (!basis_path.empty()) basis = load_basis(basis_path);
            return emit(discord_report(load_state(discord_in, tol), basis, options), format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
