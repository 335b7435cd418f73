#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qboundary/linalg.hpp"
#include "qboundary/report.hpp"

namespace qboundary {

/// Raw key=value strings from the command line. Values may be numbers,
/// fractions such as 1/3, or comma-separated lists of either.
using Params = std::map<std::string, std::string>;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunOptions {
    double tol = kPsdTol;  // decision tolerance for PSD, witness and classicality tests
    std::uint64_t seed = kDefaultSeed;
};

struct ExperimentInfo {
    std::string id;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> defaults;
    std::int64_t budget_ms = 0;
};

const std::vector<ExperimentInfo>& catalogue();

/// Throws UnknownExperiment or BadParams. The report always carries a
/// runtime-within-budget comparison.
Report run_experiment(const std::string& id, const Params& params = {}, const RunOptions& options = {});

/// Peres check, void degree, classicality and ball position of a state.
Report certify_state(const DensityMatrix& rho, const RunOptions& options = {});

/// Raw mode: Hermitian operators that need not be states. Reports PSD status
/// and the zero-diagonal witness; states additionally get certify_state.
Report certify_operator(const HermitianOperator& op, const RunOptions& options = {});

/// Boundary of the line through rho0 and rho1 on the t < 0 side.
Report boundary_report(const DensityMatrix& rho0, const DensityMatrix& rho1, const RunOptions& options = {});

/// Classicality with respect to A, optionally certified by a supplied basis.
Report discord_report(const DensityMatrix& rho, const std::optional<ComplexMatrix>& basis,
                      const RunOptions& options = {});

}  // namespace qboundary
