#pragma once

#include <string>

#include "qboundary/linalg.hpp"
#include "qboundary/report.hpp"

namespace qboundary {

/// On-disk form: {"dims": [..], "matrix": [[[re, im], ...], ...],
/// "metadata": {...}} with doubles written to 17 significant digits.
struct StateFile {
    Dims dims;
    ComplexMatrix matrix;
    Json metadata = Json::object();
};

/// Parses the JSON layout; checks shape and finiteness only. Throws
/// ParseError.
StateFile parse_state_file(const std::string& text);
StateFile read_state_file(const std::string& path);

std::string format_state_file(const StateFile& file);
void write_state_file(const std::string& path, const StateFile& file);

/// Hermitian, unit trace and positive, else InvariantViolation.
DensityMatrix load_state(const std::string& path, double tol = kPsdTol);
/// Hermitian only (the raw mode).
HermitianOperator load_operator(const std::string& path, double tol = kHermitianTol);
/// Square matrix whose columns form an orthonormal basis; NotOrthonormal
/// otherwise.
ComplexMatrix load_basis(const std::string& path, double tol = kHermitianTol);

void save_state(const std::string& path, const HermitianOperator& op, const Json& metadata = Json::object());
void save_state(const std::string& path, const DensityMatrix& rho, const Json& metadata = Json::object());

/// In-memory variants used by the Python bindings and the tests.
DensityMatrix state_from_json(const std::string& text, double tol = kPsdTol);
std::string state_to_json(const HermitianOperator& op, const Json& metadata = Json::object());

}  // namespace qboundary
