#include "qboundary/state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qboundary {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double finite_number(const Json& v, const char* what) {
    if (!v.is_number()) parse_fail(std::string(what) + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) parse_fail(std::string(what) + " is not finite");
    return x;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <class F>
auto rethrow_as_invariant(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::DimMismatch) throw;
        throw Error(ErrorCode::InvariantViolation, e.detail());
    }
}

}  // namespace

StateFile parse_state_file(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_fail(e.what());
    }
    if (!doc.is_object()) parse_fail("state file must be a JSON object");
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) parse_fail("missing \"matrix\" array");
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) parse_fail("missing \"dims\" array");

    StateFile out;
    for (const auto& d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() <= 0) parse_fail("dims must be positive integers");
        out.dims.push_back(d.get<std::size_t>());
    }
    const Json& rows = doc["matrix"];
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n == 0) parse_fail("matrix is empty");
    out.matrix.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const Json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) parse_fail("matrix must be square");
        for (Eigen::Index c = 0; c < n; ++c) {
            const Json& entry = row[static_cast<std::size_t>(c)];
            if (entry.is_number()) {
                out.matrix(r, c) = Complex(finite_number(entry, "entry"), 0.0);
            } else if (entry.is_array() && entry.size() == 2) {
                out.matrix(r, c) = Complex(finite_number(entry[0], "real part"), finite_number(entry[1], "imaginary part"));
            } else {
                parse_fail("entries must be [re, im] pairs");
            }
        }
    }
    if (total_dim(out.dims) != static_cast<std::size_t>(n)) parse_fail("product of dims does not match matrix size");
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) parse_fail("metadata must be an object");
        out.metadata = doc["metadata"];
    }
    return out;
}

StateFile read_state_file(const std::string& path) { return parse_state_file(slurp(path)); }

std::string format_state_file(const StateFile& file) {
    Json doc = Json::object();
    doc["dims"] = file.dims;
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < file.matrix.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < file.matrix.cols(); ++c)
            row.push_back(Json::array({file.matrix(r, c).real(), file.matrix(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    if (!file.metadata.empty()) doc["metadata"] = file.metadata;
    return dump_json(doc, 1) + "\n";
}

void write_state_file(const std::string& path, const StateFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << format_state_file(file);
}

DensityMatrix state_from_json(const std::string& text, double tol) {
    const StateFile file = parse_state_file(text);
    return rethrow_as_invariant([&] { return DensityMatrix(HermitianOperator(file.matrix, file.dims), tol); });
}

DensityMatrix load_state(const std::string& path, double tol) { return state_from_json(slurp(path), tol); }

HermitianOperator load_operator(const std::string& path, double tol) {
    const StateFile file = read_state_file(path);
    return rethrow_as_invariant([&] { return HermitianOperator(file.matrix, file.dims, tol); });
}

ComplexMatrix load_basis(const std::string& path, double tol) {
    const StateFile file = read_state_file(path);
    if (!is_unitary(file.matrix, tol)) throw Error(ErrorCode::NotOrthonormal, "basis columns are not orthonormal");
    return file.matrix;
}

std::string state_to_json(const HermitianOperator& op, const Json& metadata) {
    return format_state_file(StateFile{op.dims(), op.matrix(), metadata});
}

void save_state(const std::string& path, const HermitianOperator& op, const Json& metadata) {
    write_state_file(path, StateFile{op.dims(), op.matrix(), metadata});
}

void save_state(const std::string& path, const DensityMatrix& rho, const Json& metadata) {
    save_state(path, rho.op(), metadata);
}

}  // namespace qboundary
