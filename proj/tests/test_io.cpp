#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qboundary/report.hpp"
#include "qboundary/state_file.hpp"
#include "qboundary/states.hpp"

using namespace qboundary;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidForm;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qboundary_test_" + name)).string();
}

}  // namespace

TEST_CASE("state files round trip bit for bit", "[io]") {
    const std::string path = temp_path("example5.json");
    const DensityMatrix e5 = example5_state();
    save_state(path, e5, Json{{"name", "example5"}});
    const DensityMatrix back = load_state(path);
    CHECK(back.dims() == e5.dims());
    CHECK(back.matrix() == e5.matrix());

    // Awkward doubles survive the 17-digit encoding exactly.
    ComplexMatrix m(2, 2);
    m << Complex(1.0 / 3.0, 0), Complex(0.1, 1e-17), Complex(0.1, -1e-17), Complex(2.0 / 3.0, 0);
    const HermitianOperator op(m, {2});
    const StateFile parsed = parse_state_file(state_to_json(op, Json{{"k", 1}}));
    CHECK(parsed.matrix == op.matrix());
    CHECK(parsed.metadata["k"] == 1);
    std::remove(path.c_str());
}

TEST_CASE("state file parse errors", "[io][error]") {
    CHECK(code_of([] { parse_state_file("not json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file("[]"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file(R"({"dims":[2],"matrix":[[[1,0]]]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file(R"({"dims":[2],"matrix":[[[1,0],[0,0]],[[0,0]]]})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file(R"({"dims":[0],"matrix":[[[1,0]]]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file(R"({"dims":[1],"matrix":[[[1,0,3]]]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_state_file(R"({"dims":[1],"matrix":[[[1,0]]],"metadata":3})"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { read_state_file("/nonexistent/state.json"); }) == ErrorCode::ParseError);
    // Bare real entries are accepted.
    CHECK(parse_state_file(R"({"dims":[1],"matrix":[[1]]})").matrix(0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("loading enforces state invariants unless raw", "[io][error]") {
    const std::string text = R"({"dims":[2],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.4,0]]]})";
    CHECK(code_of([&] { state_from_json(text); }) == ErrorCode::InvariantViolation);
    const std::string path = temp_path("trace09.json");
    std::ofstream(path) << text;
    CHECK(code_of([&] { load_state(path); }) == ErrorCode::InvariantViolation);
    CHECK(load_operator(path).trace() == Catch::Approx(0.9));
    const std::string skew = R"({"dims":[2],"matrix":[[[0.5,0],[1,0]],[[0,0],[0.5,0]]]})";
    std::ofstream(path) << skew;
    CHECK(code_of([&] { load_operator(path); }) == ErrorCode::InvariantViolation);
    std::remove(path.c_str());
}

TEST_CASE("report JSON has fixed key order and 17 digits", "[io]") {
    Report r;
    r.experiment_id = "demo";
    r.params["eps"] = 0.1;
    r.compare("third", 1.0 / 3.0, 1.0 / 3.0, 1e-12, "closed form 1/3");
    r.check("flag", false, "always false");
    r.values["nan"] = std::nan("");
    r.values["pair"] = Json::array({0.5, -0.25});
    r.note("a note");
    r.runtime_ms = 7;
    CHECK_FALSE(r.all_pass());
    CHECK(r.failures() == 1);

    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"experiment_id", "params", "comparisons", "values", "notes", "pass",
                                           "runtime_ms"});
    std::vector<std::string> ckeys;
    for (auto it = j["comparisons"][0].begin(); it != j["comparisons"][0].end(); ++it) ckeys.push_back(it.key());
    CHECK(ckeys == std::vector<std::string>{"name", "computed", "expected", "tolerance", "provenance", "pass"});

    const std::string text = dump_json(j, 2);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
    CHECK(text.find("0.10000000000000001") != std::string::npos);
    CHECK(text.find("\"nan\": null") != std::string::npos);
    CHECK(text.find("[0.5, -0.25]") != std::string::npos);
    CHECK(dump_json(j, 2) == text);
    // Parses back as valid JSON.
    CHECK(Json::parse(text)["pass"] == false);

    const std::string csv = to_csv(r);
    CHECK(csv.rfind("experiment_id,name,computed,expected,tolerance,provenance,pass\n", 0) == 0);
    CHECK(csv.find("demo,flag,0,1,0,always false,false") != std::string::npos);
}

TEST_CASE("comparison pass rule", "[io]") {
    Report r;
    CHECK(r.compare("exact", 1.0, 1.0, 0.0, "").pass);
    CHECK(r.compare("inside", 1.0 + 1e-11, 1.0, 1e-10, "").pass);
    CHECK_FALSE(r.compare("outside", 1.0 + 1e-9, 1.0, 1e-10, "").pass);
    CHECK_FALSE(r.compare("nan", std::nan(""), 1.0, 1.0, "").pass);
}
