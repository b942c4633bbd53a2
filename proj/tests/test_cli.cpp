#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace homdef;
using io::Json;

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "homdef_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

/// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = work_dir() / ("out_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(HOMDEF_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = -1;
    if (status != -1 && WIFEXITED(status))
        code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    return {code, os.str()};
}

std::string write_fixture(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p.string();
}

/// Minimal structural validator for the subset of JSON Schema the shipped
/// schema uses: type (possibly a list), required, properties, items, enum,
/// and local $ref into #/definitions.
bool validate_at(const Json& root, const Json& schema_in, const Json& value);

bool validate_at(const Json& root, const Json& schema_in, const Json& value) {
    const Json* schema_ptr = &schema_in;
    if (schema_in.contains("$ref")) {
        std::string ref = schema_in["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        schema_ptr = &root["definitions"][ref.substr(prefix.size())];
    }
    const Json& schema = *schema_ptr;
    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object")
                return value.is_object();
            if (t == "array")
                return value.is_array();
            if (t == "string")
                return value.is_string();
            if (t == "integer")
                return value.is_number_integer();
            if (t == "null")
                return value.is_null();
            return false;
        };
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = matches(t.get<std::string>());
        else
            for (const auto& alt : t)
                ok = ok || matches(alt.get<std::string>());
        if (!ok)
            return false;
        if (value.is_null())
            return true; // nullable object: nothing further to check
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            ok = ok || alt == value;
        if (!ok)
            return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return false;
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate_at(root, sub, value[key]))
                    return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate_at(root, schema["items"], item))
                return false;
    return true;
}

bool validate(const Json& schema, const Json& value) {
    return validate_at(schema, schema, value);
}

} // namespace

TEST_CASE("exit code 0 on a passing check") {
    std::string f = write_fixture("sl2.json", io::canonical_dump(io::algebra_to_json(catalog::sl2_x())));
    RunResult r = run("check " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit code 1 on a failing identity with a printed witness") {
    // Corrupt [x1, x2] by adding an x1 component: alternation survives,
    // hom-jacobi does not.
    Json j = io::algebra_to_json(catalog::sl2_x());
    j["product"][0]["out"]["0"] = "1";
    std::string f = write_fixture("sl2_corrupt.json", io::canonical_dump(j));
    RunResult r = run("check " + f);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("triple") != std::string::npos);
}

TEST_CASE("exit code 2 on malformed input") {
    Json j = io::algebra_to_json(catalog::sl2_x());
    j["alpha"][0][0] = "1/0";
    std::string f = write_fixture("bad_rational.json", io::canonical_dump(j));
    CHECK(run("check " + f).exit_code == 2);

    std::string g = write_fixture("not_json.json", "{ this is not json");
    RunResult r = run("check " + g);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line") != std::string::npos);

    CHECK(run("check " + work_dir().string() + "/absent.json").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("catalog export no-such-name --out /tmp/x.json").exit_code == 2);
}

TEST_CASE("kind override") {
    std::string f = write_fixture("sl2_k.json", io::canonical_dump(io::algebra_to_json(catalog::sl2_x())));
    CHECK(run("check " + f + " --kind hom-leibniz").exit_code == 0);

    // Reinterpreting a non-alternating associative product as hom-lie is a
    // failed skew-symmetry check, not a usage error.
    BilinearMap dual(2);
    dual.c(0, 0, 0) = Rational(1);
    dual.c(0, 1, 1) = Rational(1);
    dual.c(1, 0, 1) = Rational(1);
    HomAlgebra d(AlgebraKind::HomAssociative, {}, dual, LinearMap::identity(2));
    std::string g = write_fixture("dual_k.json", io::canonical_dump(io::algebra_to_json(d)));
    RunResult r = run("check " + g + " --kind hom-lie");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("skew-symmetry") != std::string::npos);

    CHECK(run("check " + g + " --kind nonsense").exit_code == 2);
}

TEST_CASE("cohomology command") {
    std::string f = write_fixture("sl2_c.json", io::canonical_dump(io::algebra_to_json(catalog::sl2_efh())));
    RunResult r = run("cohomology " + f + " --json");
    REQUIRE(r.exit_code == 0);
    Json j = io::parse_json(r.out);
    CHECK(j["dim_H2"] == 0);
    CHECK(j["dim_derivations"] == 3);
    CHECK(j["flavor"] == "lie");

    // Failing base: exit 1.
    Json bad = io::algebra_to_json(catalog::sl2_x());
    bad["product"][0]["out"]["0"] = "1";
    std::string g = write_fixture("sl2_cbad.json", io::canonical_dump(bad));
    CHECK(run("cohomology " + g).exit_code == 1);

    // 2-dim abelian: H2 = 2, and --bases lists two cocycles, no coboundaries.
    HomAlgebra abelian(AlgebraKind::HomLie, {}, BilinearMap(2), LinearMap::identity(2));
    std::string h = write_fixture("abelian.json", io::canonical_dump(io::algebra_to_json(abelian)));
    RunResult r2 = run("cohomology " + h + " --json --bases");
    REQUIRE(r2.exit_code == 0);
    Json j2 = io::parse_json(r2.out);
    CHECK(j2["dim_H2"] == 2);
    CHECK(j2["basis_Z2"].size() == 2);
    CHECK(j2["basis_B2"].empty());

    // A flavor that contradicts the file's kind is a usage error.
    CHECK(run("cohomology " + f + " --flavor assoc").exit_code == 2);
    CHECK(run("cohomology " + f + " --flavor nonsense").exit_code == 2);
}

TEST_CASE("deform verify from catalog and from file") {
    CHECK(run("deform verify --catalog jackson-sl2 --orders 6").exit_code == 0);

    // The cocycle characterization is reported as a diagnostic and never
    // gates the exit code: jackson verifies at every order even though its
    // first-order pair fails the twist hypothesis.
    RunResult diag = run("deform verify --catalog jackson-sl2 --orders 4 --json");
    REQUIRE(diag.exit_code == 0);
    Json dj = io::parse_json(diag.out);
    CHECK(dj["summary"]["status"] == "pass");
    bool saw_failed_diagnostic = false;
    for (const auto& d : dj["diagnostics"])
        if (d["status"] == "fail")
            saw_failed_diagnostic = true;
    CHECK(saw_failed_diagnostic);

    fs::path exported = work_dir() / "jackson.json";
    CHECK(run("catalog export jackson-sl2 --orders 5 --out " + exported.string()).exit_code == 0);
    CHECK(run("deform verify " + exported.string()).exit_code == 0);

    // Corrupt order 1 and expect a witnessed failure.
    Json j = io::parse_json(io::read_file(exported.string()));
    j["products"][1][0]["out"]["1"] = "7";
    std::string f = write_fixture("jackson_bad.json", io::canonical_dump(j));
    RunResult r = run("deform verify " + f);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("order 1") != std::string::npos);

    // N=0 file trivially passes order 0.
    fs::path base_only = work_dir() / "jackson0.json";
    CHECK(run("catalog export jackson-sl2 --orders 0 --out " + base_only.string()).exit_code == 0);
    CHECK(run("deform verify " + base_only.string()).exit_code == 0);

    // Asking a file for more orders than it carries is a usage error.
    CHECK(run("deform verify " + base_only.string() + " --orders 3").exit_code == 2);
}

TEST_CASE("graded command") {
    CHECK(run("graded qwitt --q 2 --window -4..4").exit_code == 0);
    CHECK(run("graded qwitt --q -2 --window -3..3").exit_code == 0);
    CHECK(run("graded witt-deformation --orders 4 --window 0..6").exit_code == 0);
    CHECK(run("graded virq --q 2 --window -3..3").exit_code == 0);
    CHECK(run("graded virq --q -1 --window 0..2").exit_code == 2); // pole 1 + q^1 = 0
    CHECK(run("graded witt-deformation --window -2..2").exit_code == 2);
    CHECK(run("graded nonsense --window 0..1").exit_code == 2);
    CHECK(run("graded qwitt --window 1..0").exit_code == 2);
}

TEST_CASE("catalog list and show") {
    RunResult r = run("catalog list");
    CHECK(r.exit_code == 0);
    for (const char* name : {"jackson-sl2", "sl2-twist", "sl2-nonlie", "qwitt"})
        CHECK(r.out.find(name) != std::string::npos);

    RunResult s = run("catalog show sl2-twist --params a=1,b=2,c=3,d=4,e=5,f=6");
    REQUIRE(s.exit_code == 0);
    Json j = io::parse_json(s.out);
    CHECK(j["alpha"][0] == Json({"1", "4", "3"}));
    CHECK(j["alpha"][1] == Json({"6", "2", "6"}));
    CHECK(j["alpha"][2] == Json({"8", "5", "2"}));
}

TEST_CASE("export round-trips are byte-identical") {
    fs::path a = work_dir() / "round_a.json";
    fs::path b = work_dir() / "round_b.json";
    REQUIRE(run("catalog export jackson-sl2 --orders 4 --out " + a.string()).exit_code == 0);
    REQUIRE(run("catalog export jackson-sl2 --orders 4 --out " + b.string()).exit_code == 0);
    std::string bytes_a = io::read_file(a.string());
    CHECK(bytes_a == io::read_file(b.string()));

    // show prints exactly the exported bytes.
    RunResult shown = run("catalog show jackson-sl2 --orders 4");
    CHECK(shown.out == bytes_a);

    // parse + re-export through the library is also identical.
    DeformationSeries d = io::deformation_from_json(io::parse_json(bytes_a));
    CHECK(io::canonical_dump(io::deformation_to_json(d)) == bytes_a);
}

TEST_CASE("json reports validate against the shipped schema") {
    Json schema = io::parse_json(io::read_file(std::string(PROJECT_SOURCE_DIR) +
                                               "/docs/report.schema.json"));
    std::string f = write_fixture("sl2_schema.json",
                                  io::canonical_dump(io::algebra_to_json(catalog::sl2_x())));
    RunResult pass_run = run("check " + f + " --json");
    REQUIRE(pass_run.exit_code == 0);
    CHECK(validate(schema, io::parse_json(pass_run.out)));

    Json bad = io::algebra_to_json(catalog::sl2_x());
    bad["product"][0]["out"]["0"] = "1";
    std::string g = write_fixture("sl2_schema_bad.json", io::canonical_dump(bad));
    RunResult fail_run = run("check " + g + " --json");
    REQUIRE(fail_run.exit_code == 1);
    Json report = io::parse_json(fail_run.out);
    CHECK(validate(schema, report));
    CHECK(report["summary"]["status"] == "fail");

    RunResult dv = run("deform verify --catalog jackson-sl2 --orders 3 --json");
    REQUIRE(dv.exit_code == 0);
    CHECK(validate(schema, io::parse_json(dv.out)));

    RunResult gr = run("graded qwitt --q 2 --window -2..2 --json");
    REQUIRE(gr.exit_code == 0);
    CHECK(validate(schema, io::parse_json(gr.out)));
}

TEST_CASE("probe subcommand") {
    RunResult r = run("probe --samples 25 --seed 7 --json");
    REQUIRE(r.exit_code == 0);
    Json j = io::parse_json(r.out);
    CHECK(j["samples"] == 25);
    CHECK(j["counterexamples"] == 0);

    // Determinism across invocations.
    CHECK(run("probe --samples 25 --seed 7 --json").out == r.out);
}
