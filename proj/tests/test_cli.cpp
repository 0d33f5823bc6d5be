#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ADL_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(ADL_SCHEMA_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

// minimal JSON-schema checker: type / required / properties / items / enum,
// which is all the shipped schemas use
bool validate(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "number" && value.is_number()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "boolean" && value.is_boolean());
        if (!ok) {
            why = "expected type " + t + " got " + value.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"])
            if (e == value) ok = true;
        if (!ok) {
            why = "value not in enum: " + value.dump();
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& k : schema["required"])
            if (!value.contains(k.get<std::string>())) {
                why = "missing required key " + k.get<std::string>();
                return false;
            }
    if (schema.contains("properties") && value.is_object())
        for (auto& [k, sub] : schema["properties"].items())
            if (value.contains(k) && !validate(sub, value[k], why)) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate(schema["items"], item, why)) return false;
    return true;
}

}  // namespace

TEST_CASE("mkw prints the exact integer") {
    auto r = run_cli("sums mkw --x 100 --y 11 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("mkw json output validates and keeps integers as strings") {
    auto r = run_cli("--json sums mkw --x 100 --y 11 --k 2");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["value"] == "0");
    CHECK(j["x"] == "100");
    std::string why;
    CHECK_MESSAGE(validate(load_schema("mkw.schema.json"), j, why), why);
}

TEST_CASE("constants dump contains the pinned Gamma values") {
    auto r = run_cli("constants dump --max-m 2 --max-n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1,0,1.000000000000e+00") != std::string::npos);
    CHECK(r.out.find("1,1,-2.000000000000e+00") != std::string::npos);
}

TEST_CASE("orders cmp reports the subradical verdict") {
    auto r = run_cli("orders cmp --f \"exp(logx^0.5)\" --g \"x\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("f <_forall g: true") != std::string::npos);
}

TEST_CASE("residue json validates") {
    auto r = run_cli("--json sums residue --m 4 --l 1 --k 1 --x-grid 100,1000");
    CHECK(r.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(validate(load_schema("residue.schema.json"), json::parse(r.out), why), why);
}

TEST_CASE("profile json validates") {
    auto r = run_cli("primesums profile --y 100 --max-n 2 --max-i 1");
    CHECK(r.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(validate(load_schema("profile.schema.json"), json::parse(r.out), why), why);
}

TEST_CASE("phi json validates") {
    auto r = run_cli("asym phi --y 50 --k 2 --n 2");
    CHECK(r.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(validate(load_schema("phi.schema.json"), json::parse(r.out), why), why);
}

TEST_CASE("compare json validates") {
    auto r = run_cli("--json asym compare --k 2 --y 5 --n 1 --x-grid 1e4,1e5");
    CHECK(r.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(validate(load_schema("compare.schema.json"), json::parse(r.out), why), why);
}

TEST_CASE("hankel scan emits the decay table") {
    auto r = run_cli("hankel scan --m 1 --n 1 --cutoffs 10,20,30");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("X,value,abs_error") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("sums mkw").exit_code == 2);  // missing required --x
}

TEST_CASE("identical invocations produce byte-identical output") {
    auto a = run_cli("primesums profile --y 1000 --max-n 3 --max-i 2");
    auto b = run_cli("primesums profile --y 1000 --max-n 3 --max-i 2");
    CHECK(a.out == b.out);
}

TEST_CASE("acceptance with a tiny ceiling skips sieve criteria, keeps identities") {
    auto r = run_cli("--json acceptance run --sieve-ceiling 1000");
    auto j = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validate(load_schema("acceptance.schema.json"), j, why), why);
    std::map<int, std::string> status;
    for (auto& row : j["criteria"]) status[row["id"]] = row["status"];
    CHECK(status[1] == "PASS");  // identity criterion, clamped grid
    CHECK(status[2] == "PASS");  // identity criterion, clamped range
    CHECK(status[5] == "SKIP");
    CHECK(status[6] == "SKIP");
    CHECK(status[7] == "SKIP");
    CHECK(status[8] == "SKIP");
    CHECK(status[9] == "PASS");
}
