// Contract tests for the command line tool: exit codes, output shapes,
// schema conformance, and byte determinism. The binary location comes in
// through CLI_PATH, the shipped schemas through SCHEMA_DIR.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
    std::string cmd = std::string(CLI_PATH) + " " + args;
    if (!keep_stderr) cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

// Minimal validator for the subset of JSON Schema the shipped files use:
// type, enum, properties, required, items, additionalProperties: false,
// and same-document $ref.
bool validate(const json& schema, const json& root, const json& value, std::string& why);

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    return false;
}

bool validate(const json& schema, const json& root, const json& value, std::string& why) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        REQUIRE(ref.rfind("#/", 0) == 0);
        const json& target = root.at(json::json_pointer(ref.substr(1)));
        return validate(target, root, value, why);
    }
    if (schema.contains("enum")) {
        for (const json& candidate : schema["enum"])
            if (candidate == value) return true;
        why = "value " + value.dump() + " not in enum";
        return false;
    }
    if (schema.contains("type")) {
        std::string t = schema["type"].get<std::string>();
        if (!type_matches(t, value)) {
            why = "expected " + t + ", got " + value.dump();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const json& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.dump();
                    return false;
                }
            }
        }
        const json props = schema.value("properties", json::object());
        if (schema.value("additionalProperties", json(true)) == json(false)) {
            for (const auto& [key, sub] : value.items()) {
                (void)sub;
                if (!props.contains(key)) {
                    why = "unexpected key " + key;
                    return false;
                }
            }
        }
        for (const auto& [key, sub_schema] : props.items()) {
            if (value.contains(key) && !validate(sub_schema, root, value.at(key), why)) {
                why = key + ": " + why;
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (!validate(schema["items"], root, value[i], why)) {
                why = "[" + std::to_string(i) + "]: " + why;
                return false;
            }
        }
    }
    return true;
}

json parse_envelope(const std::string& out) {
    json j = json::parse(out);
    json schema = load_schema("response.v1.json");
    std::string why;
    INFO(why);
    REQUIRE(validate(schema, schema, j, why));
    return j;
}

void check_result_against(const json& result, const json& root, const std::string& pointer) {
    const json& sub = root.at(json::json_pointer(pointer));
    std::string why;
    INFO(why);
    REQUIRE(validate(sub, root, result, why));
}

std::string temp_spectra_file(const std::string& content) {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/eigencone_cli_test.json";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("exit codes encode the decision") {
    CHECK(run_cli("check hermitian --alpha 2,1,0 --beta 1,1,0 --gamma 3,2,0").exit_code == 0);
    CHECK(run_cli("check hermitian --alpha 2,1,0 --beta 1,1,0 --gamma 4,0,0").exit_code == 1);
    CHECK(run_cli("check hermitian --alpha 2,1,0 --beta 1,1,0 --gamma 4,1,0").exit_code == 1);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run_cli("check hermitian --alpha 2,1,x --beta 1,1,0 --gamma 3,2,0").exit_code == 2);
    CHECK(run_cli("check hermitian --alpha 1,2,3 --beta 1,1,0 --gamma 3,2,0").exit_code == 2);
    CHECK(run_cli("check hermitian --alpha 2,1,0 --beta 1,1 --gamma 3,2,0").exit_code == 2);
    CHECK(run_cli("lr --alpha 1,2 --beta 1 --gamma 2,1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check hermitian --no-such-flag").exit_code == 2);
    CHECK(run_cli("check unitary --u 0.9,-0.9 --v 0,0 --w 0,0").exit_code == 2);
}

TEST_CASE("help and version exit 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("check --help").exit_code == 0);
}

TEST_CASE("plain output is the bare answer") {
    RunResult r = run_cli("lr --alpha 2,1 --beta 2,1 --gamma 3,2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    RunResult t = run_cli("tensor --alpha 1 --beta 1 --rows 2");
    CHECK(t.out == "(2) 1\n(1,1) 1\n");
}

TEST_CASE("json envelope validates and echoes inputs") {
    RunResult r = run_cli("lr --alpha 2,1 --beta 2,1 --gamma 3,2,1 --json");
    REQUIRE(r.exit_code == 0);
    json j = parse_envelope(r.out);
    CHECK(j["command"] == "lr");
    CHECK(j["inputs"]["alpha"] == json::array({2, 1}));
    CHECK(j["inputs"]["gamma"] == json::array({3, 2, 1}));
    CHECK(j["result"]["coefficient"] == 2);
    CHECK(j["version"].get<std::string>().find('.') != std::string::npos);
}

TEST_CASE("tensor envelope round-trips") {
    json j = parse_envelope(run_cli("tensor --alpha 2,1 --beta 2,1 --rows 3 --json").out);
    CHECK(j["command"] == "tensor");
    CHECK(j["inputs"]["rows"] == 3);
    REQUIRE(j["result"]["terms"].is_array());
    CHECK(j["result"]["terms"].size() == 5);
    std::uint64_t total = 0;
    for (const json& term : j["result"]["terms"])
        total += term["multiplicity"].get<std::uint64_t>();
    CHECK(total == 6);
}

TEST_CASE("verdict results carry slack and witness per schema") {
    json root = load_schema("response.v1.json");

    json ok = parse_envelope(
        run_cli("check hermitian --alpha 2,1,0 --beta 1,1,0 --gamma 3,2,0 --json").out);
    check_result_against(ok["result"], root, "/definitions/verdict");
    CHECK(ok["result"]["feasible"] == true);

    json bad = parse_envelope(
        run_cli("check hermitian --alpha 2,1,0 --beta 1,1,0 --gamma 4,1,0 --json").out);
    check_result_against(bad["result"], root, "/definitions/verdict");
    CHECK(bad["result"]["feasible"] == false);
    REQUIRE(bad["result"].contains("witness"));
    CHECK(bad["result"]["witness"]["kind"] == "horn");

    json st = parse_envelope(
        run_cli("check stability --alpha 1,0,-1 --beta 1,0,-1 --gamma 1,0,-1 --json").out);
    check_result_against(st["result"], root, "/definitions/stability");
}

TEST_CASE("horn listing matches the known counts") {
    json j = parse_envelope(run_cli("horn --n 3 --json").out);
    CHECK(j["result"]["count"] == 12);
    json root = load_schema("response.v1.json");
    for (const json& t : j["result"]["triples"])
        check_result_against(t, root, "/definitions/horn_triple");

    RunResult human = run_cli("horn --n 2");
    CHECK(human.out.substr(0, 12) == "n=2 count=3\n");

    json facets = parse_envelope(run_cli("horn --n 4 --json --facets-only").out);
    json rec = parse_envelope(run_cli("horn --n 4 --json --recursive --facets-only").out);
    CHECK(facets["result"]["count"] == rec["result"]["count"]);
}

TEST_CASE("spectra can come from a json file") {
    std::string path = temp_spectra_file("[[1.0, -1.0], [1.0, -1.0]]");
    CHECK(run_cli("check zero-sum --spectrum @" + path).exit_code == 0);

    std::string bad = temp_spectra_file("[[1.0, -1.0], [8.0, -8.0]]");
    CHECK(run_cli("check zero-sum --spectrum @" + bad).exit_code == 1);

    std::string junk = temp_spectra_file("{\"not\": \"an array\"}");
    CHECK(run_cli("check zero-sum --spectrum @" + junk).exit_code == 2);
    CHECK(run_cli("check zero-sum --spectrum @/no/such/file.json").exit_code == 2);
}

TEST_CASE("sample reports validate against their schema") {
    RunResult r = run_cli("sample sum --alpha 2,1,0 --beta 1,1,0 --trials 80 --seed 7 --json");
    REQUIRE(r.exit_code == 0);
    json j = parse_envelope(r.out);
    json report_schema = load_schema("sample-report.v1.json");
    std::string why;
    INFO(why);
    REQUIRE(validate(report_schema, report_schema, j["result"], why));
    CHECK(j["result"]["all_pass"] == true);
    CHECK(j["result"]["trials"] == 80);
    CHECK(j["inputs"]["seed"] == 7);
}

TEST_CASE("fixed seed gives byte-identical output") {
    const std::string args =
        "sample sum --alpha 3,1,0 --beta 2,2,0 --trials 150 --seed 99 --json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.out == b.out);

    RunResult jobs = run_cli(args + " --jobs 4");
    CHECK(jobs.out == a.out);

    RunResult other = run_cli(
        "sample sum --alpha 3,1,0 --beta 2,2,0 --trials 150 --seed 100 --json");
    CHECK(other.out != a.out);
}

TEST_CASE("remaining decision commands run end to end") {
    CHECK(run_cli("check interlace --alpha 3,1 --b 2 --gamma 4,2").exit_code == 0);
    CHECK(run_cli("check interlace --alpha 3,1 --b 2 --gamma 6,0").exit_code == 1);
    CHECK(run_cli("check unitary --u 0.25,-0.25 --v 0.25,-0.25 --w 0.5,-0.5").exit_code == 0);
    CHECK(run_cli("check unitary --u 0.1,-0.1 --v 0.1,-0.1 --w 0.4,-0.4").exit_code == 1);
    CHECK(run_cli("check singular --spectrum 2,0.5 --spectrum 2,0.5 --spectrum 4,0.25")
              .exit_code == 0);
    CHECK(run_cli("check singular --spectrum 2,0.5 --spectrum 2,0.5 --spectrum 5,0.2")
              .exit_code == 1);
    CHECK(run_cli("check simpson --dims 2,2,2 --codims 1,1,1 --n 3").exit_code == 0);
    CHECK(run_cli("check simpson --dims 2,1,0 --codims 1,1,1 --n 3").exit_code == 1);
    CHECK(run_cli("sample product --u 0.25,-0.25 --v 0.25,-0.25 --trials 60 --seed 3")
              .exit_code == 0);
    CHECK(run_cli("sample singular --spectrum 2,0.5 --spectrum 2,0.5 --trials 60 --seed 3")
              .exit_code == 0);
}
