#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nearby/cli.hpp"

using namespace nearby;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nearby");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "nearby_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kJ2Strings = R"({"kind": "pure_strings", "n": 1, "strings": [{"label": "L", "length": 2}]})";
const char* kWrongJ2 = R"({"kind": "nilpotent", "n": 1, "matrix": [["0", "1"], ["0", "0"]],
                           "filtration": {"0": [["1", "0"], ["0", "1"]]}})";
const char* kShriek = R"({"kind": "disk",
  "open": {"kind": "pure_strings", "n": 1, "strings": [{"label": "L", "length": 1}]},
  "point": {"dim": 0, "filtration": {}}, "pure": false, "extension": "shriek"})";
const char* kPureDisk = R"({"kind": "disk",
  "open": {"kind": "pure_strings", "n": 1, "strings": [{"label": "L", "length": 2}]},
  "point": {"dim": 1, "filtration": {"1": [["1"]]}}, "pure": true, "extension": "intermediate"})";

}  // namespace

TEST_CASE("check on generated models passes") {
  const auto gen = run({"gen", "--seed", "4", "--strings", "3", "--maxlen", "4", "--weight", "2"});
  REQUIRE(gen.code == 0);
  const auto file = write_temp("gen.json", gen.out);
  const auto r = run({"check", file});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  const auto scrambled = run({"gen", "--seed", "4", "--scramble"});
  REQUIRE(scrambled.code == 0);
  CHECK(scrambled.out.find("\"kind\": \"nilpotent\"") != std::string::npos);
  CHECK(run({"check", write_temp("scr.json", scrambled.out)}).code == cli::kOk);
}

TEST_CASE("gen is deterministic and honours labels") {
  const auto a = run({"gen", "--seed", "9", "--labels", "A,B"});
  CHECK(a.out == run({"gen", "--seed", "9", "--labels", "A,B"}).out);
  CHECK(a.out.find("\"label\": \"L\"") == std::string::npos);
  CHECK(run({"gen", "--seed", "9", "--strings", "0"}).code == cli::kParseFailure);
}

TEST_CASE("kclass of the J2 string") {
  const auto r = run({"kclass", write_temp("j2.json", kJ2Strings)});
  CHECK(r.code == 0);
  CHECK(r.out.find("class: L(0) + L(-1)\n") != std::string::npos);
}

TEST_CASE("monodromy command") {
  const auto file = write_temp("j2.json", kJ2Strings);
  const auto j = nlohmann::json::parse(run({"monodromy", file, "--format", "json"}).out);
  CHECK(j["data"]["center"] == 0);
  CHECK(j["data"]["graded_dims"] == nlohmann::json{{"-1", 1}, {"1", 1}});
  const auto shifted = nlohmann::json::parse(run({"monodromy", file, "--center", "3", "--format", "json"}).out);
  CHECK(shifted["data"]["graded_dims"] == nlohmann::json{{"2", 1}, {"4", 1}});
}

TEST_CASE("lic on the impure j_! counterexample fails on surjectivity on low weights") {
  const auto r = run({"lic", write_temp("shriek.json", kShriek)});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("[FAIL] weights[k=-1].surjective_on_low_weights") != std::string::npos);
  CHECK(r.out.find("[FAIL] local_invariant_cycles[k=-1]") != std::string::npos);
  CHECK(r.out.find("[PASS] implication[k=-1]") != std::string::npos);

  const auto pure = run({"lic", write_temp("pure_disk.json", kPureDisk), "--k", "-1"});
  CHECK(pure.code == cli::kOk);
  CHECK(pure.out.find("k=0") == std::string::npos);
  CHECK(run({"check", write_temp("pure_disk.json", kPureDisk)}).code == cli::kOk);
  CHECK(run({"lic", write_temp("j2.json", kJ2Strings)}).code == cli::kValidationFailure);
}

TEST_CASE("independence command") {
  const auto a = write_temp("j2.json", kJ2Strings);
  const auto b = write_temp("j11.json", R"({"kind": "pure_strings", "n": 1,
      "strings": [{"label": "L", "length": 1}, {"label": "L", "length": 1}]})");
  const auto same = run({"independence", a, a});
  CHECK(same.code == 0);
  CHECK(same.out.find("status: equal") != std::string::npos);
  const auto differ = run({"independence", a, b});
  CHECK(differ.code == 0);
  CHECK(differ.out.find("status: hypothesis_not_satisfied") != std::string::npos);
  CHECK(run({"independence", a, write_temp("wrong.json", kWrongJ2)}).code == cli::kValidationFailure);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({"check", write_temp("bad.json", "{\"kind\": ")}).code == cli::kParseFailure);
  CHECK(run({"check", "/nonexistent/file.json"}).code == cli::kParseFailure);
  CHECK(run({"check", write_temp("nn.json", R"({"kind": "nilpotent", "n": 1, "matrix": [["1"]]})")}).code ==
        cli::kValidationFailure);
  CHECK(run({"frobnicate"}).code == cli::kParseFailure);
  CHECK(run({}).code == cli::kParseFailure);
  CHECK(run({"check", "x", "--format", "yaml"}).code == cli::kParseFailure);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("independence") != std::string::npos);
}

TEST_CASE("check exit codes follow the report") {
  const auto wrong = write_temp("wrong.json", kWrongJ2);
  const auto text = run({"check", wrong});
  CHECK(text.code == cli::kVerificationFailed);
  CHECK(text.out.find("[FAIL] hard_lefschetz") != std::string::npos);

  for (const auto* doc : {kJ2Strings, kWrongJ2, kShriek, kPureDisk}) {
    const auto file = write_temp("doc.json", doc);
    const auto r = run({"check", file, "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    bool all = true;
    for (const auto& c : j["checks"]) all = all && c["passed"].get<bool>();
    CHECK(j["passed"].get<bool>() == all);
    CHECK((r.code == cli::kOk) == all);
    CHECK(j.contains("command"));
    CHECK(j.contains("kind"));
    CHECK(j["data"].is_object());
  }
}

TEST_CASE("check on a gluing document") {
  const auto file = write_temp("glue.json", R"({"kind": "gluing",
    "psi": {"dim": 2, "filtration": {"-1": [["1", "0"]], "1": [["1", "0"], ["0", "1"]]}},
    "phi": {"dim": 1, "filtration": {"1": [["1"]]}},
    "can": [["0", "1"]], "var": [["1"], ["0"]]})");
  const auto r = run({"check", file});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] intermediate_stalks") != std::string::npos);
  CHECK(run({"kclass", file}).out.find("class: 2*pt(0)") != std::string::npos);
}
