// End-to-end checks against the installed binary: output shapes, exit codes,
// determinism, and the golden-file override of the verify command.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(FOIL_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t read;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), read);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("poly outputs") {
  CHECK(run_cli("poly foil 3").output == "x^3 + 4x^2 + 3x\n");
  CHECK(run_cli("poly twist 0").output == "x\n");
  CHECK(run_cli("poly foil 0").output == "x^2\n");

  const RunResult csv = run_cli("poly foil 5 --method closed --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "k,coefficient\n0,0\n1,5\n2,11\n3,10\n4,5\n5,1\n");

  const RunResult json = run_cli("poly foil 3 --method statesum --format json");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["kind"] == "foil");
  CHECK(doc["n"] == 3);
  CHECK(doc["method"] == "statesum");
  CHECK(doc["coefficients"] == nlohmann::json({"0", "3", "4", "1"}));

  // All three methods agree.
  for (const char* kind : {"foil", "twist"}) {
    for (int n : {0, 1, 6}) {
      const std::string base = std::string("poly ") + kind + " " + std::to_string(n);
      const std::string closed = run_cli(base + " --method closed").output;
      CHECK(run_cli(base + " --method recurrence").output == closed);
      CHECK(run_cli(base + " --method statesum").output == closed);
    }
  }
}

TEST_CASE("table outputs") {
  const RunResult csv = run_cli("table twist 2 --format csv");
  CHECK(csv.output == "n,0,1,2,3\n0,0,1,,\n1,0,1,1,\n2,0,1,2,1\n");
  const RunResult json = run_cli("table foil 3 --format json");
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][3] == nlohmann::json({"0", "3", "4", "1"}));
}

TEST_CASE("word list outputs") {
  CHECK(run_cli("words foil2 4 --format csv").output ==
        "word\n0011\n0101\n0110\n1001\n1010\n1100\n1111\n");
  CHECK(run_cli("words regions 0").output == "(empty)\n");
  CHECK(run_cli("words regions 0 --format csv").output == "word\n\n");
  CHECK(run_cli("words twist2 0 --format csv").output == "word\n");
  CHECK(run_cli("words regions 4 --format csv").output ==
        "word\n0000\n0001\n0011\n0111\n1000\n1001\n1011\n1100\n1101\n1110\n1111\n");
}

TEST_CASE("geometric region output matches the combinatorial words") {
  const RunResult geo = run_cli("regions-geo 4 --format json");
  CHECK(geo.exit_code == 0);
  const auto doc = nlohmann::json::parse(geo.output);
  REQUIRE(doc["regions"].size() == 11);
  const auto words = nlohmann::json::parse(run_cli("words regions 4 --format json").output);
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(doc["regions"][i]["code"] == words["words"][i]);
  }
  CHECK(run_cli("regions-geo 1 --format csv").output.substr(0, 9) == "code,x,y\n");
}

TEST_CASE("states outputs") {
  CHECK(run_cli("states foil 4 --components 2 --format csv").output ==
        "word\n0011\n0101\n0110\n1001\n1010\n1100\n1111\n");
  CHECK(run_cli("states twist 3 --components 1").output == "111\n");
  CHECK(run_cli("states foil 3 --format csv").output == "components,count\n1,3\n2,4\n3,1\n");
}

TEST_CASE("bijection outputs") {
  const RunResult csv = run_cli("bijection 1 --format csv");
  CHECK(csv.output == "k,p,region,state\n0,0,0,00\n,,1,11\n");
  CHECK(run_cli("bijection 0 --format csv").output == "k,p,region,state\n,,,1\n");

  const RunResult seven = run_cli("bijection 7 --format csv");
  CHECK(seven.output.find("2,1,1100001,10110111") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("poly foil").exit_code == 2);
  CHECK(run_cli("poly foil -3").exit_code == 2);
  CHECK(run_cli("words newregions 0").exit_code == 3);
  CHECK(run_cli("poly foil 40 --method statesum").exit_code == 3);
  CHECK(run_cli("regions-geo 100").exit_code == 3);
  CHECK(run_cli("--help").exit_code == 0);

  // The cap is overridable.
  CHECK(run_cli("regions-geo 65 --max-enumeration 70 --format csv").exit_code == 0);
}

TEST_CASE("outputs are deterministic") {
  const std::string first = run_cli("regions-geo 6 --format csv").output;
  CHECK(first == run_cli("regions-geo 6 --format csv").output);
}

TEST_CASE("out flag writes the same bytes to a file") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "foilstates_out_test.csv";
  const RunResult direct = run_cli("table foil 4 --format csv");
  const RunResult redirected = run_cli("table foil 4 --format csv --out " + path.string());
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == direct.output);
  std::filesystem::remove(path);
}

TEST_CASE("verify succeeds and respects golden overrides") {
  const RunResult ok = run_cli("verify 8 --format json");
  CHECK(ok.exit_code == 0);
  const auto doc = nlohmann::json::parse(ok.output);
  CHECK(doc["ok"] == true);
  CHECK(doc["checks"].size() >= 10);

  // A corrupted golden file must fail the named check and exit 4.
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "foilstates_goldens_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "twist_table.csv") << "n,0\n0,9\n";
  const RunResult bad = run_cli("verify 8 --goldens " + dir.string() + " --format json");
  CHECK(bad.exit_code == 4);
  const auto bad_doc = nlohmann::json::parse(bad.output);
  CHECK(bad_doc["ok"] == false);
  bool named = false;
  for (const auto& check : bad_doc["checks"]) {
    if (check["name"] == "twist-table-golden") {
      named = true;
      CHECK(check["ok"] == false);
    } else {
      CHECK(check["ok"] == true);
    }
  }
  CHECK(named);
  std::filesystem::remove_all(dir);
}
