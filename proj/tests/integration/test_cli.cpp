#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_with(const std::string& args, const char* redirect) {
  const std::string command =
      "\"" + std::string(POSETCODE_CLI_PATH) + "\" " + args + redirect;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

RunResult run(const std::string& args) { return run_with(args, " 2>/dev/null"); }
RunResult run_merged(const std::string& args) { return run_with(args, " 2>&1"); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("posetcode-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path write_lines(const fs::path& dir, const std::string& name,
                     const std::vector<std::string>& lines) {
  const fs::path p = dir / name;
  std::ofstream file(p);
  for (const std::string& line : lines) file << line << '\n';
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream file(p, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("construct reports sizes, rank, and the weight distribution") {
  const RunResult r = run("construct --m 2 --l 2 --ideals 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "command=construct kind=d m=2 l=2 n=4 ideals=3"));
  CHECK(contains(r.out, "|D|=11 |D0|=9 |D1|=2"));
  CHECK(contains(r.out, "k=4 rank=4"));
  CHECK(contains(r.out, "w_min=5 w_max=8"));
  CHECK(contains(r.out, "weight-distribution: 5:6 6:6 7:2 8:1"));
  CHECK(contains(r.out, "generator-matrix:"));
}

TEST_CASE("a family covering the whole upper level leaves nothing extra") {
  const RunResult r = run("construct --m 1 --l 2 --ideals 2,3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "|D|=3 |D0|=3 |D1|=0"));
  CHECK(contains(r.out, "k=3 rank=2"));
}

TEST_CASE("construct --set d0 skips the family split") {
  const RunResult r = run("construct --m 2 --l 2 --set d0");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "command=construct kind=d0 m=2 l=2 n=4\n"));
  CHECK(contains(r.out, "|D|=9\n"));
  CHECK(contains(r.out, "k=4 rank=4"));
}

TEST_CASE("construct json carries the documented fields") {
  const RunResult r = run("construct --m 2 --l 2 --ideals 3 --format json");
  CHECK(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "construct");
  CHECK(j["kind"] == "d");
  CHECK(j["m"] == 2);
  CHECK(j["l"] == 2);
  CHECK(j["n"] == 4);
  CHECK(j["ideals"] == "3");
  CHECK(j["size"] == 11);
  CHECK(j["size_d0"] == 9);
  CHECK(j["size_d1"] == 2);
  CHECK(j["k"] == 4);
  CHECK(j["rank"] == 4);
  CHECK(j["weight_distribution"]["5"] == 6);
  CHECK(j["weight_distribution"]["8"] == 1);
  CHECK(j["w_min"] == 5);
  CHECK(j["w_max"] == 8);
  CHECK(j["generator_matrix"].size() == 4);
}

TEST_CASE("custom column files drive construct and --matrix-out") {
  TempDir tmp;
  const fs::path simplex =
      write_lines(tmp.path, "simplex.txt", {"10", "01", "11"});
  const fs::path matrix = tmp.path / "matrix.txt";
  const RunResult r = run("construct --set \"" + simplex.string() +
                          "\" --matrix-out \"" + matrix.string() + "\"");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "command=construct kind=custom"));
  CHECK(contains(r.out, "|D|=3\n"));
  CHECK(contains(r.out, "k=2 rank=2"));
  CHECK(contains(r.out, "weight-distribution: 2:3"));
  CHECK(slurp(matrix) == "101\n011\n");
}

TEST_CASE("check exit codes follow the verdict") {
  const RunResult minimal = run("check --m 3 --l 2 --ideals 4");
  CHECK(minimal.status == 0);
  CHECK(contains(minimal.out, "geometric: minimal"));
  CHECK(contains(minimal.out, "definitional: minimal"));
  CHECK(contains(minimal.out, "verdict: minimal"));

  const RunResult refuted = run("check --m 2 --l 1 --ideals 3");
  CHECK(refuted.status == 1);
  CHECK(contains(refuted.out, "witness: u=110 v=100"));
  CHECK(contains(refuted.out, "verdict: not-minimal"));

  const RunResult geometric =
      run("check --m 2 --l 2 --ideals 3,4 --checker geometric");
  CHECK(geometric.status == 1);
  CHECK(contains(geometric.out, "verdict: not-minimal"));
}

TEST_CASE("the one-sided checker alone can come back inconclusive") {
  TempDir tmp;
  const fs::path identity =
      write_lines(tmp.path, "identity.txt", {"100", "010", "001"});
  const RunResult silent =
      run("check --set \"" + identity.string() + "\" --checker ab");
  CHECK(silent.status == 4);
  CHECK(contains(silent.out, "ab: inconclusive"));
  CHECK(contains(silent.out, "verdict: inconclusive"));

  const fs::path simplex =
      write_lines(tmp.path, "simplex.txt", {"10", "01", "11"});
  const RunResult decided =
      run("check --set \"" + simplex.string() + "\" --checker ab");
  CHECK(decided.status == 0);
  CHECK(contains(decided.out, "verdict: minimal"));
}

TEST_CASE("check json names each checker") {
  const RunResult r = run("check --m 2 --l 1 --ideals 3 --format json");
  CHECK(r.status == 1);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["verdicts"]["geometric"] == "not-minimal");
  CHECK(j["verdicts"]["definitional"] == "not-minimal");
  CHECK(j["verdict"] == "not-minimal");
  CHECK(j["witness_u"] == "110");
  CHECK(j["witness_v"] == "100");
}

TEST_CASE("budget refusals use their own exit code") {
  TempDir tmp;
  const fs::path simplex =
      write_lines(tmp.path, "simplex.txt", {"10", "01", "11"});
  const RunResult check =
      run("check --set \"" + simplex.string() + "\" --max-k 1");
  CHECK(check.status == 3);

  const RunResult construct = run("construct --m 9 --l 8 --set d0");
  CHECK(construct.status == 3);
}

TEST_CASE("sweep output is byte-stable and consistent across formats") {
  const std::string range =
      "--m-min 1 --m-max 2 --l-min 1 --l-max 2 --n-max 4 --t-max 2";
  const RunResult first = run("sweep " + range + " --format json");
  const RunResult second = run("sweep " + range + " --format json");
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  const nlohmann::json rows = nlohmann::json::parse(first.out);
  CHECK(rows.size() == 14);

  const RunResult csv = run("sweep " + range + " --format csv");
  CHECK(csv.status == 0);
  CHECK(count_lines(csv.out) == 15);
  CHECK(contains(first.out, "\"case\": \"T32.2\""));
  CHECK(contains(csv.out, "T32.2"));
}

TEST_CASE("sweep writes --out and summarizes on stderr") {
  TempDir tmp;
  const fs::path out = tmp.path / "report.json";
  const RunResult r = run_merged(
      "sweep --m-min 1 --m-max 2 --l-min 1 --l-max 2 --n-max 4 --t-max 2 "
      "--format json --out \"" +
      out.string() + "\"");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "sweep: 14 instances, 0 mismatches"));
  const std::string report = slurp(out);
  CHECK(!report.empty());
  CHECK(report.front() == '[');
}

TEST_CASE("witness replays the catalogue") {
  const RunResult text = run("witness");
  CHECK(text.status == 0);
  CHECK(contains(text.out, "witness-cases=3 failures=0"));
  std::size_t passes = 0;
  std::size_t at = 0;
  while ((at = text.out.find("-> PASS", at)) != std::string::npos) {
    ++passes;
    at += 7;
  }
  CHECK(passes == 3);

  const RunResult json = run("witness --format json");
  CHECK(json.status == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["cases"].size() == 3);
}

TEST_CASE("usage errors exit 2") {
  TempDir tmp;
  const fs::path simplex =
      write_lines(tmp.path, "simplex.txt", {"10", "01", "11"});
  CHECK(run("construct --m 2 --l 2 --ideals '0;9'").status == 2);
  CHECK(run("construct --m 2 --l 2 --set d0 --ideals 3").status == 2);
  CHECK(run("check --set \"" + simplex.string() + "\" --ideals 3").status ==
        2);
  CHECK(run("check --m 2 --l 2").status == 2);
  CHECK(run("check --m 2 --l 1 --ideals 3 --format csv").status == 2);
  CHECK(run("check --m 2 --l 1 --ideals 3 --checker quantum").status == 2);
  CHECK(run("sweep --format xml").status == 2);
  CHECK(run("construct --no-such-flag").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("help is exit zero") {
  const RunResult top = run("--help");
  CHECK(top.status == 0);
  CHECK(contains(top.out, "construct"));
  CHECK(contains(top.out, "sweep"));
  const RunResult sub = run("check --help");
  CHECK(sub.status == 0);
  CHECK(contains(sub.out, "--checker"));
}
