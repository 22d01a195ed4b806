#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MACLOOPS_CLI_PATH
#error "MACLOOPS_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + MACLOOPS_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("betti pentagon, text and json") {
  RunResult text = run_cli("betti pentagon");
  CHECK(text.exit_code == 0);
  CHECK(text.out ==
        "degree  hochster  cellular\n"
        "0  1  1\n"
        "3  5  5\n"
        "4  5  5\n"
        "7  1  1\n"
        "agree: true\n");

  RunResult js = run_cli("--format json betti pentagon");
  CHECK(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("agree") == true);
  CHECK(j.at("hochster") ==
        nlohmann::json{{"0", 1}, {"3", 5}, {"4", 5}, {"7", 1}});
  CHECK(j.at("cellular") == j.at("hochster"));
  // byte-for-byte deterministic
  CHECK(run_cli("--format json betti pentagon").out == js.out);

  RunResult filtered = run_cli("--degree 3 --degree 4 betti hexagon");
  CHECK(filtered.exit_code == 0);
  CHECK(filtered.out ==
        "degree  hochster  cellular\n"
        "3  9  9\n"
        "4  16  16\n"
        "agree: true\n");
}

TEST_CASE("cohomology-ring pentagon pairing is the identity") {
  RunResult r = run_cli("--format json cohomology-ring pentagon -p 3 -q 4");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("top") == "u1 u2 u3 v4 v5");
  auto mat = j.at("pairing");
  REQUIRE(mat.size() == 5);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j2 = 0; j2 < 5; ++j2)
      CHECK(mat[i][j2] == (i == j2 ? 1 : 0));
}

TEST_CASE("generators lists the square's two commutators") {
  RunResult r = run_cli("--format json generators square");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("commutator") == "[3,1]");
  CHECK(j[1].at("commutator") == "[4,2]");
  for (const auto& row : j) CHECK(row.at("cycle") == true);
}

TEST_CASE("verify-relation reports the pentagon relation as zero") {
  RunResult text = run_cli("verify-relation pentagon pentagon");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "zero\n");
  RunResult js = run_cli("--format json verify-relation hexagon hexagon");
  CHECK(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("zero") == true);
  CHECK(j.at("residue").empty());
}

TEST_CASE("solve-coefficients reports the hexagon solution space") {
  RunResult r = run_cli("--format json solve-coefficients hexagon hexagon");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("consistent") == true);
  CHECK(j.at("dimension") == 4);
  CHECK(j.at("unknowns").size() == 12);
  CHECK(j.at("particular").size() == 12);
  CHECK(j.at("nullspace").size() == 4);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("betti /nonexistent.json").exit_code == 2);
  CHECK(run_cli("betti").exit_code == 2);
  CHECK(run_cli("--format yaml betti pentagon").exit_code == 2);
  CHECK(run_cli("betti simplex:x").exit_code == 2);
  CHECK(run_cli("verify-relation pentagon /nonexistent.json").exit_code == 2);

  const std::string bad = "cli_bad_complex.json";
  {
    std::ofstream out(bad);
    out << "{\"m\": 3}";
  }
  CHECK(run_cli("betti " + bad).exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("vertex cap from the environment") {
  CHECK(run_cli("betti pentagon", "MACLOOPS_MAX_VERTICES=3").exit_code == 2);
  CHECK(run_cli("betti square", "MACLOOPS_MAX_VERTICES=4").exit_code == 0);
  CHECK(run_cli("betti pentagon", "MACLOOPS_MAX_VERTICES=abc").exit_code == 2);
}

TEST_CASE("json complex files load") {
  const std::string path = "cli_square.json";
  {
    std::ofstream out(path);
    out << "{\"m\":4,\"maximal_faces\":[[1,2],[2,3],[3,4],[1,4]]}";
  }
  RunResult file_run = run_cli("--format json betti " + path);
  RunResult preset_run = run_cli("--format json betti square");
  CHECK(file_run.exit_code == 0);
  CHECK(file_run.out == preset_run.out);
  std::remove(path.c_str());
}
