#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

// DP_CLI and DP_SAMPLES are injected by the build.

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DP_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) {
  return std::string(DP_SAMPLES) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/dp_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("analyze reports the smooth hexagonal surface") {
  auto r = run("analyze " + sample("smooth_d6.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sigma=6") != std::string::npos);
  CHECK(r.output.find("gamma=0") != std::string::npos);
  CHECK(r.output.find("route=Smooth") != std::string::npos);
}

TEST_CASE("json reports are byte stable") {
  auto a = run("analyze --json " + sample("smooth_d6.json"));
  auto b = run("analyze --json " + sample("smooth_d6.json"));
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"sigma\": \"6\"") != std::string::npos);
  CHECK(a.output.find("\"singularities\": \"smooth\"") != std::string::npos);
  // Keys arrive sorted.
  CHECK(a.output.find("\"degree\"") < a.output.find("\"gamma\""));
  CHECK(a.output.find("\"gamma\"") < a.output.find("\"sigma\""));
}

TEST_CASE("analyze handles the singular sample") {
  auto r = run("analyze --json " + sample("d4_with_d4_point.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"singularities\": \"D4\"") != std::string::npos);
  CHECK(r.output.find("\"sigma\": \"5/2\"") != std::string::npos);
  CHECK(r.output.find("\"certificate\"") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  CHECK(run("analyze /nonexistent/file.json").exit_code == 1);
  std::string bad = write_temp("bad.json", "{ not json");
  CHECK(run("analyze " + bad).exit_code == 1);
  std::string unknown = write_temp("unknown.json", "{\"degree\": 6, \"frobnicate\": 1}");
  CHECK(run("analyze " + unknown).exit_code == 1);
  std::string badroot = write_temp("badroot.json",
                                   "{\"degree\": 6, \"roots\": [[0, 1, 1, 0]]}");
  CHECK(run("analyze " + badroot).exit_code == 1);
  CHECK(run("bogus-subcommand").exit_code == 1);
}

TEST_CASE("curves and graph output") {
  auto c = run("curves " + sample("smooth_d6.json"));
  CHECK(c.exit_code == 0);
  CHECK(c.output.find("H-E1-E2") != std::string::npos);

  auto g = run("graph --dot " + sample("smooth_d6.json"));
  CHECK(g.exit_code == 0);
  CHECK(g.output.rfind("graph dual {", 0) == 0);
}

TEST_CASE("decompose lists fiber splittings") {
  auto r = run("decompose " + sample("smooth_d6.json") + " --class 1,-1,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[type 1]") != std::string::npos);
}

TEST_CASE("lc-check arbitrates boundaries") {
  auto good = run("lc-check " + sample("smooth_d6.json") + " " +
                  sample("hexagon_boundary.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("LC") != std::string::npos);

  auto bad = run("lc-check " + sample("eckardt_d3.json") + " " +
                 sample("eckardt_boundary.json"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("NotLC") != std::string::npos);
}

TEST_CASE("lct prints the threshold of three concurrent lines") {
  auto r = run("lct " + sample("eckardt_d3.json") + " " +
               sample("eckardt_boundary.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2/3\n");
}

TEST_CASE("blowup emits a valid new spec") {
  auto r = run("blowup " + sample("smooth_d6.json") + " --on 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"degree\": 5") != std::string::npos);
  std::string path = write_temp("blown.json", r.output);
  auto back = run("analyze " + path);
  CHECK(back.exit_code == 0);
  CHECK(back.output.find("singularities=A1") != std::string::npos);
}

TEST_CASE("catalog dump covers all degrees") {
  auto all = run("catalog");
  CHECK(all.exit_code == 0);
  for (int d : {2, 3, 4, 5, 6, 7}) {
    auto r = run("catalog --degree " + std::to_string(d));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Y_{" + std::to_string(d) + ",") != std::string::npos);
  }
  CHECK(run("catalog --degree 4").output.find("Y_{4,6}") != std::string::npos);
}

TEST_CASE("batch analyzes a directory in sorted order") {
  std::string dir = "/tmp/dp_cli_batch";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/a_smooth7.json") << "{\"degree\": 7}";
  std::ofstream(dir + "/b_smooth6.json") << "{\"degree\": 6}";
  auto r = run("analyze --batch " + dir);
  CHECK(r.exit_code == 0);
  auto pa = r.output.find("a_smooth7.json");
  auto pb = r.output.find("b_smooth6.json");
  REQUIRE(pa != std::string::npos);
  REQUIRE(pb != std::string::npos);
  CHECK(pa < pb);
}
