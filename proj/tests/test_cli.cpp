/**
 * @file test_cli.cpp
 * @brief End-to-end runs of the command-line tool: outputs, exit codes and
 * determinism.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/** Runs the tool with @p args, capturing stdout (stderr merged when @p merge). */
Run run(const std::string& args, bool merge = false) {
  std::string cmd = std::string(GSYM_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GSYM_TEST_DATA) + "/" + name; }

nlohmann::json json_of(const std::string& args) {
  Run r = run("--json " + args);
  CHECK(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("built-in cyclic example") {
  auto cells = json_of("example cyclic --n 2 cells");
  CHECK(cells["two_sided_cells"].size() == 2);
  CHECK(cells["two_sided_sizes"] == nlohmann::json::array({2, 2}));
  CHECK(json_of("example cyclic --n 6 classify")["total"] == 4);
  auto adj = json_of("example cyclic --n 3 adjunctions");
  for (auto& a : adj["adjunctions"]) CHECK(a["zigzags"] == true);
  CHECK(json_of("example cyclic --n 3 check")["ok"] == true);
}

TEST_CASE("hcell-solve") {
  auto r = json_of("hcell-solve --max 5");
  CHECK(r["count"] == 5);
  CHECK(r["all_diagonal"] == true);
  for (int n = 1; n <= 5; ++n) CHECK(r["solutions"][n - 1] == nlohmann::json::array({n, n, n, n}));
}

TEST_CASE("two-vertex demo instance") {
  auto r = json_of("section7-demo");
  CHECK(r["a"] == "e1 - e2");
  CHECK(r["t"] == "-e1 - e2");
  CHECK(r["sigma_phi_fourth_power_identity"] == true);
  CHECK(json_of("section7-demo fiat")["report"]["fiat"] == true);
}

TEST_CASE("file commands") {
  CHECK(json_of("check " + data("two_cycle.gsym"))["ok"] == true);
  CHECK(json_of("fiat " + data("a2.gsym"))["report"]["weakly_fiat"] == false);
  CHECK(json_of("catalogue " + data("dual_numbers.gsym"))["count"] == 4);
  Run human = run("cells " + data("cyclic2.gsym"));
  CHECK(human.code == 0);
  CHECK(human.out.find("two_sided_sizes: [2, 2]") != std::string::npos);
}

TEST_CASE("identical runs produce identical bytes") {
  for (const char* args : {"--json example cyclic --n 3 table", "example cyclic --n 3 fiat",
                           "--json classify " GSYM_TEST_DATA "/two_cycle.gsym"}) {
    CAPTURE(args);
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("exit codes") {
  Run parse = run("check " + data("missing_quiver.gsym"), true);
  CHECK(parse.code == 2);
  CHECK(parse.out.find("line 6, column 1") != std::string::npos);
  CHECK(run("check " + data("bad_syntax.gsym")).code == 2);
  CHECK(run("check /nonexistent/file.gsym").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("example cyclic --n 2 frobnicate").code == 2);
  Run module = run("example cyclic --n 1", true);
  CHECK(module.code == 1);
  CHECK(module.out.find("invalid") != std::string::npos);
  CHECK(run("hcell-solve --max 0").code == 1);
  CHECK(run("--help").code == 0);
}
