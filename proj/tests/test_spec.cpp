/**
 * @file test_spec.cpp
 * @brief Instance description files: parsing, canonical emission, error
 * positions and construction, plus the command reports built on top.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "gsym/error.hpp"
#include "gsym/instances.hpp"
#include "gsym/report.hpp"
#include "gsym/spec.hpp"

using namespace gsym;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GSYM_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/** Same algebra (basis, structure constants) and the same group action. */
bool same_instance(const Instance& x, const Instance& y) {
  const Algebra& A = *x.A;
  const Algebra& B = *y.A;
  if (A.dim != B.dim || A.nvert != B.nvert || A.labels != B.labels || A.mult != B.mult) return false;
  if (A.field->m != B.field->m) return false;
  if (x.act->grp.orders() != y.act->grp.orders()) return false;
  for (uint32_t g = 0; g < x.act->size(); ++g)
    if (!(x.act->mat[g] == y.act->mat[g])) return false;
  return true;
}

std::string parse_error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    CHECK(e.name() == "parse-error");
    return e.what();
  }
  return "";
}

std::string build_error_of(const std::string& text) {
  try {
    build_instance(parse_spec(text));
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("cyclic file parses into two vertices, two arrows, truncation and an involution") {
  InstanceSpec s = parse_spec(read_data("cyclic2.gsym"));
  CHECK(s.vertices == 2);
  CHECK(s.arrows.size() == 2);
  CHECK(s.truncate == 2);
  REQUIRE(s.generators.size() == 1);
  CHECK(s.generators[0].order == 2);
  CHECK(spec_conductor(s) == 2);
  Instance file = build_instance(s);
  Instance builtin = cyclic_example(2);
  CHECK(file.A->dim == builtin.A->dim);
  CHECK(file.act->size() == 2);
}

TEST_CASE("emit then parse builds the same algebra and action") {
  for (const char* name : {"cyclic2.gsym", "two_cycle.gsym", "dual_numbers.gsym", "a2.gsym"}) {
    CAPTURE(name);
    InstanceSpec s = parse_spec(read_data(name));
    std::string text = emit_spec(s);
    InstanceSpec t = parse_spec(text);
    CHECK(emit_spec(t) == text);
    CHECK(same_instance(build_instance(s), build_instance(t)));
  }
}

TEST_CASE("negated images are accepted and match the built-in order-4 instance") {
  Instance file = build_instance(parse_spec(read_data("two_cycle.gsym")));
  Instance builtin = two_cycle_instance();
  CHECK(same_instance(file, builtin));
}

TEST_CASE("scalar literals") {
  const std::string head = "[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x*x\n[group]\ngenerator s order 3\n";
  Instance a = build_instance(parse_spec(head + "maps x -> zeta(3)^1 * x\n"));
  Instance b = build_instance(parse_spec(head + "maps x -> -1 * x - zeta(3)^2*x\n"));
  CHECK(a.A->field->m == 3);
  // 1 + zeta + zeta^2 = 0, so -1 - zeta^2 = zeta.
  CHECK(a.act->mat[1] == b.act->mat[1]);
  Instance c = build_instance(parse_spec("[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x - 2/4*x*x\n"));
  CHECK(c.A->dim == 2);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(parse_error_of(read_data("missing_quiver.gsym")).find("line 6, column 1") != std::string::npos);
  CHECK(parse_error_of(read_data("bad_syntax.gsym")).find("line 3, column 9") != std::string::npos);
  CHECK(parse_error_of("[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*y\n").find("line 5") !=
        std::string::npos);
  CHECK(parse_error_of("[quiver]\nvertices = 1\narrow e1: 1 -> 1\n").find("reserved") != std::string::npos);
  CHECK(parse_error_of("[quiver]\nvertices = 1\n[colours]\n").find("unknown section") != std::string::npos);
  CHECK(parse_error_of("[quiver]\nvertices = 2\narrow a: 1 -> 3\n").find("out of range") != std::string::npos);
  CHECK(parse_error_of("[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x/\n") != "");
  CHECK(parse_error_of("") != "");
}

TEST_CASE("semantic errors come from the builders") {
  const std::string dual = "[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x\n";
  CHECK(build_error_of(dual + "[group]\ngenerator s order 3\nmaps x -> -1 * x\n") == "wrong-order");
  CHECK(build_error_of(dual + "[group]\ngenerator s order 2\nmaps x -> 0 * x\n") == "not-automorphism");
  CHECK(build_error_of("[quiver]\nvertices = 1\narrow x: 1 -> 1\n") != "");
}

TEST_CASE("reports are deterministic and expose the failing invariant") {
  Instance inst = cyclic_example(2);
  for (const std::string& cmd : instance_commands()) {
    CAPTURE(cmd);
    Report r1 = run_command(inst, cmd);
    Report r2 = run_command(cyclic_example(2), cmd);
    CHECK(r1.json == r2.json);
    CHECK(r1.ok);
    CHECK(!nlohmann::json::parse(r1.json).is_discarded());
  }
  CHECK_THROWS_AS(run_command(inst, "frobnicate"), Error);
  auto cells = nlohmann::json::parse(run_command(inst, "cells").json);
  CHECK(cells["two_sided_sizes"] == nlohmann::json::array({2, 2}));
  auto classify = nlohmann::json::parse(run_command(cyclic_example(6), "classify").json);
  CHECK(classify["total"] == 4);
  auto fiat = nlohmann::json::parse(run_command(a2_instance(), "fiat").json);
  CHECK(fiat["report"]["weakly_fiat"] == false);
  auto solve = nlohmann::json::parse(hcell_solve_report(5).json);
  CHECK(solve["count"] == 5);
  CHECK(solve["all_diagonal"] == true);
}
