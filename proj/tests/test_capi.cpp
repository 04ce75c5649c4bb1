/**
 * @file test_capi.cpp
 * @brief The C interface: handles, status codes, error names and reports.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>
#include <thread>

#include "gsym.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gsym_string_free(s);
  return out;
}

const char* kDual =
    "[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x\n[group]\ngenerator s order 2\nmaps x -> -1 * x\n";

}  // namespace

TEST_CASE("built-in instances and accessors") {
  gsym_instance* inst = nullptr;
  REQUIRE(gsym_instance_cyclic(3, &inst) == GSYM_OK);
  CHECK(gsym_instance_dimension(inst) == 9);
  CHECK(gsym_instance_vertices(inst) == 3);
  CHECK(gsym_instance_group_order(inst) == 3);
  gsym_instance_free(inst);

  REQUIRE(gsym_instance_two_cycle(&inst) == GSYM_OK);
  CHECK(gsym_instance_group_order(inst) == 4);
  char* json = nullptr;
  REQUIRE(gsym_run(inst, "automorphism", 0, 4096, &json) == GSYM_OK);
  auto r = nlohmann::json::parse(take(json));
  CHECK(r["order"] == 4);
  CHECK(r["hcell_realization"]["n"] == 1);
  gsym_instance_free(inst);
  gsym_instance_free(nullptr);
}

TEST_CASE("parsing through the C interface") {
  gsym_instance* inst = nullptr;
  REQUIRE(gsym_instance_parse(kDual, &inst) == GSYM_OK);
  CHECK(gsym_instance_dimension(inst) == 2);
  char* json = nullptr;
  REQUIRE(gsym_run(inst, "fiat", 1, 4096, &json) == GSYM_OK);
  CHECK(nlohmann::json::parse(take(json))["report"]["fiat"] == true);
  gsym_instance_free(inst);

  CHECK(gsym_instance_parse("[quiver]\nvertices = 1\narrow x 1 -> 1\n", &inst) == GSYM_ERR_PARSE);
  CHECK(inst == nullptr);
  CHECK(std::string(gsym_last_error_name()) == "parse-error");
  CHECK(std::string(gsym_last_error()).find("line 3") != std::string::npos);

  char* text = nullptr;
  REQUIRE(gsym_spec_canonical(kDual, &text) == GSYM_OK);
  std::string canon = take(text);
  REQUIRE(gsym_spec_canonical(canon.c_str(), &text) == GSYM_OK);
  CHECK(take(text) == canon);
}

TEST_CASE("status codes") {
  gsym_instance* inst = nullptr;
  CHECK(gsym_instance_parse(nullptr, &inst) == GSYM_ERR_INVALID_ARGUMENT);
  CHECK(gsym_instance_cyclic(1, &inst) == GSYM_ERR_MODULE);
  CHECK(std::string(gsym_last_error_name()) == "invalid");
  CHECK(gsym_instance_parse(
            "[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nx*x\n[group]\ngenerator s order 3\nmaps x -> -1 * x\n",
            &inst) == GSYM_ERR_MODULE);
  CHECK(std::string(gsym_last_error_name()) == "wrong-order");

  REQUIRE(gsym_instance_cyclic(2, &inst) == GSYM_OK);
  char* json = nullptr;
  CHECK(gsym_run(inst, "frobnicate", 0, 4096, &json) == GSYM_ERR_INVALID_ARGUMENT);
  CHECK(json == nullptr);
  CHECK(gsym_run(inst, "cells", 0, -1, &json) == GSYM_ERR_INVALID_ARGUMENT);
  REQUIRE(gsym_run(inst, "cells", 0, 0, &json) == GSYM_OK);
  take(json);
  CHECK(gsym_run(nullptr, "cells", 0, 4096, &json) == GSYM_ERR_INVALID_ARGUMENT);
  REQUIRE(gsym_run(inst, "cells", 0, 4096, &json) == GSYM_OK);
  CHECK(std::string(gsym_last_error_name()).empty());
  take(json);
  gsym_instance_free(inst);

  CHECK(gsym_hcell_solve(0, &json) == GSYM_ERR_MODULE);
  REQUIRE(gsym_hcell_solve(10, &json) == GSYM_OK);
  CHECK(nlohmann::json::parse(take(json))["count"] == 10);
}

TEST_CASE("errors are recorded per thread") {
  gsym_instance* inst = nullptr;
  CHECK(gsym_instance_cyclic(0, &inst) == GSYM_ERR_MODULE);
  std::string other;
  std::thread t([&] {
    gsym_instance* mine = nullptr;
    gsym_instance_cyclic(2, &mine);
    other = gsym_last_error_name();
    gsym_instance_free(mine);
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(gsym_last_error_name()) == "invalid");
  CHECK(std::string(gsym_version()) == "1.0.0");
}
