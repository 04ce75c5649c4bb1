/**
 * @file gsym_cli.cpp
 * @brief Command-line front end over the C interface.
 *
 * Exit status: 0 success, 1 failed verification or module error, 2 usage or
 * parse error.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "gsym.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json_out = false;
  bool certify = false;
  /** 0 selects the instance default. */
  int budget = 0;
};

using InstancePtr = std::unique_ptr<gsym_instance, decltype(&gsym_instance_free)>;

int status_exit(gsym_status s) {
  switch (s) {
    case GSYM_OK:
      return kExitOk;
    case GSYM_ERR_PARSE:
    case GSYM_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

int report_error(gsym_status s) {
  std::cerr << "error: " << gsym_last_error() << "\n";
  return status_exit(s);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (auto& x : v)
    if (x.is_object() || (x.is_array() && !is_flat_array(x))) return false;
  return true;
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat_text(v[i]);
  return s + "]";
}

/** Indented key/value rendering of a report tree. */
void render(std::ostream& os, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto& [k, x] : v.items()) {
      if (x.is_object() || (x.is_array() && !is_flat_array(x))) {
        os << pad << k << ":\n";
        render(os, x, indent + 2);
      } else {
        os << pad << k << ": " << flat_text(x) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (auto& x : v) {
      if (x.is_object()) {
        os << pad << "-\n";
        render(os, x, indent + 2);
      } else {
        os << pad << "- " << flat_text(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

int emit(gsym_status s, char* text, const Options& opt) {
  if (!text) return report_error(s);
  std::string out(text);
  gsym_string_free(text);
  if (opt.json_out) {
    std::cout << out;
  } else {
    render(std::cout, json::parse(out), 0);
  }
  if (s == GSYM_ERR_VERIFICATION_FAILED) {
    std::cerr << "verification failed: " << gsym_last_error_name() << "\n";
  }
  return status_exit(s);
}

int run_instance(gsym_instance* raw, gsym_status built, const std::string& command, const Options& opt) {
  if (built != GSYM_OK) return report_error(built);
  InstancePtr inst(raw, gsym_instance_free);
  char* text = nullptr;
  gsym_status s = gsym_run(inst.get(), command.c_str(), opt.certify ? 1 : 0, opt.budget, &text);
  return emit(s, text, opt);
}

int run_file(const std::string& path, const std::string& command, const Options& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  gsym_instance* raw = nullptr;
  gsym_status s = gsym_instance_parse(ss.str().c_str(), &raw);
  return run_instance(raw, s, command, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-symmetric bimodule 2-categories: catalogues, tables, cells and adjunctions"};
  Options opt;
  app.add_flag("--json", opt.json_out, "Print the machine-readable report");
  app.add_flag("--certify", opt.certify, "Certify every table entry with explicit split pairs");
  app.add_option("--budget", opt.budget, "Search budget of the inner-witness scan")->check(CLI::PositiveNumber);
  app.require_subcommand(1);
  app.fallthrough();

  const char* file_commands[][2] = {
      {"check", "Build the instance and verify every invariant"},
      {"catalogue", "List the indecomposable 1-morphisms"},
      {"table", "Multiplication table of the indecomposables"},
      {"cells", "Left, right and two-sided cells"},
      {"adjunctions", "Construct all adjunctions and verify the zig-zag identities"},
      {"fiat", "Fiatness report"},
      {"classify", "Count subgroups with their Schur multipliers"},
      {"automorphism", "Automorphism toolkit for the first generator"},
  };
  std::string file;
  std::string chosen;
  for (auto& c : file_commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("file", file, "Instance description file")->required();
    sub->callback([&chosen, name = std::string(c[0])] { chosen = name; });
  }

  int n = 0;
  std::string example_kind;
  std::string example_command = "check";
  CLI::App* example = app.add_subcommand("example", "Run a command on a built-in instance");
  example->add_option("kind", example_kind, "Built-in family")->required()->check(CLI::IsMember({"cyclic"}));
  example->add_option("command", example_command, "Command to run (default: check)");
  example->add_option("--n", n, "Number of vertices")->required();

  std::string demo_command = "automorphism";
  CLI::App* demo = app.add_subcommand("section7-demo", "Run a command on the two-vertex order-4 instance");
  demo->add_option("command", demo_command, "Command to run (default: automorphism)");

  int max = 0;
  CLI::App* hcell = app.add_subcommand("hcell-solve", "Enumerate two-element H-cell solutions");
  hcell->add_option("--max", max, "Largest parameter value")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (example->parsed()) {
    gsym_instance* raw = nullptr;
    gsym_status s = gsym_instance_cyclic(n, &raw);
    return run_instance(raw, s, example_command, opt);
  }
  if (demo->parsed()) {
    gsym_instance* raw = nullptr;
    gsym_status s = gsym_instance_two_cycle(&raw);
    return run_instance(raw, s, demo_command, opt);
  }
  if (hcell->parsed()) {
    char* text = nullptr;
    gsym_status s = gsym_hcell_solve(max, &text);
    return emit(s, text, opt);
  }
  return run_file(file, chosen, opt);
}
