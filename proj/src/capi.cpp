/**
 * @file capi.cpp
 * @brief extern "C" wrapper over the C++ core.
 */
#include "gsym.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gsym/error.hpp"
#include "gsym/instances.hpp"
#include "gsym/report.hpp"
#include "gsym/spec.hpp"

struct gsym_instance {
  gsym::Instance inst;
  /** Budget used when a call passes 0 (the file's option, else the library default). */
  int budget = 4096;
};

namespace {

thread_local std::string g_error_name;
thread_local std::string g_error;

gsym_status set_error(gsym_status s, std::string name, std::string message) {
  g_error_name = std::move(name);
  g_error = std::move(message);
  return s;
}

gsym_status clear() { return set_error(GSYM_OK, "", ""); }

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/** Runs @p body translating exceptions into status codes. */
template <class F>
gsym_status guarded(F&& body) {
  try {
    return body();
  } catch (const gsym::Error& e) {
    gsym_status s = e.name() == "parse-error" ? GSYM_ERR_PARSE
                    : e.name() == "unknown-command" ? GSYM_ERR_INVALID_ARGUMENT
                                                    : GSYM_ERR_MODULE;
    return set_error(s, e.name(), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GSYM_ERR_INTERNAL, "out-of-memory", "out of memory");
  } catch (const std::exception& e) {
    return set_error(GSYM_ERR_INTERNAL, "internal", e.what());
  }
}

gsym_status wrap(gsym::Instance inst, gsym_instance** out, int budget = 4096) {
  *out = new gsym_instance{std::move(inst), budget};
  return clear();
}

}  // namespace

extern "C" {

gsym_status gsym_instance_parse(const char* text, gsym_instance** out) {
  if (!text || !out) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *out = nullptr;
  return guarded([&] {
    gsym::InstanceSpec spec = gsym::parse_spec(text);
    return wrap(gsym::build_instance(spec), out, spec.budget);
  });
}

gsym_status gsym_instance_cyclic(int n, gsym_instance** out) {
  if (!out) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *out = nullptr;
  return guarded([&] { return wrap(gsym::cyclic_example(n), out); });
}

gsym_status gsym_instance_two_cycle(gsym_instance** out) {
  if (!out) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *out = nullptr;
  return guarded([&] { return wrap(gsym::two_cycle_instance(), out); });
}

void gsym_instance_free(gsym_instance* inst) { delete inst; }

size_t gsym_instance_dimension(const gsym_instance* inst) { return inst ? inst->inst.A->dim : 0; }

int gsym_instance_vertices(const gsym_instance* inst) { return inst ? inst->inst.A->nvert : 0; }

size_t gsym_instance_group_order(const gsym_instance* inst) { return inst ? inst->inst.act->size() : 0; }

gsym_status gsym_run(const gsym_instance* inst, const char* command, int certify, int budget, char** json_out) {
  if (!inst || !command || !json_out)
    return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *json_out = nullptr;
  if (budget < 0) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "budget must not be negative");
  return guarded([&] {
    gsym::RunOptions opt;
    opt.certify = certify != 0;
    opt.budget = budget == 0 ? inst->budget : budget;
    gsym::Report r = gsym::run_command(inst->inst, command, opt);
    *json_out = dup(r.json);
    if (!r.ok) return set_error(GSYM_ERR_VERIFICATION_FAILED, r.failure, "verification failed: " + r.failure);
    return clear();
  });
}

gsym_status gsym_hcell_solve(int max, char** json_out) {
  if (!json_out) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *json_out = nullptr;
  return guarded([&] {
    gsym::Report r = gsym::hcell_solve_report(max);
    *json_out = dup(r.json);
    if (!r.ok) return set_error(GSYM_ERR_VERIFICATION_FAILED, r.failure, "verification failed: " + r.failure);
    return clear();
  });
}

gsym_status gsym_spec_canonical(const char* text, char** text_out) {
  if (!text || !text_out) return set_error(GSYM_ERR_INVALID_ARGUMENT, "invalid-argument", "null pointer");
  *text_out = nullptr;
  return guarded([&] {
    *text_out = dup(gsym::emit_spec(gsym::parse_spec(text)));
    return clear();
  });
}

const char* gsym_last_error_name(void) { return g_error_name.c_str(); }

const char* gsym_last_error(void) { return g_error.c_str(); }

void gsym_string_free(char* s) { std::free(s); }

const char* gsym_version(void) { return "1.0.0"; }

}  // extern "C"
