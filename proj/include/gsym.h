/**
 * @file gsym.h
 * @brief C interface of the library: opaque instance handles, status codes
 * and JSON reports.
 *
 * Every function returning gsym_status records a readable message for the
 * calling thread, available through gsym_last_error() and
 * gsym_last_error_name().  Strings handed out by the library are released
 * with gsym_string_free().
 */
#ifndef GSYM_H
#define GSYM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GSYM_API __declspec(dllexport)
#else
#define GSYM_API __attribute__((visibility("default")))
#endif

typedef enum gsym_status {
  GSYM_OK = 0,
  /** Malformed instance description (message carries line and column). */
  GSYM_ERR_PARSE = 1,
  /** Null pointer, unknown command or out-of-range argument. */
  GSYM_ERR_INVALID_ARGUMENT = 2,
  /** Named error raised while building or computing (see gsym_last_error_name). */
  GSYM_ERR_MODULE = 3,
  /** The command ran but one of its verifications failed; the report is still returned. */
  GSYM_ERR_VERIFICATION_FAILED = 4,
  GSYM_ERR_INTERNAL = 5
} gsym_status;

/** @brief An algebra together with a finite abelian group acting on it. */
typedef struct gsym_instance gsym_instance;

/** @brief Parses and builds an instance from description text. */
GSYM_API gsym_status gsym_instance_parse(const char* text, gsym_instance** out);
/** @brief Built-in cyclic quiver with n vertices and the rotation action. */
GSYM_API gsym_status gsym_instance_cyclic(int n, gsym_instance** out);
/** @brief Built-in two-vertex instance with the order-4 automorphism. */
GSYM_API gsym_status gsym_instance_two_cycle(gsym_instance** out);
GSYM_API void gsym_instance_free(gsym_instance* inst);

GSYM_API size_t gsym_instance_dimension(const gsym_instance* inst);
GSYM_API int gsym_instance_vertices(const gsym_instance* inst);
GSYM_API size_t gsym_instance_group_order(const gsym_instance* inst);

/**
 * @brief Runs an instance command (check, catalogue, table, cells,
 * adjunctions, fiat, classify, automorphism) and returns its JSON report.
 *
 * A budget of 0 selects the instance default (the file's budget option, or
 * 4096).  On GSYM_OK and GSYM_ERR_VERIFICATION_FAILED *json_out receives the report;
 * otherwise it is set to NULL.
 */
GSYM_API gsym_status gsym_run(const gsym_instance* inst, const char* command, int certify, int budget,
                              char** json_out);
/** @brief Exhaustive two-element H-cell search with parameters up to max. */
GSYM_API gsym_status gsym_hcell_solve(int max, char** json_out);
/** @brief Canonical text of a description (parse then emit). */
GSYM_API gsym_status gsym_spec_canonical(const char* text, char** text_out);

/** @brief Name of the failed invariant of the last GSYM_ERR_VERIFICATION_FAILED, or of the module error. */
GSYM_API const char* gsym_last_error_name(void);
GSYM_API const char* gsym_last_error(void);
GSYM_API void gsym_string_free(char* s);
GSYM_API const char* gsym_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GSYM_H */
