/**
 * @file report.hpp
 * @brief Command dispatch producing deterministic machine-readable reports
 * (JSON with sorted keys; exact scalars rendered as literals).
 */
#pragma once

#include <string>
#include <vector>

#include "gsym/instances.hpp"

namespace gsym {

struct RunOptions {
  /** Certify every product of the multiplication table with explicit split pairs. */
  bool certify = false;
  /** Budget of the inner-witness scan. */
  int budget = 4096;
};

struct Report {
  /** JSON text (sorted keys, two-space indentation, trailing newline). */
  std::string json;
  /** False when a verification failed; @ref failure names the invariant. */
  bool ok = true;
  std::string failure;
};

/** @brief Commands taking an instance. */
const std::vector<std::string>& instance_commands();

/**
 * @brief Runs an instance command: check, catalogue, table, cells,
 * adjunctions, fiat, classify, automorphism.
 * @throws Error "unknown-command" and the module errors of the command.
 */
Report run_command(const Instance& inst, const std::string& command, const RunOptions& opt = {});

/** @brief Exhaustive two-element H-cell search up to @p max. */
Report hcell_solve_report(int max);

}  // namespace gsym
