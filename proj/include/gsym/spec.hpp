/**
 * @file spec.hpp
 * @brief Line-oriented instance description files: parsing, emission and
 * construction of the algebra and group action.
 *
 * @code
 * [field]
 * m = 4
 * [quiver]
 * vertices = 2
 * arrow a: 1 -> 2
 * arrow b: 2 -> 1
 * [relations]
 * a*b
 * b*a
 * [group]
 * generator p order 4
 * maps e1 -> e2
 * maps e2 -> e1
 * maps a -> -1 * b
 * maps b -> a
 * @endcode
 *
 * Vertices are numbered from 1 in files.  A combination is a sum of terms
 * "sign? factor ('*' factor)*" where a factor is a rational "p/q", a root of
 * unity "zeta(k)^j", an arrow name or a vertex idempotent "e<i>".  Words are
 * read left to right as products in the algebra.  Lines starting with '#'
 * are comments.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsym/instances.hpp"

namespace gsym {

/** @brief Scalar coefficient: a rational times a product of roots of unity zeta(k)^j. */
struct ScalarExpr {
  Rational rational{1};
  std::vector<std::pair<int, long long>> roots;
};

/** @brief One term of a combination: coefficient times a word of factors (arrow names or "e<i>"). */
struct TermSpec {
  ScalarExpr coeff;
  std::vector<std::string> word;
};
using Combination = std::vector<TermSpec>;

struct ArrowSpec {
  std::string name;
  int src = 0;  // 0-based
  int tgt = 0;
};

struct MapSpec {
  std::string source;
  Combination image;
  int line = 0;
};

struct GeneratorSpec {
  std::string name;
  int order = 1;
  std::vector<MapSpec> maps;
};

/** @brief Parsed description of an instance. */
struct InstanceSpec {
  std::optional<int> m;
  int vertices = 0;
  std::vector<ArrowSpec> arrows;
  std::vector<Combination> relations;
  int truncate = 0;
  std::vector<GeneratorSpec> generators;
  /** Path-length bound for the finite-dimensionality check. */
  int max_length = 24;
  /** Search budget of the inner-witness scan. */
  int budget = 4096;
};

/** @throws Error "parse-error" with "line L, column C: ..." in the message. */
InstanceSpec parse_spec(const std::string& text);
/** @brief Canonical text of a spec (parse_spec(emit_spec(s)) builds the same instance). */
std::string emit_spec(const InstanceSpec& spec);
/** @brief Field conductor: the declared m, or the exponent of the group times the orders of the roots used. */
int spec_conductor(const InstanceSpec& spec);
/** @brief Builds the algebra and the group action (semantic errors come from the builders). */
Instance build_instance(const InstanceSpec& spec, std::string name = "file");

}  // namespace gsym
