/**
 * @file completion.hpp
 * @brief Idempotent completion of the spread category: stabilizers,
 * character idempotents, endomorphism rings modulo radical, Krull-Schmidt
 * decomposition with explicit split pairs, and isomorphism tests.
 *
 * Decomposition works on "tops".  An object in the additive closure of the
 * projective bimodules A e_l (x) e_r A is free over A (x) A^op on generators
 * of grade (l, r); an object in the closure of the regular bimodules is free
 * over the blocks on central generators.  Every morphism induces a map of
 * tops, composition is compatible, and the top category is semisimple, so
 * multiplicities are read off from traces of top matrices and split pairs
 * are lifted from the top and corrected by a nilpotent Gram matrix.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gsym/bimodule.hpp"

namespace gsym {

/** @brief Object of the completion: a bimodule with an idempotent endomorphism. */
struct CompletedObject {
  BimodPtr M;
  XMor e;
};

CompletedObject whole(const BimodPtr& M);
/** @brief (M, e) (x) (N, f) = (M (x) N, e (x) f). */
CompletedObject tensor(const CompletedObject& X, const CompletedObject& Y);

/** @brief Stabilizer {g : M = ^gM^g} by plain isomorphism tests. */
Subgroup stabilizer(const BimodPtr& M);
/** @brief Stabilizer of the vertex pair (i, j) (the stabilizer of A e_i (x) e_j A). */
Subgroup pair_stabilizer(const GroupAction& G, int i, int j);
/** @brief Lexicographically smallest pair in the orbit of (i, j). */
std::pair<int, int> orbit_min(const GroupAction& G, int i, int j);

/**
 * @brief Witnesses M -> ^gM^g for g in the stabilizer (indexed like G; empty
 * matrices outside the stabilizer), built from the action on basis vectors
 * for regular, projective and simple bimodules and by hom-space search
 * otherwise.  Coherence w_g w_h = w_{gh} is asserted.
 * @throws Error "incoherent-witnesses".
 */
std::vector<Mat> witnesses(const BimodPtr& M, const Subgroup& H);

/**
 * @brief epsilon_chi: component g is chi(g)/|H| w_g for g in H = domain of chi.
 * @throws Error "bad-character" when chi is not defined on the stabilizer.
 */
XMor epsilon_idempotent(const BimodPtr& M, const Character& chi);

/** @brief Canonical name of an indecomposable object of the completion. */
struct Label {
  enum Kind { IdTwist = 0, Proj = 1 } kind = IdTwist;
  /** IdTwist: (block, -1).  Proj: orbit-minimal vertex pair (i, j). */
  int a = 0, b = -1;
  Character chi;

  std::string name(const GroupAction& G) const;
  friend bool operator==(const Label& x, const Label& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.chi == y.chi;
  }
  friend bool operator<(const Label& x, const Label& y);
};

/** @brief Canonical completed object of a label. */
CompletedObject label_object(const GroupActionPtr& act, const Label& L);
/** @brief All labels of a group action (identity twists per block, projective labels per orbit). */
std::vector<Label> all_labels(const GroupAction& G);

/** @brief Result of a decomposition. */
struct Decomposition {
  std::vector<std::pair<Label, int>> parts;
  /** Split pairs: for each summand copy, u: L -> X and v: X -> L with v u = eps_L. */
  struct Split {
    Label label;
    XMor u, v;
  };
  std::vector<Split> splits;
  bool certified = false;
  /** Sorted multiset rendering for comparisons. */
  std::map<std::string, int> multiset(const GroupAction& G) const;
};

struct DecomposeOptions {
  /** Build and verify split pairs (otherwise only the trace formula is used). */
  bool certify = true;
  /** Split labels in reverse order. */
  bool reverse = false;
};

/**
 * @brief Krull-Schmidt decomposition of a completed object.
 * @throws Error "unsupported-object" (not in the additive closure of
 * projective or regular bimodules), "field-not-splitting".
 */
Decomposition decompose(const CompletedObject& X, const DecomposeOptions& opt = {});

/** @brief Trace of the identity component (additive under direct sums). */
Scalar idempotent_rank(const XMor& e);

/** @brief dim End(X) / Rad End(X). @throws Error "field-not-splitting". */
int end_mod_rad_dim(const CompletedObject& X);

/** @brief Isomorphism of completed objects via their decompositions. */
bool iso_test(const CompletedObject& X, const CompletedObject& Y);

}  // namespace gsym
