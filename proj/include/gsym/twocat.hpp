/**
 * @file twocat.hpp
 * @brief The 2-category of symmetric projective bimodules: catalogue of
 * indecomposable 1-morphisms, multiplication table, cells, adjunctions,
 * fiatness, classification counts and the two-element H-cell toolkit.
 *
 * Composition of 1-morphisms is the tensor product: the product F G means
 * "apply G, then F" and is realized by F (x) G.  Hence G' lies in the left
 * cell preorder above F when G' is a summand of H (x) F for some H.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsym/completion.hpp"

namespace gsym {

/** @brief Indecomposable 1-morphisms with their completed objects. */
struct Catalogue {
  GroupActionPtr act;
  std::vector<Label> labels;
  std::vector<CompletedObject> objects;
  /** Blocks at which each 1-morphism starts (source) and ends (target). */
  std::vector<int> src_block, tgt_block;

  size_t size() const { return labels.size(); }
  int index_of(const Label& L) const;
  std::string name(size_t k) const { return labels[k].name(*act); }
  bool is_identity_twist(size_t k) const { return labels[k].kind == Label::IdTwist; }
};

/** @throws Error "unsupported-algebra" when some block of A is simple. */
Catalogue catalogue(const GroupActionPtr& act);

/** @brief mult[F][H][K] = multiplicity of K in F (x) H. */
struct MultTable {
  std::vector<std::vector<std::vector<int>>> mult;
  /** Number of entries checked against the closed forms for identity twists. */
  int closed_form_checks = 0;
};

struct TableOptions {
  /** Build split pairs for every product (slower, fully certified). */
  bool certify = false;
};

/** @throws Error "internal-error" when a closed-form entry disagrees with the decomposition. */
MultTable mult_table(const Catalogue& cat, const TableOptions& opt = {});

/** @brief Left, right and two-sided preorders and cells. */
struct CellStructure {
  /** geq_L[G][F]: G is reachable from F by left multiplication (G >=_L F). */
  std::vector<std::vector<bool>> geq_L, geq_R, geq_J;
  std::vector<std::vector<int>> left, right, two_sided;
  /** Two-sided cell count equals blocks + 1, identity cells have |G| elements, J0 is one cell. */
  bool expected_shape = false;
  int cell_of(const std::vector<std::vector<int>>& part, int k) const;
};

CellStructure cells(const Catalogue& cat, const MultTable& table);

/** @brief Unit and counit of an adjunction (F, G) in the completion. */
struct AdjunctionDatum {
  int left = -1, right = -1;
  /** F = (M, p) and G = (N, q), q the mate of p. */
  CompletedObject F, G;
  /** The unit object (A, pi_trivial). */
  CompletedObject unit;
  /** eta: A -> N (x) M, eps: M (x) N -> A. */
  XMor eta, eps;
  BimodPtr NM, MN;
};

/** @throws Error "no-adjunction" when A is not self-injective. */
AdjunctionDatum adjunction(const Catalogue& cat, size_t k);
/** @brief Unit and counit are morphisms and both zig-zag composites equal the identities of F and G. */
bool verify_zigzag(const AdjunctionDatum& d);

struct FiatReport {
  bool self_injective = false;
  bool weakly_symmetric = false;
  bool zigzags_ok = false;
  bool weakly_fiat = false;
  bool fiat = false;
  /** star[k] = index of the right adjoint of label k (empty when not weakly fiat). */
  std::vector<int> star;
  /** Star reverses products (checked when a table is supplied). */
  std::optional<bool> star_antihomomorphism;
  std::string reason;
};

FiatReport fiat_report(const Catalogue& cat, const MultTable* table = nullptr);

/** @brief prod_{i<j} gcd(d_i, d_j). */
long long schur_order(const std::vector<int>& invariant_factors);

struct ClassifyEntry {
  Subgroup K;
  std::vector<int> factors;
  long long schur = 1;
};
struct ClassifyReport {
  std::vector<ClassifyEntry> entries;
  long long total = 0;
};
/** @brief Pairs (K, omega) with K <= G and omega in H^2(K, k^*), counted per subgroup. */
ClassifyReport classify_count(const AbelianGroup& G);

/** @brief Multiplicities FF = xF + yG, FG = bF + bG, GF = cF + cG, GG = yF + xG. */
struct HCellSolution {
  int x, y, b, c;
  friend bool operator==(const HCellSolution& p, const HCellSolution& q) {
    return p.x == q.x && p.y == q.y && p.b == q.b && p.c == q.c;
  }
};
struct HCellReport {
  std::vector<HCellSolution> solutions;
  /** Number of candidates with y = 0 surviving all constraints (always zero). */
  int y_zero_solutions = 0;
  bool all_diagonal = false;
};
/** @brief Exhaustive search over [0, N]^4 subject to star symmetry, cell and associativity constraints. */
HCellReport hcell_solve(int N);

/** @brief Inner-automorphism witness and square-root data for an automorphism. */
struct AutomorphismReport {
  int order_phi = 0;
  /** phi^2(x) = a x a^-1. */
  SVec a, a_inv;
  bool phi2_is_conjugation = false;
  /** t = phi(a^-1) a and its centrality. */
  SVec t;
  bool t_central = false;
  /** b: polynomial in a^-1 with b^2 = a^-1. */
  SVec b;
  bool b_squared = false;
  int order_sigma_phi = 0;
  bool fourth_power_identity = false;
};

/**
 * @throws Error "not-inner" (no invertible witness within the budget),
 * "needs-larger-conductor" (square root not in the field), "not-automorphism".
 */
AutomorphismReport automorphism_toolkit(const Algebra& A, const Mat& phi, int budget = 4096);

struct RealizationReport {
  bool applicable = false;
  bool realized = false;
  int n = 0;
  int F = -1, G = -1;
  std::vector<std::vector<int>> cartan;
  std::string reason;
};
/** @brief Looks for F, G with F* = G != F and FF = FG = GF = GG = n (F + G), and compares the Cartan matrix. */
RealizationReport hcell_realization_check(const Catalogue& cat, const MultTable& table, const FiatReport& fiat);

/** @brief B = A x k with the group acting trivially on the new vertex (the last vertex of B). */
GroupActionPtr adjoin_point(const GroupActionPtr& act);

}  // namespace gsym
