/**
 * @file algebra.hpp
 * @brief Basic algebras presented by quivers with relations.
 *
 * Conventions: products compose like functions.  An arrow a: s -> t is the
 * element e_t a e_s, so the product a*b is nonzero only when source(a) =
 * target(b), and the left projective A e_i is spanned by the paths starting
 * at vertex i.  Vertices are numbered from 0 internally and printed from 1.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsym/linalg.hpp"

namespace gsym {

/** @brief Quiver arrow. */
struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

/** @brief Monomial of a relation: coefficient times the product word[0]*word[1]*... of arrows. */
struct PathTerm {
  Scalar coeff;
  std::vector<int> word;
};

/** @brief Quiver with relations (see build_algebra). */
struct AlgebraPresentation {
  const FieldCtx* field = nullptr;
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  /** All paths of length >= truncate are zero; 0 means no truncation. */
  int truncate = 0;
  /** Largest path length explored when checking finite dimensionality. */
  int max_length = 24;
};

/** @brief A path: product word[0]*...*word[k-1]; empty word = vertex idempotent. */
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
};

/** @brief Finite-dimensional basic algebra with a path basis. */
class Algebra {
 public:
  const FieldCtx* field = nullptr;
  int nvert = 0;
  std::vector<Arrow> arrows;
  uint32_t dim = 0;
  std::vector<Path> basis;
  std::vector<std::string> labels;
  /** mult[u][v] = product of basis elements u and v. */
  std::vector<std::vector<SVec>> mult;
  /** Basis index of each vertex idempotent. */
  std::vector<uint32_t> vertex_index;
  /** Basis index of each arrow, or -1 when the arrow is zero in A. */
  std::vector<int> arrow_index;
  /** Basis indices of the algebra generators (vertices and nonzero arrows). */
  std::vector<uint32_t> generators;
  std::vector<int> block_of_vertex;
  int nblocks = 0;
  /** Left/right regular representations: L[u] v = u v, R[u] v = v u. */
  std::vector<Mat> L, R;

  // Nakayama data (filled by build_algebra).
  bool self_injective = false;
  bool weakly_symmetric = false;
  std::vector<int> nu;
  std::string nakayama_failure;
  /** Presentation the algebra was built from. */
  AlgebraPresentation presentation;

  int src(uint32_t b) const { return basis[b].src; }
  int tgt(uint32_t b) const { return basis[b].tgt; }
  SVec one() const;
  SVec mul(const SVec& a, const SVec& b) const;
  /** @brief Unit of block @p b (sum of its vertex idempotents). */
  SVec block_unit(int b) const;
  /** @brief Dimension of the block of index @p b. */
  uint32_t block_dim(int b) const;
  /** @brief Basis indices of the paths in A e_i (left projective). */
  std::vector<uint32_t> left_proj_basis(int i) const;
  /** @brief Basis indices of the paths in e_j A (right projective). */
  std::vector<uint32_t> right_proj_basis(int j) const;
  /** @brief Basis indices of e_i A e_j. */
  std::vector<uint32_t> corner_basis(int i, int j) const;
  /** @brief Human-readable rendering of an element. */
  std::string render(const SVec& a) const;
  std::string vertex_name(int v) const { return "e" + std::to_string(v + 1); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/**
 * @brief Builds the algebra of a presentation.
 * @throws Error "bad-presentation", "not-finite-dimensional".
 */
AlgebraPtr build_algebra(const AlgebraPresentation& p);

/**
 * @brief Jacobson radical of an algebra given by structure constants
 * (mult[u][v] in the given basis), as the kernel of the trace form.
 */
std::vector<SVec> radical_basis(uint32_t dim, const std::vector<std::vector<SVec>>& mult);

/**
 * @brief Nakayama permutation (nu[e] = f with soc(Af) = top(Ae)).
 * @throws Error "not-self-injective".
 */
std::vector<int> nakayama(const Algebra& A);

/** @brief Trace functional and dual elements of a self-injective algebra. */
struct TraceData {
  /** Adapted basis elements (as vectors in the path basis). */
  std::vector<SVec> adapted;
  /** t as a linear functional: t(a) = sum_k functional[k] * a_k. */
  SVec functional;
  /** dual[k] = (adapted[k])*. */
  std::vector<SVec> dual;
  Scalar t(const SVec& a) const;
};

/** @throws Error "no-adjunction" when A is not self-injective, "internal-error" when singular. */
TraceData trace_dual(const Algebra& A);

/** @brief A = k[x]/(x^2). */
AlgebraPresentation dual_numbers_presentation(const FieldCtx* f);
/** @brief One vertex, loops x,y with all paths of length 2 zero. */
AlgebraPresentation two_loop_presentation(const FieldCtx* f);
/** @brief Cyclic quiver with n vertices modulo paths of length n. */
AlgebraPresentation cyclic_presentation(const FieldCtx* f, int n);
/** @brief 1 <-> 2 with both length-2 paths zero. */
AlgebraPresentation two_cycle_presentation(const FieldCtx* f);
/** @brief Hereditary A2: 1 -> 2, no relations. */
AlgebraPresentation a2_presentation(const FieldCtx* f);

}  // namespace gsym
