/**
 * @file tensor.hpp
 * @brief Tensor products over the algebra and the monoidal structure of the
 * spread category: X (x) Y = sum over g of X (x)_A ^gY^g.
 *
 * A quotient X (x)_A Y is computed on the span of Peirce-compatible pairs
 * x (x) y (right vertex of x equal to left vertex of y) modulo the arrow
 * relations x.a (x) y - x (x) a.y.  The quotient basis consists of pairs, the
 * pivots of the relation space being taken at the largest pair indices, so
 * that pairs with short paths are kept.
 */
#pragma once

#include <memory>
#include <vector>

#include "gsym/bimodule.hpp"

namespace gsym {

/** @brief One side of a tensor product: dimension, vertex labels and arrow actions (after twisting). */
struct TensorSide {
  uint32_t dim = 0;
  std::vector<int> vert;
  /** Action of each nonzero arrow, in the order of Algebra::generators after the vertices. */
  std::vector<Mat> arrow;
};

/** @brief Explicit quotient X (x)_A Y with a projection from pairs. */
struct TensorQ {
  uint32_t xdim = 0, ydim = 0, dim = 0;
  std::vector<int32_t> pair_of;  // x * ydim + y -> pair index or -1
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  std::vector<SVec> proj;        // pair -> quotient coordinates
  std::vector<uint32_t> basis;   // quotient index -> pair index

  /** @brief Image of x (x) y for basis vectors. */
  const SVec& project_pair(uint32_t x, uint32_t y) const;
  /** @brief Image of xv (x) yv, optionally shifted by @p offset, accumulated into @p acc. */
  void project_into(const SVec& xv, const SVec& yv, const Scalar& c, uint32_t offset, Accum& acc) const;
  SVec project(const SVec& xv, const SVec& yv) const;
};

TensorQ tensor_quotient(const TensorSide& X, const TensorSide& Y);

/** @brief Side data of ^gM^g seen from the right (as the left factor of a tensor). */
TensorSide right_side(const Bimodule& M, uint32_t g);
/** @brief Side data of ^gM^g seen from the left (as the right factor of a tensor). */
TensorSide left_side(const Bimodule& M, uint32_t g);

/** @brief Layout of a tensor product object. */
struct TensorData {
  BimodPtr X, Y;
  /** One quotient per group element g: X (x)_A ^gY^g.  A plain tensor has a single summand. */
  std::vector<TensorQ> q;
  std::vector<uint32_t> offset;
  /** Group element of each summand (identity only, for plain tensors). */
  std::vector<uint32_t> elem;
};

/** @brief X (x) Y in the spread category (sum over all group elements). */
BimodPtr x_tensor(const BimodPtr& X, const BimodPtr& Y);
/** @brief Plain X (x)_A Y (a single summand). */
BimodPtr plain_tensor(const BimodPtr& X, const BimodPtr& Y);
/** @brief f (x) g between spread tensor products (the sources/targets are built when absent). */
XMor x_tensor_mor(const XMor& f, const XMor& g, BimodPtr src = nullptr, BimodPtr tgt = nullptr);

/** @brief M -> M (x) A, m -> m (x) 1. */
XMor unitor_right_in(const BimodPtr& M, const BimodPtr& MA);
/** @brief M (x) A -> M. */
XMor unitor_right_out(const BimodPtr& MA);
/** @brief M -> A (x) M, m -> 1 (x) m. */
XMor unitor_left_in(const BimodPtr& M, const BimodPtr& AM);
/** @brief A (x) M -> M. */
XMor unitor_left_out(const BimodPtr& AM);
/** @brief X (x) (Y (x) Z) -> (X (x) Y) (x) Z. */
XMor associator(const BimodPtr& X_YZ, const BimodPtr& XY_Z);
/** @brief (X (x) Y) (x) Z -> X (x) (Y (x) Z). */
XMor associator_inv(const BimodPtr& XY_Z, const BimodPtr& X_YZ);

/**
 * @brief The flip ^{g^-1}M^{g^-1} (x)_A N -> M (x)_A ^gN^g: both are the same
 * quotient space, and the identity map is a morphism with its only nonzero
 * component at g^-1.
 */
struct FlipData {
  BimodPtr source, target;
  XMor iso, inverse;
};
FlipData flip(const BimodPtr& M, const BimodPtr& N, uint32_t g);

}  // namespace gsym
