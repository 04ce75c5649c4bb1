/**
 * @file bimodule.hpp
 * @brief Bimodules over a basic algebra, twisted hom spaces and morphisms of
 * the category whose hom spaces are spread over the acting group.
 *
 * Every basis vector of a bimodule lies in a single Peirce component
 * e_l M e_r; the pair (l, r) is recorded and used to prune linear systems.
 * A morphism M -> N is a tuple (f_g) indexed by group elements, f_g being a
 * bimodule map M -> ^gN^g where ^gN^g has the actions a.n.b = g(a) n g(b).
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsym/group.hpp"

namespace gsym {

struct TensorData;

/** @brief Provenance of a bimodule, used for canonical labels and witnesses. */
enum class BimodKind { Regular, Projective, Simple, Twist, Tensor, Other };

/** @brief Finite-dimensional A-A-bimodule with explicit actions. */
struct Bimodule {
  GroupActionPtr act;
  uint32_t dim = 0;
  /** left[u] = action of basis element u from the left; right[u] = m -> m.u. */
  std::vector<Mat> left, right;
  std::vector<int> lvert, rvert;
  BimodKind kind = BimodKind::Other;
  /** Regular: block (-1 = whole algebra).  Projective: (i, j) of A e_i (x) e_j A.  Simple: (vertex, vertex). */
  int i = -1, j = -1;
  std::string name;
  /** Layout data when the bimodule is a tensor product. */
  std::shared_ptr<const TensorData> tensor;

  const Algebra& alg() const { return *act->A; }
};

using BimodPtr = std::shared_ptr<const Bimodule>;

/**
 * @brief Builds a bimodule from the actions of the algebra generators
 * (vertices and arrows), extending multiplicatively to all basis paths.
 * Missing Peirce labels are detected from the vertex actions.
 */
BimodPtr make_bimodule(GroupActionPtr act, uint32_t dim, const std::vector<Mat>& left_gen,
                       const std::vector<Mat>& right_gen, BimodKind kind, int i, int j, std::string name,
                       std::shared_ptr<const TensorData> tensor = nullptr);

/** @brief Regular bimodule of block @p block, or of the whole algebra when block < 0. */
BimodPtr regular_bimodule(GroupActionPtr act, int block = -1);
/** @brief A e_i (x)_k e_j A (vertex indices from 0); basis = pairs of paths, first factor major. */
BimodPtr proj_bimodule(GroupActionPtr act, int i, int j);
/** @brief One-dimensional bimodule k with e_l acting on the left and e_r on the right. */
BimodPtr simple_bimodule(GroupActionPtr act, int l, int r);
/** @brief ^gM^h. */
BimodPtr twist(const BimodPtr& M, uint32_t g, uint32_t h);

/** @brief Checks that the actions are unital representations that commute; throws "internal-error". */
void check_bimodule(const Bimodule& M);

/** @brief Action of an arbitrary element from the left (resp. right). */
Mat left_action(const Bimodule& M, const SVec& a);
Mat right_action(const Bimodule& M, const SVec& a);

/** @brief Basis of Hom_{A-A}(M, ^gN^g) (bimodule maps), in reduced echelon order. */
std::vector<Mat> hom_basis(const Bimodule& M, const Bimodule& N, uint32_t g = 0);
/** @brief True when @p f is a bimodule map M -> ^gN^g. */
bool is_twisted_map(const Bimodule& M, const Bimodule& N, uint32_t g, const Mat& f);

/** @brief Morphism of the spread category: one matrix per group element. */
struct XMor {
  BimodPtr src, tgt;
  std::vector<Mat> comp;
};

XMor x_zero(const BimodPtr& M, const BimodPtr& N);
XMor x_identity(const BimodPtr& M);
/** @brief Tuple with a single nonzero component. */
XMor x_single(const BimodPtr& M, const BimodPtr& N, uint32_t g, Mat f);
/** @brief (g o f)_s = sum_h g_{s h^-1} f_h. */
XMor x_compose(const XMor& g, const XMor& f);
XMor x_add(const XMor& a, const XMor& b);
XMor x_sub(const XMor& a, const XMor& b);
XMor x_scale(const Scalar& s, const XMor& a);
bool x_equal(const XMor& a, const XMor& b);
bool x_is_zero(const XMor& a);
/** @brief True when every component satisfies the twisted intertwining law. */
bool x_valid(const XMor& f);
/** @brief Flattened coordinates (component-major) for linear algebra on morphism spaces. */
SVec x_flatten(const XMor& f);
XMor x_unflatten(const BimodPtr& M, const BimodPtr& N, const SVec& v);

/** @brief Per-component bases of Hom(M, N) in the spread category. */
struct XHomBasis {
  std::vector<std::vector<Mat>> comp;
  size_t total() const;
  /** @brief All basis elements as morphisms with a single nonzero component. */
  std::vector<XMor> morphisms(const BimodPtr& M, const BimodPtr& N) const;
};
XHomBasis x_hom_basis(const BimodPtr& M, const BimodPtr& N);

/** @brief Plain isomorphism test M = ^gN^g via an invertible hom-space element. */
bool plain_isomorphic(const Bimodule& M, const Bimodule& N, uint32_t g = 0, Mat* witness = nullptr);

}  // namespace gsym
