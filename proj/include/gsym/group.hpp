/**
 * @file group.hpp
 * @brief Finite abelian groups, their actions on algebras, subgroups and characters.
 *
 * A group is given by the orders (o_1, ..., o_r) of commuting generators and
 * is the direct product of the cyclic groups they generate.  Elements are
 * indexed in mixed radix, so index 0 is the identity.  Characters are stored
 * as exponents modulo the group exponent e: chi(g) = zeta_e^{value}.  The
 * dual group is indexed like the group itself: the character with exponent
 * vector c sends the i-th generator to zeta_{o_i}^{c_i}.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsym/algebra.hpp"

namespace gsym {

/** @brief Abstract finite abelian group Z/o_1 x ... x Z/o_r. */
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<int>{}) {}
  explicit AbelianGroup(std::vector<int> orders);

  uint32_t size() const { return size_; }
  const std::vector<int>& orders() const { return orders_; }
  int exponent() const { return exponent_; }
  const std::vector<int>& exps(uint32_t g) const { return exps_[g]; }
  uint32_t index(const std::vector<int>& e) const;
  uint32_t op(uint32_t a, uint32_t b) const { return mul_[a][b]; }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t power(uint32_t a, long long k) const;
  int order_of(uint32_t g) const;
  /** @brief Invariant factors d_1 | d_2 | ... (empty for the trivial group). */
  std::vector<int> invariant_factors() const;
  /** @brief Readable element name such as "g^2*h" given generator names. */
  std::string name(uint32_t g, const std::vector<std::string>& gens) const;

 private:
  std::vector<int> orders_;
  uint32_t size_ = 1;
  int exponent_ = 1;
  std::vector<std::vector<int>> exps_;
  std::vector<std::vector<uint32_t>> mul_;
  std::vector<uint32_t> inv_;
};

/** @brief Subgroup as a sorted list of element indices. */
using Subgroup = std::vector<uint32_t>;

/** @brief All subgroups, ordered by size and then lexicographically. */
std::vector<Subgroup> subgroups(const AbelianGroup& G);
/** @brief Closure of a set of elements. */
Subgroup generated_subgroup(const AbelianGroup& G, const std::vector<uint32_t>& gens);
/** @brief Invariant factors of a subgroup (computed from p-torsion counts). */
std::vector<int> subgroup_invariant_factors(const AbelianGroup& G, const Subgroup& H);

/** @brief Character of a subgroup H <= G. */
struct Character {
  Subgroup domain;
  /** Exponent of zeta_e for each element of domain (parallel array). */
  std::vector<int> val;
  int e = 1;
  /** Smallest index of a character of G restricting to this one. */
  uint32_t rep = 0;

  int value_exp(uint32_t g) const;
  Scalar value(const FieldCtx* f, uint32_t g) const { return root_of_unity(f, e, value_exp(g)); }
  bool is_trivial() const;
  friend bool operator==(const Character& a, const Character& b) { return a.domain == b.domain && a.val == b.val; }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
};

/** @brief The character of G with index @p c restricted to @p H. */
Character restrict_dual(const AbelianGroup& G, uint32_t c, const Subgroup& H);
/** @brief Restriction of a character to a subgroup of its domain. */
Character restrict(const AbelianGroup& G, const Character& chi, const Subgroup& H);
/** @brief All characters of @p H, ordered by their smallest representative in the dual of G. */
std::vector<Character> characters(const AbelianGroup& G, const Subgroup& H);
Character char_mul(const AbelianGroup& G, const Character& a, const Character& b);
Character char_inv(const AbelianGroup& G, const Character& a);
/** @brief Rendering "(c_1,...,c_r)" of the representative exponent vector. */
std::string char_name(const AbelianGroup& G, const Character& chi);

/** @brief Declared generator of a group action: order and images of the basis. */
struct GroupGenerator {
  std::string name;
  int order = 1;
  Mat image;
};

/** @brief Finite abelian group acting faithfully on an algebra by automorphisms. */
class GroupAction {
 public:
  AlgebraPtr A;
  AbelianGroup grp;
  std::vector<std::string> gen_names;
  /** Automorphism matrix of each element (column b = image of basis element b). */
  std::vector<Mat> mat;
  /** vperm[g][v] = w with g(e_v) = e_w. */
  std::vector<std::vector<int>> vperm;

  uint32_t size() const { return grp.size(); }
  SVec apply(uint32_t g, const SVec& a) const { return mat[g].apply(a); }
  std::string element_name(uint32_t g) const { return grp.name(g, gen_names); }
};

using GroupActionPtr = std::shared_ptr<const GroupAction>;

/**
 * @brief Validates generators and materializes the action.
 * @throws Error "not-automorphism", "not-abelian", "wrong-order",
 * "blocks-not-preserved", "idempotents-not-invariant", "not-faithful".
 */
GroupActionPtr build_group_action(AlgebraPtr A, const std::vector<GroupGenerator>& gens);

/** @brief Action of the trivial group. */
GroupActionPtr trivial_action(AlgebraPtr A);

/**
 * @brief Image matrix from basis-element images: unspecified generators are
 * fixed, unspecified longer paths are mapped multiplicatively.
 */
Mat generator_matrix(const Algebra& A, const std::vector<std::pair<uint32_t, SVec>>& images);

}  // namespace gsym
