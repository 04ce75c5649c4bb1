/**
 * @file instances.hpp
 * @brief Built-in algebras with group actions used by the tools and tests.
 */
#pragma once

#include <string>

#include "gsym/group.hpp"

namespace gsym {

/** @brief An algebra together with a group acting on it. */
struct Instance {
  AlgebraPtr A;
  GroupActionPtr act;
  std::string name;
};

/**
 * @brief Cyclic quiver with n vertices modulo paths of length n, with the
 * rotation e_i -> e_{i+1} generating Z/n.
 * @throws Error "invalid" when n < 2.
 */
Instance cyclic_example(int n, int conductor = 0);
/** @brief k[x]/(x^2) with Z/order acting by x -> zeta_order x. */
Instance dual_numbers_instance(int order);
/** @brief k[x,y]/(x,y)^2 with Z/2 x Z/2 acting by independent signs on x and y. */
Instance klein_instance();
/**
 * @brief 1 <-> 2 with arrows a: 1 -> 2, b: 2 -> 1, ab = ba = 0, and the
 * order-4 automorphism swapping the vertices with a -> -b, b -> a.
 */
Instance two_cycle_instance(int conductor = 4);
/** @brief Hereditary 1 -> 2 with the trivial group (not self-injective). */
Instance a2_instance();
/** @brief Any algebra with the trivial group. */
Instance trivial_instance(AlgebraPtr A, std::string name);

}  // namespace gsym
