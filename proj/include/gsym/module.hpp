/**
 * @file module.hpp
 * @brief One-sided modules and the actions of completed objects on them:
 * (M, e) acting on a left module V is the image of e (x) id on
 * the sum over g of ^gM^g (x)_A V, and symmetrically on right modules.
 */
#pragma once

#include <string>
#include <vector>

#include "gsym/bimodule.hpp"

namespace gsym {

/** @brief Finite-dimensional left (or right) module with a Peirce-homogeneous basis. */
struct Module {
  GroupActionPtr act;
  bool right = false;
  uint32_t dim = 0;
  /** Action of each algebra basis element. */
  std::vector<Mat> action;
  std::vector<int> vert;
  std::string name;
};

/** @brief Builds a module from generator actions (vertices, then nonzero arrows). */
Module make_module(GroupActionPtr act, bool right, uint32_t dim, const std::vector<Mat>& gen, std::string name);
/** @brief Left projective A e_i. */
Module proj_left_module(GroupActionPtr act, int i);
/** @brief Right projective e_j A. */
Module proj_right_module(GroupActionPtr act, int j);
/** @brief Simple left module at a vertex. */
Module simple_left_module(GroupActionPtr act, int i);

/** @brief (M, e) acting on a left module. */
Module act_left(const XMor& e, const Module& V);
/** @brief A right module acted on by (M, e). */
Module act_right(const Module& V, const XMor& e);

/** @brief Dimensions of e_v (V / rad(A) V) for every vertex. */
std::vector<uint32_t> top_multiplicities(const Module& V);
/** @brief True when V is projective (dimension equals that of the projective cover). */
bool is_projective(const Module& V);
/** @brief Isomorphism test for projective modules (equal tops); throws "unsupported-object" otherwise. */
bool projective_modules_isomorphic(const Module& V, const Module& W);

}  // namespace gsym
