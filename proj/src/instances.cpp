/**
 * @file instances.cpp
 * @brief Built-in algebras with group actions.
 */
#include "gsym/instances.hpp"

#include "gsym/error.hpp"

namespace gsym {

Instance cyclic_example(int n, int conductor) {
  require(n >= 2, "invalid", "cyclic example needs n >= 2");
  const FieldCtx* f = make_field(conductor > 0 ? conductor : n);
  require(f->m % n == 0, "root-not-in-field", "conductor must be a multiple of n");
  AlgebraPtr A = build_algebra(cyclic_presentation(f, n));
  std::vector<std::pair<uint32_t, SVec>> img;
  for (int v = 0; v < n; ++v) img.push_back({A->vertex_index[v], svec_unit(A->vertex_index[(v + 1) % n])});
  for (int a = 0; a < n; ++a) {
    img.push_back({static_cast<uint32_t>(A->arrow_index[a]), svec_unit(static_cast<uint32_t>(A->arrow_index[(a + 1) % n]))});
  }
  GroupGenerator g{"r", n, generator_matrix(*A, img)};
  return {A, build_group_action(A, {g}), "cyclic" + std::to_string(n)};
}

Instance dual_numbers_instance(int order) {
  const FieldCtx* f = make_field(order);
  AlgebraPtr A = build_algebra(dual_numbers_presentation(f));
  std::vector<GroupGenerator> gens;
  if (order > 1) {
    uint32_t x = static_cast<uint32_t>(A->arrow_index[0]);
    gens.push_back({"s", order, generator_matrix(*A, {{x, {{x, root_of_unity(f, order, 1)}}}})});
  }
  return {A, build_group_action(A, gens), "dual-numbers-Z" + std::to_string(order)};
}

Instance klein_instance() {
  const FieldCtx* f = make_field(2);
  AlgebraPtr A = build_algebra(two_loop_presentation(f));
  uint32_t x = static_cast<uint32_t>(A->arrow_index[0]), y = static_cast<uint32_t>(A->arrow_index[1]);
  GroupGenerator s{"s", 2, generator_matrix(*A, {{x, {{x, Scalar(-1)}}}})};
  GroupGenerator t{"t", 2, generator_matrix(*A, {{y, {{y, Scalar(-1)}}}})};
  return {A, build_group_action(A, {s, t}), "two-loops-Z2xZ2"};
}

Instance two_cycle_instance(int conductor) {
  const FieldCtx* f = make_field(conductor);
  require(f->m % 4 == 0, "root-not-in-field", "this instance needs a conductor divisible by 4");
  AlgebraPtr A = build_algebra(two_cycle_presentation(f));
  uint32_t e1 = A->vertex_index[0], e2 = A->vertex_index[1];
  uint32_t a = static_cast<uint32_t>(A->arrow_index[0]), b = static_cast<uint32_t>(A->arrow_index[1]);
  GroupGenerator phi{"p", 4,
                     generator_matrix(*A, {{e1, svec_unit(e2)}, {e2, svec_unit(e1)}, {a, {{b, Scalar(-1)}}}, {b, svec_unit(a)}})};
  return {A, build_group_action(A, {phi}), "two-cycle-Z4"};
}

Instance a2_instance() {
  AlgebraPtr A = build_algebra(a2_presentation(make_field(1)));
  return {A, trivial_action(A), "hereditary-A2"};
}

Instance trivial_instance(AlgebraPtr A, std::string name) {
  GroupActionPtr act = trivial_action(A);
  return {std::move(A), std::move(act), std::move(name)};
}

}  // namespace gsym
