/**
 * @file test_bimodx.cpp
 * @brief Bimodules, twisted hom spaces, spread composition, tensor products,
 * unitors, associators, flips and actions on modules.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsym/error.hpp"
#include "gsym/instances.hpp"
#include "gsym/module.hpp"
#include "gsym/tensor.hpp"

using namespace gsym;

namespace {

XMor random_mor(const BimodPtr& M, const BimodPtr& N, std::mt19937& rng) {
  XMor f = x_zero(M, N);
  auto H = x_hom_basis(M, N);
  std::uniform_int_distribution<int> d(-2, 2);
  for (uint32_t g = 0; g < H.comp.size(); ++g) {
    for (const auto& b : H.comp[g]) f.comp[g] += Scalar(d(rng)) * b;
  }
  return f;
}

/** Independent oracle: dimension of the space of bimodule maps by brute force over all matrices. */
size_t brute_hom_dim(const Bimodule& M, const Bimodule& N, uint32_t g) {
  const GroupAction& G = *M.act;
  const Algebra& A = *G.A;
  const uint32_t n = N.dim * M.dim;
  Echelon ech(n);
  auto var = [&](uint32_t r, uint32_t c) { return c * N.dim + r; };
  for (uint32_t u = 0; u < A.dim; ++u) {
    for (int side = 0; side < 2; ++side) {
      Mat am = side ? M.right[u] : M.left[u];
      Mat an = side ? right_action(N, G.mat[g].col(u)) : left_action(N, G.mat[g].col(u));
      for (uint32_t r = 0; r < N.dim; ++r) {
        for (uint32_t c = 0; c < M.dim; ++c) {
          // (F am)(r, c) - (an F)(r, c) = 0
          Accum acc(n);
          for (const auto& e : am.col(c)) acc.add(var(r, e.i), e.v);
          for (uint32_t s = 0; s < N.dim; ++s) {
            Scalar v = an.at(r, s);
            if (!v.is_zero()) acc.add(var(s, c), -v);
          }
          SVec row = acc.take();
          if (!row.empty()) ech.insert(row);
        }
      }
    }
  }
  return n - ech.rank();
}

}  // namespace

TEST_CASE("projective and regular bimodules") {
  Instance c2 = cyclic_example(2);
  auto P11 = proj_bimodule(c2.act, 0, 0);
  CHECK(P11->dim == 4);
  check_bimodule(*P11);
  auto R = regular_bimodule(c2.act);
  CHECK(R->dim == 4);
  check_bimodule(*R);
  Instance d = dual_numbers_instance(2);
  auto AA = proj_bimodule(d.act, 0, 0);
  CHECK(AA->dim == 4);
  check_bimodule(*AA);
  CHECK_THROWS_AS(proj_bimodule(c2.act, 0, 5), Error);
}

TEST_CASE("twists") {
  Instance c2 = cyclic_example(2);
  auto P11 = proj_bimodule(c2.act, 0, 0);
  auto P22 = proj_bimodule(c2.act, 1, 1);
  CHECK(twist(P11, 0, 0) == P11);
  auto T = twist(P11, 1, 1);
  check_bimodule(*T);
  CHECK(plain_isomorphic(*T, *P22));
  CHECK_FALSE(plain_isomorphic(*T, *P11));
  // ^g(^hM^h)^g has the actions of ^{gh}M^{gh}.
  Instance c3 = cyclic_example(3);
  auto M = proj_bimodule(c3.act, 0, 1);
  auto TT = twist(twist(M, 1, 1), 1, 1);
  auto T2 = twist(M, 2, 2);
  for (uint32_t u = 0; u < c3.A->dim; ++u) {
    CHECK(TT->left[u] == T2->left[u]);
    CHECK(TT->right[u] == T2->right[u]);
  }
}

TEST_CASE("hom spaces agree with a brute-force solve") {
  Instance d = dual_numbers_instance(2);
  auto R = regular_bimodule(d.act);
  CHECK(hom_basis(*R, *R).size() == 2);
  auto E = x_hom_basis(R, R);
  CHECK(E.comp[0].size() == 2);
  CHECK(E.comp[1].size() == 2);
  CHECK(E.total() == 4);
  Instance c2 = cyclic_example(2);
  std::vector<BimodPtr> objs = {regular_bimodule(c2.act), proj_bimodule(c2.act, 0, 0), proj_bimodule(c2.act, 0, 1),
                                proj_bimodule(c2.act, 1, 1)};
  for (const auto& M : objs) {
    for (const auto& N : objs) {
      for (uint32_t g = 0; g < 2; ++g) {
        auto H = hom_basis(*M, *N, g);
        CHECK(H.size() == brute_hom_dim(*M, *N, g));
        for (const auto& f : H) CHECK(is_twisted_map(*M, *N, g, f));
      }
    }
  }
  auto Z = simple_bimodule(c2.act, 0, 0);
  CHECK(hom_basis(*objs[1], *Z).size() == 1);
  Instance t = trivial_instance(c2.A, "c2-trivial");
  auto P = proj_bimodule(t.act, 0, 0);
  CHECK(x_hom_basis(P, P).total() == hom_basis(*P, *P).size());
}

TEST_CASE("spread composition is associative and unital") {
  std::mt19937 rng(11);
  Instance k = klein_instance();
  auto R = regular_bimodule(k.act);
  auto P = proj_bimodule(k.act, 0, 0);
  for (int t = 0; t < 5; ++t) {
    XMor f = random_mor(R, P, rng), g = random_mor(P, P, rng), h = random_mor(P, R, rng);
    CHECK(x_equal(x_compose(h, x_compose(g, f)), x_compose(x_compose(h, g), f)));
    CHECK(x_equal(x_compose(x_identity(P), f), f));
    CHECK(x_equal(x_compose(f, x_identity(R)), f));
    CHECK(x_valid(x_compose(g, f)));
  }
}

TEST_CASE("tensor products, unitors and associators") {
  std::mt19937 rng(5);
  for (Instance inst : {cyclic_example(2), dual_numbers_instance(2), two_cycle_instance()}) {
    auto R = regular_bimodule(inst.act);
    const uint32_t n = inst.act->size();
    auto RR = x_tensor(R, R);
    CHECK(RR->dim == n * inst.A->dim);
    check_bimodule(*RR);
    auto P = proj_bimodule(inst.act, 0, inst.A->nvert - 1);
    auto PR = x_tensor(P, R), RP = x_tensor(R, P);
    check_bimodule(*PR);
    XMor ri = unitor_right_in(P, PR), ro = unitor_right_out(PR);
    XMor li = unitor_left_in(P, RP), lo = unitor_left_out(RP);
    for (const XMor* f : {&ri, &ro, &li, &lo}) CHECK(x_valid(*f));
    CHECK(x_equal(x_compose(ro, ri), x_identity(P)));
    CHECK(x_equal(x_compose(lo, li), x_identity(P)));
    auto Q = proj_bimodule(inst.act, inst.A->nvert - 1, 0);
    auto PQ = x_tensor(P, Q);
    check_bimodule(*PQ);
    auto P_QR = x_tensor(P, x_tensor(Q, R));
    auto PQ_R = x_tensor(PQ, R);
    XMor a = associator(P_QR, PQ_R), ai = associator_inv(PQ_R, P_QR);
    CHECK(x_valid(a));
    CHECK(x_valid(ai));
    CHECK(x_equal(x_compose(ai, a), x_identity(P_QR)));
    CHECK(x_equal(x_compose(a, ai), x_identity(PQ_R)));
    // Naturality of the associator in the first variable.
    XMor f = random_mor(P, P, rng);
    XMor lhs = x_compose(a, x_tensor_mor(f, x_identity(P_QR->tensor->Y), P_QR, P_QR));
    XMor rhs = x_compose(x_tensor_mor(x_tensor_mor(f, x_identity(Q), PQ, PQ), x_identity(R), PQ_R, PQ_R), a);
    CHECK(x_equal(lhs, rhs));
  }
}

TEST_CASE("interchange law and idempotents under tensor") {
  std::mt19937 rng(3);
  Instance inst = two_cycle_instance();
  auto R = regular_bimodule(inst.act);
  auto P = proj_bimodule(inst.act, 0, 1);
  auto Q = proj_bimodule(inst.act, 1, 1);
  auto RP = x_tensor(R, P), PQ = x_tensor(P, Q), QR = x_tensor(Q, R);
  for (int t = 0; t < 5; ++t) {
    XMor f = random_mor(R, P, rng), h = random_mor(P, Q, rng);
    XMor g = random_mor(P, Q, rng), l = random_mor(Q, R, rng);
    XMor fg = x_tensor_mor(f, g, RP, PQ);
    XMor hl = x_tensor_mor(h, l, PQ, QR);
    CHECK(x_valid(fg));
    XMor left = x_tensor_mor(x_compose(h, f), x_compose(l, g), RP, QR);
    CHECK(x_equal(left, x_compose(hl, fg)));
  }
  auto I = x_identity(P);
  CHECK(x_equal(x_tensor_mor(I, I, x_tensor(P, P), x_tensor(P, P)), x_identity(x_tensor(P, P))));
}

TEST_CASE("flip isomorphisms") {
  Instance inst = two_cycle_instance();
  auto P = proj_bimodule(inst.act, 0, 1);
  auto Q = proj_bimodule(inst.act, 1, 1);
  for (uint32_t g = 0; g < inst.act->size(); ++g) {
    FlipData fd = flip(P, Q, g);
    CHECK(fd.source->dim == fd.target->dim);
    CHECK(x_valid(fd.iso));
    CHECK(x_valid(fd.inverse));
    CHECK(x_equal(x_compose(fd.inverse, fd.iso), x_identity(fd.source)));
    CHECK(x_equal(x_compose(fd.iso, fd.inverse), x_identity(fd.target)));
  }
  auto total = x_tensor(P, Q);
  uint32_t flipped = 0;
  for (uint32_t g = 0; g < inst.act->size(); ++g) flipped += flip(P, Q, g).source->dim;
  CHECK(total->dim == flipped);
}

TEST_CASE("actions on modules") {
  Instance c2 = cyclic_example(2);
  auto R = regular_bimodule(c2.act);
  for (int i = 0; i < 2; ++i) {
    Module V = proj_left_module(c2.act, i);
    Module W = act_left(x_identity(R), V);
    CHECK(W.dim == 2 * V.dim);
    CHECK(is_projective(W));
  }
  Instance t = trivial_instance(cyclic_example(3).A, "c3");
  auto P = proj_bimodule(t.act, 0, 1);
  for (int v = 0; v < 3; ++v) {
    Module V = proj_left_module(t.act, v);
    Module W = act_left(x_identity(P), V);
    // dim (A e_1 (x) e_2 A) (x)_A V = dim A e_1 * dim e_2 V.
    CHECK(W.dim == 3 * t.A->corner_basis(1, v).size());
    Module Vr = proj_right_module(t.act, v);
    Module Wr = act_right(Vr, x_identity(P));
    CHECK(Wr.dim == t.A->corner_basis(v, 0).size() * 3);
  }
}
