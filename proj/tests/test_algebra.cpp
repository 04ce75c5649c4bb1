/**
 * @file test_algebra.cpp
 * @brief Path algebras, radicals, Nakayama permutations and trace data.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsym/algebra.hpp"
#include "gsym/error.hpp"

using namespace gsym;

namespace {

void check_structure(const Algebra& A) {
  // Associativity on basis triples and the Peirce/unit laws.
  for (uint32_t u = 0; u < A.dim; ++u) {
    for (uint32_t v = 0; v < A.dim; ++v) {
      for (uint32_t w = 0; w < A.dim; ++w) {
        CHECK(A.mul(A.mul(svec_unit(u), svec_unit(v)), svec_unit(w)) ==
              A.mul(svec_unit(u), A.mul(svec_unit(v), svec_unit(w))));
      }
    }
    CHECK(A.mul(A.one(), svec_unit(u)) == svec_unit(u));
    CHECK(A.mul(svec_unit(u), A.one()) == svec_unit(u));
  }
  size_t peirce = 0;
  for (int i = 0; i < A.nvert; ++i) {
    for (int j = 0; j < A.nvert; ++j) peirce += A.corner_basis(i, j).size();
  }
  CHECK(peirce == A.dim);
}

std::string name_of(const Error& e) { return e.name(); }

}  // namespace

TEST_CASE("dimensions of presented algebras") {
  const FieldCtx* q = make_field(1);
  auto C2 = build_algebra(cyclic_presentation(q, 2));
  CHECK(C2->dim == 4);
  CHECK(C2->labels == std::vector<std::string>{"e1", "e2", "a1", "a2"});
  auto D = build_algebra(dual_numbers_presentation(q));
  CHECK(D->dim == 2);
  auto T = build_algebra(two_cycle_presentation(q));
  CHECK(T->dim == 4);
  CHECK(T->labels == std::vector<std::string>{"e1", "e2", "a", "b"});
  for (int n = 2; n <= 5; ++n) CHECK(build_algebra(cyclic_presentation(q, n))->dim == static_cast<uint32_t>(n * n));
  for (const auto& A : {C2, D, T, build_algebra(cyclic_presentation(q, 3)), build_algebra(a2_presentation(q))}) {
    check_structure(*A);
  }
}

TEST_CASE("presentation errors") {
  const FieldCtx* q = make_field(1);
  AlgebraPresentation p;
  p.field = q;
  p.vertices = 1;
  p.arrows = {{"x", 0, 0}};
  try {
    build_algebra(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(name_of(e) == "not-finite-dimensional");
  }
  p.arrows = {{"x", 0, 3}};
  CHECK_THROWS_AS(build_algebra(p), Error);
  // A non-monomial relation: x^2 = y^2 with xy = yx = 0 on two loops.
  AlgebraPresentation r;
  r.field = q;
  r.vertices = 1;
  r.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  r.relations = {{{Scalar(1), {0, 0}}, {Scalar(-1), {1, 1}}}, {{Scalar(1), {0, 1}}}, {{Scalar(1), {1, 0}}}};
  auto A = build_algebra(r);
  CHECK(A->dim == 4);
  CHECK(A->self_injective);
  CHECK(A->weakly_symmetric);
  check_structure(*A);
}

TEST_CASE("radical via the trace form") {
  const FieldCtx* q = make_field(1);
  auto D = build_algebra(dual_numbers_presentation(q));
  auto rd = radical_basis(D->dim, D->mult);
  REQUIRE(rd.size() == 1);
  CHECK(rd[0] == svec_unit(1));
  // Group algebra of Z/2: basis 1, g with g^2 = 1.
  std::vector<std::vector<SVec>> g2 = {{svec_unit(0), svec_unit(1)}, {svec_unit(1), svec_unit(0)}};
  CHECK(radical_basis(2, g2).empty());
  auto C2 = build_algebra(cyclic_presentation(q, 2));
  auto rc = radical_basis(C2->dim, C2->mult);
  CHECK(rc.size() == 2);
  for (const auto& v : rc) {
    for (const auto& e : v) CHECK(C2->basis[e.i].length() >= 1);
  }
  CHECK(radical_basis(0, {}).empty());
}

TEST_CASE("Nakayama permutations") {
  const FieldCtx* q = make_field(1);
  auto D = build_algebra(dual_numbers_presentation(q));
  CHECK(D->nu == std::vector<int>{0});
  CHECK(D->weakly_symmetric);
  auto C2 = build_algebra(cyclic_presentation(q, 2));
  CHECK(C2->nu == std::vector<int>{1, 0});
  CHECK_FALSE(C2->weakly_symmetric);
  auto C3 = build_algebra(cyclic_presentation(q, 3));
  // soc(A e_i) is S_{i-1}, so nu(e_i) = e_{i+1}.
  CHECK(C3->nu == std::vector<int>{1, 2, 0});
  auto H = build_algebra(a2_presentation(q));
  CHECK_FALSE(H->self_injective);
  try {
    nakayama(*H);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(name_of(e) == "not-self-injective");
  }
  for (const auto& A : {D, C2, C3}) {
    for (int e = 0; e < A->nvert; ++e) {
      CHECK(A->right_proj_basis(e).size() == A->left_proj_basis(A->nu[e]).size());
    }
  }
}

TEST_CASE("trace functional and dual elements") {
  const FieldCtx* q = make_field(1);
  auto D = build_algebra(dual_numbers_presentation(q));
  TraceData td = trace_dual(*D);
  CHECK(td.t(svec_unit(0)).is_zero());
  CHECK(td.t(svec_unit(1)).is_one());
  CHECK(td.dual[0] == svec_unit(1));
  CHECK(td.dual[1] == svec_unit(0));
  auto C2 = build_algebra(cyclic_presentation(q, 2));
  TraceData tc = trace_dual(*C2);
  CHECK(tc.t(svec_unit(2)).is_one());
  CHECK(tc.t(svec_unit(3)).is_one());
  CHECK(tc.t(svec_unit(0)).is_zero());
  // Adapted basis order is e1, a1, e2, a2; e_i* is the arrow ending at i.
  CHECK(tc.dual[0] == svec_unit(3));
  CHECK(tc.dual[2] == svec_unit(2));
  for (const auto& A : {D, C2, build_algebra(cyclic_presentation(q, 3)), build_algebra(two_cycle_presentation(q))}) {
    TraceData t = trace_dual(*A);
    for (size_t a = 0; a < t.adapted.size(); ++a) {
      for (size_t b = 0; b < t.adapted.size(); ++b) {
        CHECK(t.t(A->mul(t.adapted[b], t.dual[a])) == Scalar(a == b ? 1 : 0));
      }
    }
  }
  auto H = build_algebra(a2_presentation(q));
  CHECK_THROWS_AS(trace_dual(*H), Error);
}
