/**
 * @file test_completion.cpp
 * @brief Stabilizers, character idempotents, endomorphism rings and
 * Krull-Schmidt decompositions in the idempotent completion.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsym/completion.hpp"
#include "gsym/error.hpp"
#include "gsym/instances.hpp"
#include "gsym/tensor.hpp"

using namespace gsym;

namespace {

Subgroup everything(const GroupAction& G) {
  Subgroup H;
  for (uint32_t g = 0; g < G.size(); ++g) H.push_back(g);
  return H;
}

std::vector<Instance> small_instances() {
  return {dual_numbers_instance(2), dual_numbers_instance(4), klein_instance(), cyclic_example(2), cyclic_example(3),
          two_cycle_instance()};
}

/** Independent oracle for an indecomposable completed object: End/Rad is one-dimensional. */
bool looks_indecomposable(const CompletedObject& X) { return end_mod_rad_dim(X) == 1; }

}  // namespace

TEST_CASE("stabilizers") {
  auto dn = dual_numbers_instance(2);
  CHECK(stabilizer(regular_bimodule(dn.act)) == everything(*dn.act));
  CHECK(stabilizer(proj_bimodule(dn.act, 0, 0)) == everything(*dn.act));
  auto c2 = cyclic_example(2);
  CHECK(stabilizer(proj_bimodule(c2.act, 0, 0)) == Subgroup{0});
  // The generic search agrees with the vertex-based stabilizer.
  for (auto inst : small_instances()) {
    const Algebra& A = *inst.A;
    for (int i = 0; i < A.nvert; ++i) {
      for (int j = 0; j < A.nvert; ++j) {
        BimodPtr M = proj_bimodule(inst.act, i, j);
        Subgroup generic;
        for (uint32_t g = 0; g < inst.act->size(); ++g)
          if (plain_isomorphic(*M, *M, g)) generic.push_back(g);
        CHECK(stabilizer(M) == generic);
      }
    }
  }
}

TEST_CASE("character idempotents are complete and orthogonal") {
  for (auto inst : small_instances()) {
    const GroupAction& G = *inst.act;
    std::vector<BimodPtr> objs{regular_bimodule(inst.act)};
    for (int i = 0; i < inst.A->nvert; ++i) objs.push_back(proj_bimodule(inst.act, 0, i));
    for (const BimodPtr& M : objs) {
      Subgroup H = stabilizer(M);
      auto chars = characters(G.grp, H);
      CHECK(chars.size() == H.size());
      XMor sum = x_zero(M, M);
      for (size_t a = 0; a < chars.size(); ++a) {
        XMor ea = epsilon_idempotent(M, chars[a]);
        CHECK(x_valid(ea));
        sum = x_add(sum, ea);
        for (size_t b = 0; b < chars.size(); ++b) {
          XMor p = x_compose(ea, epsilon_idempotent(M, chars[b]));
          if (a == b) CHECK(x_equal(p, ea));
          else CHECK(x_is_zero(p));
        }
      }
      CHECK(x_equal(sum, x_identity(M)));
    }
  }
}

TEST_CASE("character idempotent on the regular bimodule") {
  auto dn = dual_numbers_instance(2);
  BimodPtr A = regular_bimodule(dn.act);
  auto chars = characters(dn.act->grp, everything(*dn.act));
  XMor p = epsilon_idempotent(A, chars[1]);
  // Component g is chi(g)/|G| times the automorphism g.
  CHECK(p.comp[0] == Scalar(1, 2) * Mat::identity(2));
  CHECK(p.comp[1] == Scalar(-1, 2) * dn.act->mat[1]);
  // Trivial stabilizer and trivial character give the identity.
  auto c2 = cyclic_example(2);
  BimodPtr F = proj_bimodule(c2.act, 0, 0);
  CHECK(x_equal(epsilon_idempotent(F, characters(c2.act->grp, {0})[0]), x_identity(F)));
  // A character on the wrong subgroup is rejected.
  try {
    epsilon_idempotent(F, chars[0]);
    FAIL("expected bad-character");
  } catch (const Error& e) {
    CHECK(e.name() == "bad-character");
  }
}

TEST_CASE("endomorphism rings modulo the radical") {
  auto dn = dual_numbers_instance(2);
  BimodPtr A = regular_bimodule(dn.act);
  CHECK(x_hom_basis(A, A).total() == 4);
  CHECK(end_mod_rad_dim(whole(A)) == 2);
  for (auto inst : small_instances()) {
    std::vector<BimodPtr> objs;
    for (int b = 0; b < inst.A->nblocks; ++b) objs.push_back(regular_bimodule(inst.act, b));
    for (int i = 0; i < inst.A->nvert; ++i)
      for (int j = 0; j < inst.A->nvert; ++j) objs.push_back(proj_bimodule(inst.act, i, j));
    for (const BimodPtr& M : objs) {
      Subgroup H = stabilizer(M);
      CHECK(end_mod_rad_dim(whole(M)) == static_cast<int>(H.size()));
      for (auto& chi : characters(inst.act->grp, H)) CHECK(end_mod_rad_dim({M, epsilon_idempotent(M, chi)}) == 1);
    }
  }
}

TEST_CASE("labels") {
  auto c3 = cyclic_example(3);
  auto labels = all_labels(*c3.act);
  CHECK(labels.size() == 6);
  int proj = 0;
  for (auto& L : labels) {
    if (L.kind == Label::Proj) {
      ++proj;
      CHECK(L.a == 0);
      CHECK(L.chi.domain.size() == 1);
    }
  }
  CHECK(proj == 3);
  auto dn = dual_numbers_instance(2);
  CHECK(all_labels(*dn.act).size() == 4);
  for (auto& L : all_labels(*dn.act)) {
    auto X = label_object(dn.act, L);
    CHECK(looks_indecomposable(X));
    auto d = decompose(X);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].first == L);
    CHECK(d.parts[0].second == 1);
  }
  CHECK(orbit_min(*c3.act, 2, 1) == std::make_pair(0, 2));
}

TEST_CASE("decomposition of A (x) A over the dual numbers") {
  auto dn = dual_numbers_instance(2);
  auto d = decompose(whole(proj_bimodule(dn.act, 0, 0)));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].second == 1);
  CHECK(d.parts[1].second == 1);
  CHECK(d.parts[0].first.chi != d.parts[1].first.chi);
  CHECK(d.certified);
  // Split pairs compose to the label idempotents and reassemble the identity.
  XMor sum = x_zero(d.splits[0].u.tgt, d.splits[0].u.tgt);
  for (auto& s : d.splits) {
    auto L = label_object(dn.act, s.label);
    CHECK(x_equal(x_compose(s.v, s.u), L.e));
    CHECK(x_valid(s.u));
    CHECK(x_valid(s.v));
    sum = x_add(sum, x_compose(s.u, s.v));
  }
  CHECK(x_equal(sum, x_identity(d.splits[0].u.tgt)));
}

TEST_CASE("identity twists multiply like characters") {
  for (auto inst : {dual_numbers_instance(2), dual_numbers_instance(4), klein_instance()}) {
    const AbelianGroup& G = inst.act->grp;
    auto chars = characters(G, everything(*inst.act));
    for (auto& chi : chars) {
      for (auto& zeta : chars) {
        auto X = tensor(label_object(inst.act, {Label::IdTwist, 0, -1, chi}),
                        label_object(inst.act, {Label::IdTwist, 0, -1, zeta}));
        auto d = decompose(X);
        REQUIRE(d.parts.size() == 1);
        CHECK(d.parts[0].second == 1);
        CHECK(d.parts[0].first == Label{Label::IdTwist, 0, -1, char_mul(G, chi, zeta)});
      }
    }
  }
}

TEST_CASE("identity twists act on projective labels by restriction") {
  for (auto inst : {dual_numbers_instance(2), dual_numbers_instance(4), klein_instance(), cyclic_example(2)}) {
    const AbelianGroup& G = inst.act->grp;
    auto chars = characters(G, everything(*inst.act));
    for (auto& L : all_labels(*inst.act)) {
      if (L.kind != Label::Proj) continue;
      for (auto& zeta : chars) {
        auto X = tensor(label_object(inst.act, L), label_object(inst.act, {Label::IdTwist, 0, -1, zeta}));
        auto d = decompose(X);
        Label expect = L;
        expect.chi = char_mul(G, L.chi, restrict(G, zeta, L.chi.domain));
        REQUIRE(d.parts.size() == 1);
        CHECK(d.parts[0].first == expect);
        CHECK(d.parts[0].second == 1);
      }
    }
  }
}

TEST_CASE("decomposition is independent of the splitting order") {
  for (auto inst : {dual_numbers_instance(2), cyclic_example(2), cyclic_example(3), klein_instance()}) {
    auto labels = all_labels(*inst.act);
    for (auto& F : labels) {
      for (auto& H : labels) {
        auto X = tensor(label_object(inst.act, F), label_object(inst.act, H));
        auto a = decompose(X);
        DecomposeOptions rev;
        rev.reverse = true;
        auto b = decompose(X, rev);
        CHECK(a.parts == b.parts);
        CHECK(a.certified);
        CHECK(b.certified);
        // Independent oracle: End/Rad of a sum of m_i copies of pairwise
        // distinct indecomposables has dimension sum m_i^2 (kept to small
        // objects: the endomorphism ring grows quadratically).
        if (X.M->dim > 40) continue;
        int sq = 0;
        for (auto& [L, m] : a.parts) sq += m * m;
        CHECK(end_mod_rad_dim(X) == sq);
      }
    }
  }
}

TEST_CASE("cyclic n=2: F_i F_j = F_1 + F_2") {
  auto c2 = cyclic_example(2);
  auto labels = all_labels(*c2.act);
  for (auto& F : labels) {
    if (F.kind != Label::Proj) continue;
    for (auto& H : labels) {
      if (H.kind != Label::Proj) continue;
      auto d = decompose(tensor(label_object(c2.act, F), label_object(c2.act, H)));
      auto ms = d.multiset(*c2.act);
      CHECK(ms == std::map<std::string, int>{{"P(1,1)", 1}, {"P(1,2)", 1}});
    }
  }
}

TEST_CASE("isomorphism tests") {
  auto dn = dual_numbers_instance(2);
  auto chars = characters(dn.act->grp, everything(*dn.act));
  auto p0 = label_object(dn.act, {Label::IdTwist, 0, -1, chars[0]});
  auto p1 = label_object(dn.act, {Label::IdTwist, 0, -1, chars[1]});
  CHECK(iso_test(p0, p0));
  CHECK_FALSE(iso_test(p0, p1));
  // M = ^gM^g inside the spread category: identity at the component g^-1.
  auto c2 = cyclic_example(2);
  BimodPtr M = proj_bimodule(c2.act, 0, 1);
  BimodPtr T = twist(M, 1, 1);
  XMor f = x_single(M, T, c2.act->grp.inv(1), Mat::identity(M->dim));
  XMor g = x_single(T, M, 1, Mat::identity(M->dim));
  CHECK(x_valid(f));
  CHECK(x_valid(g));
  CHECK(x_equal(x_compose(g, f), x_identity(M)));
  CHECK(x_equal(x_compose(f, g), x_identity(T)));
  CHECK(iso_test(whole(M), whole(T)));
}

TEST_CASE("unsupported objects") {
  auto c2 = cyclic_example(2);
  try {
    decompose(whole(simple_bimodule(c2.act, 0, 0)));
    FAIL("expected unsupported-object");
  } catch (const Error& e) {
    CHECK(e.name() == "unsupported-object");
  }
}
