/**
 * @file test_twocat.cpp
 * @brief Catalogue, multiplication table, cells, adjunctions, fiatness,
 * classification counts, the H-cell solver, the automorphism toolkit and the
 * adjoined-point device.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "gsym/error.hpp"
#include "gsym/instances.hpp"
#include "gsym/twocat.hpp"
#include "support/oracles.hpp"

using namespace gsym;

namespace {

Instance trivial_cyclic(int n) {
  return trivial_instance(build_algebra(cyclic_presentation(make_field(1), n)), "cyclic-trivial");
}

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

template <class F>
void expect_error(const std::string& name, F&& f) {
  try {
    f();
    FAIL("expected " << name);
  } catch (const Error& e) {
    CHECK(e.name() == name);
  }
}


}  // namespace

TEST_CASE("catalogue sizes and objects") {
  CHECK(catalogue(cyclic_example(2).act).size() == 4);
  CHECK(catalogue(dual_numbers_instance(2).act).size() == 4);
  CHECK(catalogue(cyclic_example(3).act).size() == 6);
  for (int k = 2; k <= 3; ++k) CHECK(catalogue(trivial_cyclic(k).act).size() == static_cast<size_t>(1 + k * k));
  for (auto inst : {cyclic_example(2), dual_numbers_instance(2), klein_instance(), two_cycle_instance()}) {
    auto cat = catalogue(inst.act);
    int twists = 0;
    for (size_t k = 0; k < cat.size(); ++k) {
      check_bimodule(*cat.objects[k].M);
      CHECK(x_valid(cat.objects[k].e));
      CHECK(x_equal(x_compose(cat.objects[k].e, cat.objects[k].e), cat.objects[k].e));
      twists += cat.is_identity_twist(k);
    }
    CHECK(twists == static_cast<int>(inst.act->size()) * inst.A->nblocks);
  }
  // A simple block is rejected.
  AlgebraPresentation p;
  p.field = make_field(1);
  p.vertices = 1;
  auto point = trivial_instance(build_algebra(p), "point");
  expect_error("unsupported-algebra", [&] { catalogue(point.act); });
  // The hereditary control instance has no simple block.
  CHECK(catalogue(a2_instance().act).size() == 1 + 4);
}

TEST_CASE("multiplication tables") {
  for (auto inst : {cyclic_example(2), cyclic_example(3), dual_numbers_instance(2), dual_numbers_instance(4),
                    klein_instance(), two_cycle_instance(), trivial_cyclic(2)}) {
    auto cat = catalogue(inst.act);
    auto t = mult_table(cat);
    CHECK(t.closed_form_checks > 0);
    const size_t n = cat.size();
    // Associativity of multiplicity matrices.
    for (size_t f = 0; f < n; ++f) {
      for (size_t g = 0; g < n; ++g) {
        for (size_t h = 0; h < n; ++h) {
          std::vector<int> l(n, 0), r(n, 0);
          for (size_t m = 0; m < n; ++m) {
            for (size_t k = 0; k < n; ++k) {
              l[k] += t.mult[f][g][m] * t.mult[m][h][k];
              r[k] += t.mult[g][h][m] * t.mult[f][m][k];
            }
          }
          CHECK(l == r);
        }
      }
    }
  }
  // Cyclic n = 2: F_i F_j = F_1 + F_2.
  auto cat = catalogue(cyclic_example(2).act);
  auto t = mult_table(cat);
  for (size_t f = 0; f < cat.size(); ++f) {
    for (size_t h = 0; h < cat.size(); ++h) {
      if (cat.is_identity_twist(f) || cat.is_identity_twist(h)) continue;
      for (size_t k = 0; k < cat.size(); ++k) CHECK(t.mult[f][h][k] == (cat.is_identity_twist(k) ? 0 : 1));
    }
  }
  // The certified table agrees with the trace-formula table.
  TableOptions cert;
  cert.certify = true;
  CHECK(mult_table(cat, cert).mult == t.mult);
}

TEST_CASE("cells") {
  {
    auto cat = catalogue(cyclic_example(2).act);
    auto cs = cells(cat, mult_table(cat));
    CHECK(cs.expected_shape);
    REQUIRE(cs.two_sided.size() == 2);
    CHECK(cs.two_sided[0] == std::vector<int>{0, 1});
    CHECK(cs.two_sided[1] == std::vector<int>{2, 3});
  }
  {
    auto cat = catalogue(dual_numbers_instance(2).act);
    auto cs = cells(cat, mult_table(cat));
    REQUIRE(cs.two_sided.size() == 2);
    CHECK(cs.two_sided[0].size() == 2);
    CHECK(cs.two_sided[1].size() == 2);
  }
  // Trivial group: J0 left cells collect the labels with a common right vertex
  // (composition H o F = H (x) F only changes the left factor).
  for (int k = 2; k <= 3; ++k) {
    auto cat = catalogue(trivial_cyclic(k).act);
    auto cs = cells(cat, mult_table(cat));
    CHECK(cs.expected_shape);
    int j0_left = 0, j0_right = 0;
    for (auto& c : cs.left) {
      if (cat.is_identity_twist(c[0])) continue;
      ++j0_left;
      CHECK(c.size() == static_cast<size_t>(k));
      for (int m : c) CHECK(cat.labels[m].b == cat.labels[c[0]].b);
    }
    for (auto& c : cs.right) {
      if (cat.is_identity_twist(c[0])) continue;
      ++j0_right;
      for (int m : c) CHECK(cat.labels[m].a == cat.labels[c[0]].a);
    }
    CHECK(j0_left == k);
    CHECK(j0_right == k);
  }
  // Two-sided cells are unions of left cells and of right cells.
  for (auto inst : {cyclic_example(3), two_cycle_instance(), trivial_cyclic(3)}) {
    auto cat = catalogue(inst.act);
    auto cs = cells(cat, mult_table(cat));
    CHECK(cs.expected_shape);
    for (auto* part : {&cs.left, &cs.right}) {
      for (auto& c : *part) {
        int j = cs.cell_of(cs.two_sided, c[0]);
        for (int m : c) CHECK(cs.cell_of(cs.two_sided, m) == j);
      }
    }
  }
}

TEST_CASE("adjunctions satisfy the zig-zag identities") {
  for (auto inst : {cyclic_example(2), cyclic_example(3), dual_numbers_instance(2), two_cycle_instance()}) {
    auto cat = catalogue(inst.act);
    for (size_t k = 0; k < cat.size(); ++k) {
      auto d = adjunction(cat, k);
      CHECK(x_valid(d.eta));
      CHECK(x_valid(d.eps));
      CHECK(verify_zigzag(d));
    }
  }
}

TEST_CASE("right adjoints") {
  for (int n : {2, 3, 4}) {
    auto cat = catalogue(cyclic_example(n).act);
    auto fr = fiat_report(cat);
    REQUIRE(fr.star.size() == cat.size());
    const AbelianGroup& G = cat.act->grp;
    for (size_t k = 0; k < cat.size(); ++k) {
      const Label& L = cat.labels[k];
      const Label& R = cat.labels[fr.star[k]];
      if (L.kind == Label::IdTwist) {
        CHECK(R == Label{Label::IdTwist, L.a, -1, char_inv(G, L.chi)});
      } else {
        // F_i = A e_1 (x) e_i A is sent to F_{n+1-i}.
        CHECK(R.kind == Label::Proj);
        CHECK(R.a == 0);
        CHECK(R.b == n - 1 - L.b);
      }
    }
  }
}

TEST_CASE("adjunction isomorphism of hom spaces") {
  // Independent oracle: Hom(F X, Y) = Hom(X, F* Y) for all catalogue X, Y.
  for (auto inst : {dual_numbers_instance(2), cyclic_example(2)}) {
    auto cat = catalogue(inst.act);
    auto fr = fiat_report(cat);
    for (size_t f = 0; f < cat.size(); ++f) {
      const auto& F = cat.objects[f];
      const auto& Fs = cat.objects[fr.star[f]];
      for (size_t x = 0; x < cat.size(); ++x) {
        for (size_t y = 0; y < cat.size(); ++y) {
          int lhs = oracle::hom_dim(tensor(F, cat.objects[x]), cat.objects[y]);
          int rhs = oracle::hom_dim(cat.objects[x], tensor(Fs, cat.objects[y]));
          CHECK(lhs == rhs);
        }
      }
    }
  }
  // On the dual numbers the trace form is odd under x -> -x, so the right
  // adjoint of (A (x) A, eps_chi) carries the other character.
  auto dn = dual_numbers_instance(2);
  auto cat = catalogue(dn.act);
  auto fr = fiat_report(cat);
  for (size_t k = 0; k < cat.size(); ++k) {
    if (cat.is_identity_twist(k)) {
      CHECK(fr.star[k] == static_cast<int>(k));
    } else {
      CHECK(cat.labels[fr.star[k]].kind == Label::Proj);
      CHECK(cat.labels[fr.star[k]].chi != cat.labels[k].chi);
    }
  }
}

TEST_CASE("perturbed units break the zig-zag identities") {
  for (auto inst : {cyclic_example(2), dual_numbers_instance(2)}) {
    auto cat = catalogue(inst.act);
    for (size_t k = 0; k < cat.size(); ++k) {
      auto d = adjunction(cat, k);
      REQUIRE(verify_zigzag(d));
      int tried = 0;
      for (size_t s = 0; s < d.eta.comp.size(); ++s) {
        for (uint32_t c = 0; c < d.eta.comp[s].cols() && tried < 24; ++c) {
          for (size_t e = 0; e < d.eta.comp[s].col(c).size() && tried < 24; ++e) {
            auto bad = d;
            bad.eta.comp[s].col(c)[e].v *= Scalar(2);
            CHECK_FALSE(verify_zigzag(bad));
            ++tried;
          }
        }
      }
      CHECK(tried > 0);
      // Scaling a whole component by 2.
      for (size_t s = 0; s < d.eta.comp.size(); ++s) {
        if (d.eta.comp[s].is_zero()) continue;
        auto bad = d;
        bad.eta.comp[s] = Scalar(2) * bad.eta.comp[s];
        CHECK_FALSE(verify_zigzag(bad));
        break;
      }
    }
  }
}

TEST_CASE("fiat reports") {
  for (auto inst : {cyclic_example(2), cyclic_example(3), cyclic_example(4), dual_numbers_instance(2),
                    two_cycle_instance()}) {
    auto cat = catalogue(inst.act);
    auto t = mult_table(cat);
    auto fr = fiat_report(cat, &t);
    CHECK(fr.weakly_fiat);
    CHECK(fr.fiat);
    REQUIRE(fr.star_antihomomorphism.has_value());
    CHECK(*fr.star_antihomomorphism);
  }
  CHECK_FALSE(cyclic_example(3).A->weakly_symmetric);
  auto a2 = a2_instance();
  auto cat = catalogue(a2.act);
  auto fr = fiat_report(cat);
  CHECK_FALSE(fr.weakly_fiat);
  CHECK_FALSE(fr.fiat);
  CHECK(fr.star.empty());
  expect_error("no-adjunction", [&] { adjunction(cat, 0); });
}

TEST_CASE("Schur multipliers") {
  CHECK(schur_order({}) == 1);
  CHECK(schur_order({7}) == 1);
  CHECK(schur_order({2, 2}) == 2);
  CHECK(schur_order({2, 4}) == 2);
  CHECK(schur_order({2, 2, 2}) == 8);
  // Oracle A (cocycle enumeration) on every subgroup of order <= 4.
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
    AbelianGroup G(orders);
    for (auto& K : subgroups(G)) {
      if (K.size() > 4) continue;
      CHECK(oracle::schur_by_cocycles(oracle::subgroup_table(G, K)) ==
            schur_order(subgroup_invariant_factors(G, K)));
    }
  }
  // Oracle B (cochain elimination) on every subgroup of every abelian group of order <= 8.
  for (auto orders : std::vector<std::vector<int>>{
           {1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
    AbelianGroup G(orders);
    for (auto& K : subgroups(G)) {
      long long expect = oracle::schur_by_elimination(oracle::subgroup_table(G, K));
      CHECK(expect == schur_order(subgroup_invariant_factors(G, K)));
    }
  }
}

TEST_CASE("classification counts") {
  for (int n = 2; n <= 12; ++n) CHECK(classify_count(AbelianGroup({n})).total == divisor_count(n));
  auto klein = classify_count(AbelianGroup({2, 2}));
  CHECK(klein.total == 6);
  REQUIRE(klein.entries.size() == 5);
  std::vector<long long> schur;
  for (auto& e : klein.entries) schur.push_back(e.schur);
  CHECK(schur == std::vector<long long>{1, 1, 1, 1, 2});
  CHECK(classify_count(AbelianGroup()).total == 1);
  CHECK(classify_count(cyclic_example(2).act->grp).total == 2);
}

TEST_CASE("two-element H-cell solver") {
  auto r = hcell_solve(10);
  REQUIRE(r.solutions.size() == 10);
  for (int n = 1; n <= 10; ++n) CHECK(r.solutions[n - 1] == HCellSolution{n, n, n, n});
  CHECK(r.all_diagonal);
  CHECK(r.y_zero_solutions == 0);
  auto one = hcell_solve(1);
  REQUIRE(one.solutions.size() == 1);
  CHECK(one.solutions[0] == HCellSolution{1, 1, 1, 1});
  CHECK(hcell_solve(5).solutions.size() == 5);
  expect_error("invalid", [] { hcell_solve(0); });
}

TEST_CASE("automorphism toolkit on the two-cycle algebra") {
  auto inst = two_cycle_instance();
  const Algebra& A = *inst.A;
  const Mat& phi = inst.act->mat[inst.act->grp.index({1})];
  auto r = automorphism_toolkit(A, phi);
  CHECK(r.order_phi == 4);
  SVec e1 = svec_unit(A.vertex_index[0]), e2 = svec_unit(A.vertex_index[1]);
  CHECK(r.a == svec_axpy(e1, Scalar(-1), e2));
  CHECK(r.phi2_is_conjugation);
  CHECK(r.t == svec_scale(A.one(), Scalar(-1)));
  CHECK(r.t_central);
  CHECK(r.a_inv == r.a);
  const Scalar i = root_of_unity(A.field, 4, 1);
  SVec b = svec_axpy(svec_scale(A.one(), (Scalar(1) + i) / Scalar(2)), (Scalar(1) - i) / Scalar(2), r.a);
  CHECK(r.b == b);
  CHECK(A.mul(b, b) == r.a_inv);
  CHECK(r.b_squared);
  CHECK(r.fourth_power_identity);
  CHECK((r.order_sigma_phi == 1 || r.order_sigma_phi == 2 || r.order_sigma_phi == 4));
  // The identity automorphism.
  auto id = automorphism_toolkit(A, Mat::identity(A.dim));
  CHECK(id.order_phi == 1);
  CHECK(id.a == A.one());
  CHECK(id.b == A.one());
  CHECK(id.order_sigma_phi == 1);
  // Over Q the square root of -1 is missing.
  AlgebraPtr Q = build_algebra(two_cycle_presentation(make_field(1)));
  {
    uint32_t f1 = Q->vertex_index[0], f2 = Q->vertex_index[1];
    uint32_t al = static_cast<uint32_t>(Q->arrow_index[0]), be = static_cast<uint32_t>(Q->arrow_index[1]);
    Mat psi = generator_matrix(*Q, {{f1, svec_unit(f2)}, {f2, svec_unit(f1)}, {al, {{be, Scalar(-1)}}}, {be, svec_unit(al)}});
    expect_error("needs-larger-conductor", [&] { automorphism_toolkit(*Q, psi); });
  }
  // A rotation of the cyclic quiver has a non-inner square.
  auto c3 = cyclic_example(3);
  expect_error("not-inner", [&] { automorphism_toolkit(*c3.A, c3.act->mat[c3.act->grp.index({1})]); });
  // A linear map that is not multiplicative.
  expect_error("not-automorphism", [&] { automorphism_toolkit(A, Scalar(2) * Mat::identity(A.dim)); });
}

TEST_CASE("H-cell realization") {
  for (auto inst : {two_cycle_instance(), cyclic_example(2)}) {
    auto cat = catalogue(inst.act);
    auto t = mult_table(cat);
    auto fr = fiat_report(cat, &t);
    auto r = hcell_realization_check(cat, t, fr);
    CHECK(r.applicable);
    CHECK(r.realized);
    CHECK(r.n == 1);
    CHECK(r.F != r.G);
    CHECK(fr.star[r.F] == r.G);
    CHECK(r.cartan == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
  }
  auto dn = dual_numbers_instance(2);
  auto cat = catalogue(dn.act);
  auto t = mult_table(cat);
  auto r = hcell_realization_check(cat, t, fiat_report(cat, &t));
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.realized);
}

TEST_CASE("adjoining a point") {
  for (auto inst : {dual_numbers_instance(2), cyclic_example(2), two_cycle_instance(), klein_instance()}) {
    auto B = adjoin_point(inst.act);
    const Algebra& Bk = *B->A;
    CHECK(Bk.dim == inst.A->dim + 1);
    CHECK(Bk.nvert == inst.A->nvert + 1);
    CHECK(Bk.nblocks == inst.A->nblocks + 1);
    CHECK(B->size() == inst.act->size());
    const int star = Bk.nvert - 1;
    for (uint32_t g = 0; g < B->size(); ++g) CHECK(B->vperm[g][star] == star);
    // (A f (x) e A, eps_chi) (x) (S(e, *), eps) = sum of (A f (x) k_*, eps_xi) over xi restricting to chi.
    for (int f = 0; f < inst.A->nvert; ++f) {
      for (int e = 0; e < inst.A->nvert; ++e) {
        BimodPtr M = proj_bimodule(B, f, e);
        BimodPtr S = simple_bimodule(B, e, star);
        CompletedObject SO{S, epsilon_idempotent(S, characters(B->grp, stabilizer(S))[0])};
        const Subgroup Gfe = stabilizer(M);
        for (auto& chi : characters(B->grp, Gfe)) {
          auto d = decompose(tensor({M, epsilon_idempotent(M, chi)}, SO));
          auto om = orbit_min(*B, f, star);
          std::vector<std::pair<Label, int>> expect;
          for (auto& xi : characters(B->grp, pair_stabilizer(*B, om.first, om.second)))
            if (restrict(B->grp, xi, Gfe) == chi) expect.push_back({Label{Label::Proj, om.first, om.second, xi}, 1});
          CHECK(d.parts == expect);
        }
      }
    }
  }
}
