/**
 * @file twocat.cpp
 * @brief Catalogue, multiplication table, cells, adjunctions, fiatness,
 * classification counts, the H-cell solver and the automorphism toolkit.
 */
#include "gsym/twocat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gsym/error.hpp"
#include "gsym/tensor.hpp"

namespace gsym {

namespace {

Subgroup whole_group(const AbelianGroup& G) {
  Subgroup H(G.size());
  std::iota(H.begin(), H.end(), 0u);
  return H;
}

/** Equivalence classes of the symmetric part of a preorder, ordered by smallest member. */
std::vector<std::vector<int>> classes(const std::vector<std::vector<bool>>& geq) {
  const int n = static_cast<int>(geq.size());
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<int> c;
    for (int b = a; b < n; ++b) {
      if (!seen[b] && geq[a][b] && geq[b][a]) {
        seen[b] = 1;
        c.push_back(b);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

void transitive_closure(std::vector<std::vector<bool>>& r) {
  const size_t n = r.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
}

/** Summand of a spread tensor product sitting at the identity element. */
size_t identity_summand(const TensorData& td) {
  for (size_t s = 0; s < td.elem.size(); ++s)
    if (td.elem[s] == 0) return s;
  throw Error("internal-error", "tensor product without an identity summand");
}

/** Coordinates of a basis element restricted to a sub-basis (positions pos). */
SVec restrict_to(const SVec& v, const std::vector<int>& pos) {
  SVec out;
  for (const auto& e : v) {
    require(pos[e.i] >= 0, "internal-error", "element outside the expected corner");
    out.push_back({static_cast<uint32_t>(pos[e.i]), e.v});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  return out;
}

std::vector<int> positions(const Algebra& A, const std::vector<uint32_t>& sub) {
  std::vector<int> pos(A.dim, -1);
  for (size_t k = 0; k < sub.size(); ++k) pos[sub[k]] = static_cast<int>(k);
  return pos;
}

std::vector<uint32_t> block_basis(const Algebra& A, int b) {
  std::vector<uint32_t> sub;
  for (uint32_t u = 0; u < A.dim; ++u)
    if (A.block_of_vertex[A.src(u)] == b) sub.push_back(u);
  return sub;
}

/** Coordinates of x (x) y in A e_i (x) e_j A (first factor major). */
SVec pure_tensor(const Algebra& A, int i, int j, const SVec& x, const SVec& y) {
  auto P = A.left_proj_basis(i), Q = A.right_proj_basis(j);
  auto pp = positions(A, P), qp = positions(A, Q);
  SVec xs = restrict_to(x, pp), ys = restrict_to(y, qp);
  const uint32_t nq = static_cast<uint32_t>(Q.size());
  SVec out;
  for (const auto& a : xs)
    for (const auto& b : ys) out.push_back({a.i * nq + b.i, a.v * b.v});
  return out;
}

/** Left multiplication matrix of an element. */
Mat left_mult(const Algebra& A, const SVec& a) {
  Mat m(A.dim, A.dim);
  for (const auto& e : a) m += e.v * A.L[e.i];
  return m;
}

Mat right_mult(const Algebra& A, const SVec& a) {
  Mat m(A.dim, A.dim);
  for (const auto& e : a) m += e.v * A.R[e.i];
  return m;
}

SVec element_inverse(const Algebra& A, const SVec& a) {
  Mat L = left_mult(A, a);
  if (!invertible(L)) return {};
  return inverse(L).apply(A.one());
}

bool is_invertible_element(const Algebra& A, const SVec& a) { return invertible(left_mult(A, a)); }

}  // namespace

// ---------------------------------------------------------------- catalogue

int Catalogue::index_of(const Label& L) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == L) return static_cast<int>(k);
  return -1;
}

Catalogue catalogue(const GroupActionPtr& act) {
  const Algebra& A = *act->A;
  for (int b = 0; b < A.nblocks; ++b)
    require(A.block_dim(b) > 1, "unsupported-algebra", "block " + std::to_string(b + 1) + " of the algebra is simple");
  Catalogue cat;
  cat.act = act;
  cat.labels = all_labels(*act);
  for (const Label& L : cat.labels) {
    cat.objects.push_back(label_object(act, L));
    if (L.kind == Label::IdTwist) {
      cat.src_block.push_back(L.a);
      cat.tgt_block.push_back(L.a);
    } else {
      // M (x)_A - sends modules over the block of j to modules over the block of i.
      cat.src_block.push_back(A.block_of_vertex[L.b]);
      cat.tgt_block.push_back(A.block_of_vertex[L.a]);
    }
  }
  return cat;
}

// ---------------------------------------------------------------- multiplication table

MultTable mult_table(const Catalogue& cat, const TableOptions& opt) {
  const size_t n = cat.size();
  const AbelianGroup& G = cat.act->grp;
  MultTable t;
  t.mult.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  DecomposeOptions dopt;
  dopt.certify = opt.certify;
  for (size_t f = 0; f < n; ++f) {
    for (size_t h = 0; h < n; ++h) {
      auto d = decompose(tensor(cat.objects[f], cat.objects[h]), dopt);
      for (auto& [L, m] : d.parts) {
        int k = cat.index_of(L);
        require(k >= 0, "internal-error", "summand outside the catalogue");
        t.mult[f][h][k] += m;
      }
      // Closed forms whenever an identity twist is involved.
      const Label& F = cat.labels[f];
      const Label& H = cat.labels[h];
      std::vector<int> expect(n, 0);
      bool closed = true;
      if (F.kind == Label::IdTwist && H.kind == Label::IdTwist) {
        if (F.a == H.a) expect[cat.index_of({Label::IdTwist, F.a, -1, char_mul(G, F.chi, H.chi)})] = 1;
      } else if (F.kind == Label::Proj && H.kind == Label::IdTwist) {
        if (cat.src_block[f] == H.a) {
          Label E = F;
          E.chi = char_mul(G, F.chi, restrict(G, H.chi, F.chi.domain));
          expect[cat.index_of(E)] = 1;
        }
      } else if (F.kind == Label::IdTwist && H.kind == Label::Proj) {
        if (cat.tgt_block[h] == F.a) {
          Label E = H;
          E.chi = char_mul(G, H.chi, restrict(G, F.chi, H.chi.domain));
          expect[cat.index_of(E)] = 1;
        }
      } else {
        closed = false;
      }
      if (closed) {
        require(expect == t.mult[f][h], "internal-error",
                "closed form disagrees for " + cat.name(f) + " * " + cat.name(h));
        ++t.closed_form_checks;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- cells

int CellStructure::cell_of(const std::vector<std::vector<int>>& part, int k) const {
  for (size_t c = 0; c < part.size(); ++c)
    if (std::find(part[c].begin(), part[c].end(), k) != part[c].end()) return static_cast<int>(c);
  return -1;
}

CellStructure cells(const Catalogue& cat, const MultTable& table) {
  const size_t n = cat.size();
  CellStructure cs;
  cs.geq_L.assign(n, std::vector<bool>(n, false));
  cs.geq_R = cs.geq_L;
  for (size_t a = 0; a < n; ++a) {
    cs.geq_L[a][a] = cs.geq_R[a][a] = true;
  }
  for (size_t h = 0; h < n; ++h) {
    for (size_t f = 0; f < n; ++f) {
      for (size_t g = 0; g < n; ++g) {
        if (table.mult[h][f][g] > 0) cs.geq_L[g][f] = true;  // G summand of H F
        if (table.mult[f][h][g] > 0) cs.geq_R[g][f] = true;  // G summand of F H
      }
    }
  }
  transitive_closure(cs.geq_L);
  transitive_closure(cs.geq_R);
  cs.geq_J.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) cs.geq_J[a][b] = cs.geq_L[a][b] || cs.geq_R[a][b];
  transitive_closure(cs.geq_J);
  cs.left = classes(cs.geq_L);
  cs.right = classes(cs.geq_R);
  cs.two_sided = classes(cs.geq_J);

  const Algebra& A = *cat.act->A;
  bool ok = static_cast<int>(cs.two_sided.size()) == A.nblocks + 1;
  int j0 = -1;
  for (size_t k = 0; k < n; ++k) {
    int c = cs.cell_of(cs.two_sided, static_cast<int>(k));
    if (cat.is_identity_twist(k)) {
      ok = ok && cs.two_sided[c].size() == cat.act->size();
      for (int m : cs.two_sided[c]) ok = ok && cat.is_identity_twist(m) && cat.labels[m].a == cat.labels[k].a;
    } else {
      if (j0 < 0) j0 = c;
      ok = ok && c == j0;
    }
  }
  cs.expected_shape = ok && j0 >= 0;
  return cs;
}

// ---------------------------------------------------------------- adjunctions

namespace {

/** The left factor carries p, the right factor the candidate partner object. */
struct PlainAdjunction {
  BimodPtr N;
  Mat eta0;  // A -> N (x)_A M inside N (x) M
  Mat eps0;  // M (x)_A N inside M (x) N -> A
};

PlainAdjunction plain_adjunction(const GroupActionPtr& act, const Label& L, const BimodPtr& M, const TraceData* td) {
  const Algebra& A = *act->A;
  PlainAdjunction pa;
  if (L.kind == Label::IdTwist) {
    pa.N = regular_bimodule(act, L.a);
  } else {
    pa.N = proj_bimodule(act, A.nu[L.b], L.a);
  }
  BimodPtr NM = x_tensor(pa.N, M), MN = x_tensor(M, pa.N);

  // Invariant element of N (x)_A M realizing the unit.
  SVec v;
  {
    const TensorData& t = *NM->tensor;
    size_t s = identity_summand(t);
    const TensorQ& q = t.q[s];
    Accum acc(NM->dim);
    if (L.kind == Label::IdTwist) {
      auto sub = block_basis(A, L.a);
      auto pos = positions(A, sub);
      SVec one = restrict_to(A.block_unit(L.a), pos);
      q.project_into(one, one, Scalar(1), t.offset[s], acc);
    } else {
      const int i = L.a, j = L.b;
      SVec f = svec_unit(A.vertex_index[i]), e = svec_unit(A.vertex_index[j]);
      SVec nue = svec_unit(A.vertex_index[A.nu[j]]);
      for (size_t k = 0; k < td->adapted.size(); ++k) {
        SVec astar_nue = A.mul(td->dual[k], nue);
        SVec ea = A.mul(e, td->adapted[k]);
        if (astar_nue.empty() || ea.empty()) continue;
        SVec nv = pure_tensor(A, A.nu[j], i, astar_nue, f);
        SVec mv = pure_tensor(A, i, j, f, ea);
        q.project_into(nv, mv, Scalar(1), t.offset[s], acc);
      }
    }
    v = acc.take();
  }
  pa.eta0 = Mat(NM->dim, A.dim);
  for (uint32_t u = 0; u < A.dim; ++u) pa.eta0.set_col(u, NM->left[u].apply(v));

  // Counit on the identity summand of M (x) N, through the quotient basis pairs.
  pa.eps0 = Mat(A.dim, MN->dim);
  {
    const TensorData& t = *MN->tensor;
    size_t s = identity_summand(t);
    const TensorQ& q = t.q[s];
    std::vector<uint32_t> Pm, Qm, Pn, Qn;
    if (L.kind == Label::IdTwist) {
      Pm = block_basis(A, L.a);
    } else {
      Pm = A.left_proj_basis(L.a);
      Qm = A.right_proj_basis(L.b);
      Pn = A.left_proj_basis(A.nu[L.b]);
      Qn = A.right_proj_basis(L.a);
    }
    for (size_t k = 0; k < q.basis.size(); ++k) {
      auto [x, y] = q.pairs[q.basis[k]];
      SVec val;
      if (L.kind == Label::IdTwist) {
        val = A.mult[Pm[x]][Pm[y]];
      } else {
        const uint32_t nqm = static_cast<uint32_t>(Qm.size()), nqn = static_cast<uint32_t>(Qn.size());
        uint32_t mx = Pm[x / nqm], my = Qm[x % nqm];
        uint32_t nz = Pn[y / nqn], nw = Qn[y % nqn];
        Scalar c = td->t(A.mult[my][nz]);
        if (!c.is_zero()) val = svec_scale(A.mult[mx][nw], c);
      }
      pa.eps0.set_col(t.offset[s] + static_cast<uint32_t>(k), val);
    }
  }
  return pa;
}

}  // namespace

AdjunctionDatum adjunction(const Catalogue& cat, size_t k) {
  const GroupActionPtr& act = cat.act;
  const Algebra& A = *act->A;
  require(A.self_injective, "no-adjunction",
          "the algebra is not self-injective" + (A.nakayama_failure.empty() ? "" : " (" + A.nakayama_failure + ")"));
  const GroupAction& G = *act;
  TraceData td = trace_dual(A);
  const Label& L = cat.labels[k];
  AdjunctionDatum d;
  d.left = static_cast<int>(k);
  d.F = cat.objects[k];
  const BimodPtr& M = d.F.M;
  const XMor& p = d.F.e;

  BimodPtr U = regular_bimodule(act);
  d.unit = {U, epsilon_idempotent(U, characters(G.grp, whole_group(G.grp))[0])};
  PlainAdjunction pa = plain_adjunction(act, L, M, &td);
  const BimodPtr& N = pa.N;
  d.NM = x_tensor(N, M);
  d.MN = x_tensor(M, N);

  // Lift to the spread category through the averaging idempotent of the unit object.
  const Scalar inv_g = Scalar(1) / Scalar(static_cast<long long>(G.size()));
  XMor eta = x_zero(U, d.NM), eps = x_zero(d.MN, U);
  for (uint32_t s = 0; s < G.size(); ++s) {
    eta.comp[s] = inv_g * (pa.eta0 * G.mat[s]);
    eps.comp[s] = G.mat[s] * pa.eps0;
  }

  // Mate of p: N -> U N -> (N M) N -> (N M) N -> N (M N) -> N U -> N.
  XMor idN = x_identity(N);
  BimodPtr UN = x_tensor(U, N), NM_N = x_tensor(d.NM, N), N_MN = x_tensor(N, d.MN), NU = x_tensor(N, U);
  XMor q = x_compose(unitor_right_out(NU),
                     x_compose(x_tensor_mor(idN, eps, N_MN, NU),
                               x_compose(associator_inv(NM_N, N_MN),
                                         x_compose(x_tensor_mor(x_tensor_mor(idN, p, d.NM, d.NM), idN, NM_N, NM_N),
                                                   x_compose(x_tensor_mor(eta, idN, UN, NM_N),
                                                             unitor_left_in(N, UN))))));
  d.G = {N, q};
  d.eta = x_compose(x_tensor_mor(q, p, d.NM, d.NM), eta);
  d.eps = x_compose(eps, x_tensor_mor(p, q, d.MN, d.MN));

  DecomposeOptions dopt;
  dopt.certify = false;
  auto dec = decompose(d.G, dopt);
  require(dec.parts.size() == 1 && dec.parts[0].second == 1, "internal-error",
          "the mate of " + cat.name(k) + " is not indecomposable");
  d.right = cat.index_of(dec.parts[0].first);
  require(d.right >= 0, "internal-error", "right adjoint outside the catalogue");
  return d;
}

bool verify_zigzag(const AdjunctionDatum& d) {
  const BimodPtr &M = d.F.M, &N = d.G.M, &U = d.unit.M;
  const XMor &p = d.F.e, &q = d.G.e;
  // Unit and counit must be morphisms before the triangle identities mean anything.
  if (!x_valid(d.eta) || !x_valid(d.eps)) return false;
  if (!x_equal(x_compose(q, q), q)) return false;
  // M -> M U -> M (N M) -> (M N) M -> U M -> M.
  BimodPtr MU = x_tensor(M, U), M_NM = x_tensor(M, d.NM), MN_M = x_tensor(d.MN, M), UM = x_tensor(U, M);
  XMor z1 = x_compose(
      unitor_left_out(UM),
      x_compose(x_tensor_mor(d.eps, p, MN_M, UM),
                x_compose(associator(M_NM, MN_M), x_compose(x_tensor_mor(p, d.eta, MU, M_NM), unitor_right_in(M, MU)))));
  if (!x_equal(z1, p)) return false;
  // N -> U N -> (N M) N -> N (M N) -> N U -> N.
  BimodPtr UN = x_tensor(U, N), NM_N = x_tensor(d.NM, N), N_MN = x_tensor(N, d.MN), NU = x_tensor(N, U);
  XMor z2 = x_compose(
      unitor_right_out(NU),
      x_compose(x_tensor_mor(q, d.eps, N_MN, NU),
                x_compose(associator_inv(NM_N, N_MN), x_compose(x_tensor_mor(d.eta, q, UN, NM_N), unitor_left_in(N, UN)))));
  return x_equal(z2, q);
}

FiatReport fiat_report(const Catalogue& cat, const MultTable* table) {
  const Algebra& A = *cat.act->A;
  FiatReport r;
  r.self_injective = A.self_injective;
  r.weakly_symmetric = A.weakly_symmetric;
  if (!A.self_injective) {
    r.reason = "no-adjunction: the algebra is not self-injective";
    return r;
  }
  std::vector<int> star(cat.size(), -1);
  bool zz = true;
  for (size_t k = 0; k < cat.size(); ++k) {
    AdjunctionDatum d = adjunction(cat, k);
    star[k] = d.right;
    if (!verify_zigzag(d)) {
      zz = false;
      r.reason = "zig-zag identity fails for " + cat.name(k);
    }
  }
  r.zigzags_ok = zz;
  r.weakly_fiat = zz;
  r.star = star;
  bool invol = true;
  for (size_t k = 0; k < star.size(); ++k) invol = invol && star[star[k]] == static_cast<int>(k);
  r.fiat = r.weakly_fiat && invol;
  if (r.weakly_fiat && !invol) r.reason = "the right-adjoint map is not an involution";
  if (table) {
    bool anti = true;
    const size_t n = cat.size();
    for (size_t f = 0; f < n; ++f) {
      for (size_t h = 0; h < n; ++h) {
        std::vector<int> lhs(n, 0);
        for (size_t k = 0; k < n; ++k) lhs[star[k]] += table->mult[f][h][k];
        anti = anti && lhs == table->mult[star[h]][star[f]];
      }
    }
    r.star_antihomomorphism = anti;
  }
  return r;
}

// ---------------------------------------------------------------- classification

long long schur_order(const std::vector<int>& d) {
  long long s = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) s *= std::gcd(d[i], d[j]);
  return s;
}

ClassifyReport classify_count(const AbelianGroup& G) {
  ClassifyReport r;
  for (const Subgroup& K : subgroups(G)) {
    ClassifyEntry e;
    e.K = K;
    e.factors = subgroup_invariant_factors(G, K);
    e.schur = schur_order(e.factors);
    r.total += e.schur;
    r.entries.push_back(std::move(e));
  }
  return r;
}

// ---------------------------------------------------------------- H-cell solver

HCellReport hcell_solve(int N) {
  require(N >= 1, "invalid", "the search bound must be positive");
  HCellReport rep;
  // Basis F = 0, G = 1; prod[X][Y] = coefficients of XY.
  for (int x = 0; x <= N; ++x) {
    for (int y = 0; y <= N; ++y) {
      for (int b = 0; b <= N; ++b) {
        for (int c = 0; c <= N; ++c) {
          if (y + c == 0 || y + b == 0) continue;
          const int prod[2][2][2] = {{{x, y}, {b, b}}, {{c, c}, {y, x}}};
          bool ok = true;
          for (int X = 0; X < 2 && ok; ++X) {
            for (int Y = 0; Y < 2 && ok; ++Y) {
              for (int Z = 0; Z < 2 && ok; ++Z) {
                // (XY)Z and X(YZ) as coefficient vectors.
                for (int out = 0; out < 2; ++out) {
                  int l = 0, r = 0;
                  for (int m = 0; m < 2; ++m) {
                    l += prod[X][Y][m] * prod[m][Z][out];
                    r += prod[Y][Z][m] * prod[X][m][out];
                  }
                  if (l != r) ok = false;
                }
              }
            }
          }
          if (!ok) continue;
          if (y == 0) ++rep.y_zero_solutions;
          rep.solutions.push_back({x, y, b, c});
        }
      }
    }
  }
  rep.all_diagonal = std::all_of(rep.solutions.begin(), rep.solutions.end(),
                                 [](const HCellSolution& s) { return s.x == s.y && s.y == s.b && s.b == s.c; });
  return rep;
}

// ---------------------------------------------------------------- automorphism toolkit

AutomorphismReport automorphism_toolkit(const Algebra& A, const Mat& phi, int budget) {
  AutomorphismReport r;
  const uint32_t n = A.dim;
  require(phi.rows() == n && phi.cols() == n && invertible(phi), "not-automorphism", "the map is not invertible");
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v)
      require(phi.apply(A.mult[u][v]) == A.mul(phi.col(u), phi.col(v)), "not-automorphism",
              "the map is not multiplicative");
  const Mat I = Mat::identity(n);
  {
    Mat pw = phi;
    int k = 1;
    while (pw != I) {
      pw = pw * phi;
      ++k;
      require(k <= 1024, "internal-error", "automorphism of very large order");
    }
    r.order_phi = k;
  }
  const Mat phi2 = phi * phi;

  // Solutions a of phi^2(x) a = a x for every basis element x.
  Mat sys(n * n, n);
  for (uint32_t col = 0; col < n; ++col) {
    SVec acol;
    for (uint32_t x = 0; x < n; ++x) {
      SVec lhs = A.mul(phi2.col(x), svec_unit(col));
      SVec rhs = A.mult[col][x];
      for (const auto& e : svec_axpy(lhs, Scalar(-1), rhs)) acol.push_back({x * n + e.i, e.v});
    }
    sys.set_col(col, std::move(acol));
  }
  std::vector<SVec> K = kernel(sys);
  auto normalized = [](SVec v) {
    if (!v.empty()) v = svec_scale(v, Scalar(1) / v.front().v);
    return v;
  };
  SVec a;
  auto satisfies = [&](const SVec& cand) { return sys.apply(cand).empty(); };
  if (satisfies(A.one())) {
    a = A.one();
  } else {
    for (const SVec& k : K) {
      SVec c = normalized(k);
      if (is_invertible_element(A, c)) {
        a = c;
        break;
      }
    }
    // Small integer combinations in a fixed order.
    const int kdim = static_cast<int>(K.size());
    int tried = 0;
    for (int bound = 1; a.empty() && bound <= 3 && kdim > 1; ++bound) {
      std::vector<int> coef(kdim, -bound);
      while (a.empty() && tried < budget) {
        SVec c;
        for (int t = 0; t < kdim; ++t) c = svec_axpy(c, Scalar(coef[t]), K[t]);
        ++tried;
        if (!c.empty()) {
          c = normalized(c);
          if (is_invertible_element(A, c)) a = c;
        }
        int t = 0;
        while (t < kdim && ++coef[t] > bound) coef[t++] = -bound;
        if (t == kdim) break;
      }
    }
  }
  require(!a.empty(), "not-inner", "no invertible element a with phi^2(x) a = a x was found");
  r.a = a;
  r.a_inv = element_inverse(A, a);
  r.phi2_is_conjugation = satisfies(a);

  auto central = [&](const SVec& z) {
    for (uint32_t u = 0; u < n; ++u)
      if (A.mul(z, svec_unit(u)) != A.mul(svec_unit(u), z)) return false;
    return true;
  };
  r.t = A.mul(phi.apply(r.a_inv), a);
  r.t_central = central(r.t);

  // Square root of c = a^-1 as a polynomial in c.
  const SVec& c = r.a_inv;
  const FieldCtx* F = A.field;
  const int m = F ? F->m : 1;
  std::vector<SVec> pows{A.one()};
  std::vector<Scalar> minpoly;  // monic, low to high
  {
    Echelon ech(n, true);
    ech.insert(pows[0]);
    while (true) {
      SVec next = A.mul(pows.back(), c);
      SVec co;
      if (ech.coords(next, co)) {
        const size_t deg = pows.size();
        minpoly.assign(deg + 1, Scalar(0));
        for (const auto& e : co) minpoly[e.i] = -e.v;
        minpoly[deg] = Scalar(1);
        break;
      }
      ech.insert(next);
      pows.push_back(std::move(next));
    }
  }
  auto eval = [](const std::vector<Scalar>& p, const Scalar& x) {
    Scalar v(0);
    for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
  };
  std::vector<Scalar> roots;
  {
    std::vector<Scalar> rest = minpoly;
    for (int k = 0; k < m && rest.size() > 1; ++k) {
      Scalar lam = root_of_unity(F, m, k);
      while (rest.size() > 1 && eval(rest, lam).is_zero()) {
        // Synthetic division by (X - lam).
        std::vector<Scalar> quo(rest.size() - 1);
        Scalar carry(0);
        for (size_t t = rest.size() - 1; t-- > 0;) {
          carry = rest[t + 1] + carry * lam;
          quo[t] = carry;
        }
        rest = std::move(quo);
        if (std::find(roots.begin(), roots.end(), lam) == roots.end()) roots.push_back(lam);
      }
    }
    require(rest.size() == 1, "needs-larger-conductor",
            "the minimal polynomial of a^-1 does not split over roots of unity of order " + std::to_string(m) +
                "; raise the field conductor m");
  }
  std::vector<Scalar> mu;
  for (const Scalar& lam : roots) {
    bool found = false;
    for (int j = 0; j < m && !found; ++j) {
      Scalar s = root_of_unity(F, m, j);
      if (s * s == lam) {
        mu.push_back(s);
        found = true;
      }
    }
    require(found, "needs-larger-conductor", "an eigenvalue of a^-1 has no square root; raise the field conductor m");
  }
  // Lagrange interpolation b0 = sum mu_l L_l(c), then Newton steps b <- (b + c b^-1)/2.
  SVec b;
  for (size_t l = 0; l < roots.size(); ++l) {
    SVec term = A.one();
    for (size_t o = 0; o < roots.size(); ++o) {
      if (o == l) continue;
      SVec fac = svec_axpy(c, -roots[o], A.one());
      term = svec_scale(A.mul(term, fac), Scalar(1) / (roots[l] - roots[o]));
    }
    b = svec_axpy(b, mu[l], term);
  }
  for (int it = 0; it < 32 && A.mul(b, b) != c; ++it) {
    SVec binv = element_inverse(A, b);
    require(!binv.empty(), "internal-error", "square-root iteration hit a singular element");
    b = svec_scale(svec_axpy(b, Scalar(1), A.mul(c, binv)), Scalar(1, 2));
  }
  r.b = b;
  r.b_squared = A.mul(b, b) == c;

  // sigma = conjugation by b.
  SVec binv = element_inverse(A, b);
  Mat sigma = left_mult(A, b) * right_mult(A, binv);
  Mat sp = sigma * phi, pw = sp;
  int k = 1;
  while (pw != I && k < 1024) {
    pw = pw * sp;
    ++k;
  }
  r.order_sigma_phi = k;
  r.fourth_power_identity = sp * sp * sp * sp == I;
  return r;
}

// ---------------------------------------------------------------- H-cell realization

RealizationReport hcell_realization_check(const Catalogue& cat, const MultTable& table, const FiatReport& fiat) {
  const Algebra& A = *cat.act->A;
  RealizationReport r;
  if (A.nvert != 2) {
    r.reason = "precondition: the algebra must have exactly two vertices";
    return r;
  }
  r.applicable = true;
  r.cartan.assign(2, std::vector<int>(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.cartan[i][j] = static_cast<int>(A.corner_basis(i, j).size());
  if (fiat.star.size() != cat.size()) {
    r.reason = "no right-adjoint map available";
    return r;
  }
  const size_t n = cat.size();
  for (size_t f = 0; f < n && r.F < 0; ++f) {
    if (cat.is_identity_twist(f)) continue;
    const int g = fiat.star[f];
    if (g == static_cast<int>(f)) continue;
    int common = -1;
    bool ok = true;
    for (int X : {static_cast<int>(f), g}) {
      for (int Y : {static_cast<int>(f), g}) {
        const auto& row = table.mult[X][Y];
        for (size_t k = 0; k < n; ++k) {
          const bool in_pair = k == f || static_cast<int>(k) == g;
          if (!in_pair && row[k] != 0) ok = false;
        }
        if (row[f] != row[g] || row[f] == 0) ok = false;
        if (common < 0) common = row[f];
        if (row[f] != common) ok = false;
      }
    }
    if (ok) {
      r.F = static_cast<int>(f);
      r.G = g;
      r.n = common;
    }
  }
  if (r.F < 0) {
    r.reason = "no pair F, G with F* = G and FF = FG = GF = GG = n(F + G)";
    return r;
  }
  const std::vector<std::vector<int>> expect{{r.n, r.n}, {r.n, r.n}};
  r.realized = r.cartan == expect;
  if (!r.realized) r.reason = "the Cartan matrix differs from [[n,n],[n,n]]";
  return r;
}

// ---------------------------------------------------------------- adjoining a point

GroupActionPtr adjoin_point(const GroupActionPtr& act) {
  const Algebra& A = *act->A;
  AlgebraPresentation p = A.presentation;
  p.vertices += 1;
  AlgebraPtr B = build_algebra(p);
  // Basis elements of A inside B: same path words (vertices keep their indices).
  auto key = [](const Path& q) { return std::make_tuple(q.src, q.tgt, q.word); };
  std::vector<uint32_t> embed(A.dim);
  for (uint32_t u = 0; u < A.dim; ++u) {
    bool found = false;
    for (uint32_t w = 0; w < B->dim && !found; ++w) {
      if (key(B->basis[w]) == key(A.basis[u])) {
        embed[u] = w;
        found = true;
      }
    }
    require(found, "internal-error", "basis element missing after adjoining a point");
  }
  require(B->dim == A.dim + 1, "internal-error", "adjoining a point must add exactly one basis element");
  std::vector<GroupGenerator> gens;
  const auto& orders = act->grp.orders();
  for (size_t t = 0; t < orders.size(); ++t) {
    std::vector<int> ex(orders.size(), 0);
    ex[t] = 1;
    const Mat& ga = act->mat[act->grp.index(ex)];
    Mat gb = Mat::identity(B->dim);
    for (uint32_t u = 0; u < A.dim; ++u) {
      SVec col;
      for (const auto& e : ga.col(u)) col.push_back({embed[e.i], e.v});
      std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.i < y.i; });
      gb.set_col(embed[u], std::move(col));
    }
    gens.push_back({t < act->gen_names.size() ? act->gen_names[t] : "g" + std::to_string(t + 1), orders[t], gb});
  }
  return build_group_action(B, gens);
}

}  // namespace gsym
