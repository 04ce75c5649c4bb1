/**
 * @file completion.cpp
 * @brief Idempotent completion: witnesses, character idempotents, tops,
 * trace-formula multiplicities and split pairs.
 */
#include "gsym/completion.hpp"

#include <algorithm>
#include <set>

#include "gsym/error.hpp"
#include "gsym/tensor.hpp"

namespace gsym {

namespace {

/** Restriction of a vector supported on @p pos (pos[k] >= 0) to local coordinates. */
SVec restrict_to(const SVec& v, const std::vector<int>& pos) {
  SVec out;
  for (const auto& e : v) {
    require(pos[e.i] >= 0, "internal-error", "vector leaves the expected subspace");
    out.push_back({static_cast<uint32_t>(pos[e.i]), e.v});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  return out;
}

/** Automorphism g restricted to the span of the basis indices @p sub (which it must preserve). */
Mat restricted_automorphism(const GroupAction& G, uint32_t g, const std::vector<uint32_t>& sub) {
  std::vector<int> pos(G.A->dim, -1);
  for (size_t k = 0; k < sub.size(); ++k) pos[sub[k]] = static_cast<int>(k);
  Mat m(static_cast<uint32_t>(sub.size()), static_cast<uint32_t>(sub.size()));
  for (size_t k = 0; k < sub.size(); ++k) m.set_col(static_cast<uint32_t>(k), restrict_to(G.mat[g].col(sub[k]), pos));
  return m;
}

std::vector<uint32_t> block_basis(const Algebra& A, int block) {
  std::vector<uint32_t> sub;
  for (uint32_t b = 0; b < A.dim; ++b) {
    if (block < 0 || A.block_of_vertex[A.src(b)] == block) sub.push_back(b);
  }
  return sub;
}

Subgroup whole_group(const AbelianGroup& G) {
  Subgroup H(G.size());
  for (uint32_t g = 0; g < G.size(); ++g) H[g] = g;
  return H;
}

// ---------------------------------------------------------------- covers

/**
 * Free presentation of a bimodule: generators x_t with grades, and the
 * basis C of the bimodule given by the columns lambda(p) rho(q) x_t.
 */
struct Cover {
  bool projective = false;
  std::vector<SVec> gen;
  std::vector<std::pair<int, int>> grade;  // (l, r) or (block, -1)
  struct Col {
    uint32_t gen;
    uint32_t p;
    int q;  // -1: no right factor
  };
  std::vector<Col> cols;
  Mat C, Cinv;
  /** Top coordinates: T y = (C^-1 y) restricted to the top columns. */
  Mat T;

  uint32_t ngen() const { return static_cast<uint32_t>(gen.size()); }
};

Mat stack_difference(const Bimodule& X) {
  const Algebra& A = X.alg();
  const uint32_t n = X.dim;
  const uint32_t ng = static_cast<uint32_t>(A.generators.size());
  Mat S(n * ng, n);
  for (uint32_t c = 0; c < n; ++c) {
    SVec col;
    for (uint32_t k = 0; k < ng; ++k) {
      uint32_t g = A.generators[k];
      SVec d = svec_axpy(X.left[g].col(c), Scalar(-1), X.right[g].col(c));
      for (auto& e : d) col.push_back({k * n + e.i, e.v});
    }
    S.set_col(c, std::move(col));
  }
  return S;
}

bool invert_cover(Cover& cv, const std::vector<uint32_t>& topcol) {
  if (!invertible(cv.C)) return false;
  cv.Cinv = inverse(cv.C);
  const uint32_t n = cv.C.rows();
  std::vector<int> row_gen(n, -1);
  for (uint32_t t = 0; t < topcol.size(); ++t) row_gen[topcol[t]] = static_cast<int>(t);
  cv.T = Mat(cv.ngen(), n);
  for (uint32_t c = 0; c < n; ++c) {
    SVec col;
    for (const auto& e : cv.Cinv.col(c)) {
      if (row_gen[e.i] >= 0) col.push_back({static_cast<uint32_t>(row_gen[e.i]), e.v});
    }
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    cv.T.set_col(c, std::move(col));
  }
  return true;
}

bool projective_cover(const Bimodule& X, Cover& cv) {
  const Algebra& A = X.alg();
  cv = Cover{};
  cv.projective = true;
  Echelon rad(X.dim);
  for (int ai : A.arrow_index) {
    if (ai < 0) continue;
    for (uint32_t c = 0; c < X.dim; ++c) {
      rad.insert(X.left[ai].col(c));
      rad.insert(X.right[ai].col(c));
    }
  }
  std::vector<uint32_t> topcol;
  size_t total = 0;
  for (uint32_t c : rad.free_columns()) {
    cv.gen.push_back(svec_unit(c));
    cv.grade.push_back({X.lvert[c], X.rvert[c]});
    total += A.left_proj_basis(X.lvert[c]).size() * A.right_proj_basis(X.rvert[c]).size();
  }
  if (total != X.dim) return false;
  cv.C = Mat(X.dim, X.dim);
  for (uint32_t t = 0; t < cv.ngen(); ++t) {
    auto [l, r] = cv.grade[t];
    for (uint32_t p : A.left_proj_basis(l)) {
      SVec lp = X.left[p].apply(cv.gen[t]);
      for (uint32_t q : A.right_proj_basis(r)) {
        if (p == A.vertex_index[l] && q == A.vertex_index[r]) topcol.push_back(static_cast<uint32_t>(cv.cols.size()));
        cv.C.set_col(static_cast<uint32_t>(cv.cols.size()), X.right[q].apply(lp));
        cv.cols.push_back({t, p, static_cast<int>(q)});
      }
    }
  }
  return invert_cover(cv, topcol);
}

bool regular_cover(const Bimodule& X, Cover& cv) {
  const Algebra& A = X.alg();
  cv = Cover{};
  cv.projective = false;
  // Invariants X^A and the radical of the center.
  std::vector<SVec> inv = kernel(stack_difference(X));
  Mat Z(static_cast<uint32_t>(A.dim * A.generators.size()), A.dim);
  for (uint32_t c = 0; c < A.dim; ++c) {
    SVec col;
    for (uint32_t k = 0; k < A.generators.size(); ++k) {
      uint32_t g = A.generators[k];
      for (auto& e : svec_axpy(A.mult[g][c], Scalar(-1), A.mult[c][g])) col.push_back({k * A.dim + e.i, e.v});
    }
    Z.set_col(c, std::move(col));
  }
  std::vector<SVec> center = kernel(Z);
  // Combinations of center elements with zero vertex coefficients.
  Mat V(static_cast<uint32_t>(A.nvert), static_cast<uint32_t>(center.size()));
  for (uint32_t k = 0; k < center.size(); ++k) {
    SVec col;
    for (int v = 0; v < A.nvert; ++v) {
      Scalar s = svec_get(center[k], A.vertex_index[v]);
      if (!s.is_zero()) col.push_back({static_cast<uint32_t>(v), s});
    }
    V.set_col(k, std::move(col));
  }
  Echelon sub(X.dim);
  for (const SVec& comb : kernel(V)) {
    SVec z;
    for (const auto& e : comb) z = svec_axpy(z, e.v, center[e.i]);
    Mat lz = left_action(X, z);
    for (const SVec& x : inv) sub.insert(lz.apply(x));
  }
  std::vector<uint32_t> topcol;
  for (int b = 0; b < A.nblocks; ++b) {
    Mat lb = left_action(X, A.block_unit(b));
    for (const SVec& x : inv) {
      SVec y = lb.apply(x);
      if (!sub.insert(y)) continue;
      cv.gen.push_back(y);
      cv.grade.push_back({b, -1});
    }
  }
  size_t total = 0;
  for (auto& g : cv.grade) total += A.block_dim(g.first);
  if (total != X.dim) return false;
  cv.C = Mat(X.dim, X.dim);
  for (uint32_t t = 0; t < cv.ngen(); ++t) {
    int b = cv.grade[t].first;
    int vmin = -1;
    for (int v = 0; v < A.nvert; ++v) {
      if (A.block_of_vertex[v] == b) {
        vmin = v;
        break;
      }
    }
    for (uint32_t a : block_basis(A, b)) {
      if (a == A.vertex_index[vmin]) topcol.push_back(static_cast<uint32_t>(cv.cols.size()));
      cv.C.set_col(static_cast<uint32_t>(cv.cols.size()), X.left[a].apply(cv.gen[t]));
      cv.cols.push_back({t, a, -1});
    }
  }
  return invert_cover(cv, topcol);
}

Cover make_cover(const Bimodule& X) {
  Cover cv;
  if (projective_cover(X, cv)) return cv;
  if (regular_cover(X, cv)) return cv;
  throw Error("unsupported-object", "object " + X.name + " is not a sum of projective or regular bimodules");
}

/** Top matrix of component g of a morphism between covered objects. */
Mat top_component(const Mat& f, const Cover& src, const Cover& tgt) {
  Mat t(tgt.ngen(), src.ngen());
  for (uint32_t s = 0; s < src.ngen(); ++s) t.set_col(s, tgt.T.apply(f.apply(src.gen[s])));
  return t;
}

std::vector<Mat> top_of(const XMor& f, const Cover& src, const Cover& tgt) {
  std::vector<Mat> out;
  for (const Mat& c : f.comp) out.push_back(c.is_zero() ? Mat(tgt.ngen(), src.ngen()) : top_component(c, src, tgt));
  return out;
}

SVec flatten_tops(const std::vector<Mat>& t) {
  SVec out;
  uint32_t off = 0;
  for (const Mat& m : t) {
    for (uint32_t c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.col(c)) out.push_back({off + c * m.rows() + e.i, e.v});
    }
    off += m.rows() * m.cols();
  }
  return out;
}

/** Group element applied to a grade. */
std::pair<int, int> act_grade(const GroupAction& G, uint32_t g, std::pair<int, int> gr, bool projective) {
  if (!projective) return gr;
  return {G.vperm[g][gr.first], G.vperm[g][gr.second]};
}

/**
 * Lifts a top map from the single-generator object L to X: component g sends
 * the generator of L to the combination @p y of X's generators.
 */
Mat lift_into(const Bimodule& L, const Cover& cl, const Bimodule& X, const Cover& cx, uint32_t g, const SVec& y) {
  const GroupAction& G = *X.act;
  SVec yv;
  for (const auto& e : y) yv = svec_axpy(yv, e.v, cx.gen[e.i]);
  Mat W(X.dim, L.dim);
  for (uint32_t k = 0; k < cl.cols.size(); ++k) {
    const auto& col = cl.cols[k];
    SVec v = left_action(X, G.mat[g].col(col.p)).apply(yv);
    if (col.q >= 0) v = right_action(X, G.mat[g].col(static_cast<uint32_t>(col.q))).apply(v);
    W.set_col(k, std::move(v));
  }
  return W * cl.Cinv;
}

/** Lifts a top map from X to L: component g sends generator s of X to c_s times L's generator. */
Mat lift_from(const Bimodule& X, const Cover& cx, const Bimodule& L, const Cover& cl, uint32_t g, const SVec& c) {
  const GroupAction& G = *X.act;
  Mat W(L.dim, X.dim);
  for (uint32_t k = 0; k < cx.cols.size(); ++k) {
    const auto& col = cx.cols[k];
    Scalar cs = svec_get(c, col.gen);
    if (cs.is_zero()) continue;
    SVec v = left_action(L, G.mat[g].col(col.p)).apply(cl.gen[0]);
    if (col.q >= 0) v = right_action(L, G.mat[g].col(static_cast<uint32_t>(col.q))).apply(v);
    W.set_col(k, svec_scale(v, cs));
  }
  return W * cx.Cinv;
}

}  // namespace

// ---------------------------------------------------------------- stabilizers and witnesses

CompletedObject whole(const BimodPtr& M) { return {M, x_identity(M)}; }

CompletedObject tensor(const CompletedObject& X, const CompletedObject& Y) {
  BimodPtr T = x_tensor(X.M, Y.M);
  return {T, x_tensor_mor(X.e, Y.e, T, T)};
}

Subgroup pair_stabilizer(const GroupAction& G, int i, int j) {
  Subgroup H;
  for (uint32_t g = 0; g < G.size(); ++g) {
    if (G.vperm[g][i] == i && G.vperm[g][j] == j) H.push_back(g);
  }
  return H;
}

std::pair<int, int> orbit_min(const GroupAction& G, int i, int j) {
  std::pair<int, int> best{i, j};
  for (uint32_t g = 0; g < G.size(); ++g) best = std::min(best, std::make_pair(G.vperm[g][i], G.vperm[g][j]));
  return best;
}

Subgroup stabilizer(const BimodPtr& M) {
  const GroupAction& G = *M->act;
  switch (M->kind) {
    case BimodKind::Regular:
      return whole_group(G.grp);
    case BimodKind::Projective:
    case BimodKind::Simple:
      return pair_stabilizer(G, M->i, M->j);
    default:
      break;
  }
  Subgroup H;
  for (uint32_t g = 0; g < G.size(); ++g) {
    if (plain_isomorphic(*M, *M, g)) H.push_back(g);
  }
  return H;
}

std::vector<Mat> witnesses(const BimodPtr& M, const Subgroup& H) {
  const GroupAction& G = *M->act;
  const Algebra& A = *G.A;
  std::vector<Mat> w(G.size());
  for (uint32_t g : H) {
    switch (M->kind) {
      case BimodKind::Regular:
        w[g] = restricted_automorphism(G, g, block_basis(A, M->i));
        break;
      case BimodKind::Projective:
        w[g] = kron(restricted_automorphism(G, g, A.left_proj_basis(M->i)),
                    restricted_automorphism(G, g, A.right_proj_basis(M->j)));
        break;
      case BimodKind::Simple:
        w[g] = Mat::identity(1);
        break;
      default: {
        Mat f;
        require(plain_isomorphic(*M, *M, g, &f), "incoherent-witnesses", "element outside the stabilizer");
        w[g] = g == 0 ? Mat::identity(M->dim) : f;
      }
    }
    require(is_twisted_map(*M, *M, g, w[g]), "incoherent-witnesses", "witness is not a twisted bimodule map");
  }
  for (uint32_t g : H) {
    for (uint32_t h : H) {
      require(w[g] * w[h] == w[G.grp.op(g, h)], "incoherent-witnesses",
              "witnesses of " + M->name + " do not compose to a group action");
    }
  }
  return w;
}

XMor epsilon_idempotent(const BimodPtr& M, const Character& chi) {
  const GroupAction& G = *M->act;
  Subgroup H = stabilizer(M);
  require(chi.domain == H, "bad-character", "character is not defined on the stabilizer of " + M->name);
  std::vector<Mat> w = witnesses(M, H);
  XMor e = x_zero(M, M);
  const Scalar inv = Scalar(1, static_cast<long long>(H.size()));
  for (uint32_t g : H) e.comp[g] = (chi.value(G.A->field, g) * inv) * w[g];
  return e;
}

// ---------------------------------------------------------------- labels

bool operator<(const Label& x, const Label& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.chi.rep != y.chi.rep) return x.chi.rep < y.chi.rep;
  return x.chi.val < y.chi.val;
}

std::string Label::name(const GroupAction& G) const {
  const Algebra& A = *G.A;
  std::string ch = char_name(G.grp, chi);
  if (kind == IdTwist) {
    std::string s = "1";
    if (A.nblocks > 1) s += "[" + std::to_string(a + 1) + "]";
    return G.size() > 1 ? s + ch : s;
  }
  std::string s = "P(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  return chi.domain.size() > 1 ? s + ch : s;
}

CompletedObject label_object(const GroupActionPtr& act, const Label& L) {
  BimodPtr M = L.kind == Label::IdTwist ? regular_bimodule(act, L.a) : proj_bimodule(act, L.a, L.b);
  return {M, epsilon_idempotent(M, L.chi)};
}

std::vector<Label> all_labels(const GroupAction& G) {
  const Algebra& A = *G.A;
  std::vector<Label> out;
  Subgroup all = whole_group(G.grp);
  for (int b = 0; b < A.nblocks; ++b) {
    for (auto& chi : characters(G.grp, all)) out.push_back({Label::IdTwist, b, -1, chi});
  }
  for (int i = 0; i < A.nvert; ++i) {
    for (int j = 0; j < A.nvert; ++j) {
      if (orbit_min(G, i, j) != std::make_pair(i, j)) continue;
      for (auto& chi : characters(G.grp, pair_stabilizer(G, i, j))) out.push_back({Label::Proj, i, j, chi});
    }
  }
  return out;
}

std::map<std::string, int> Decomposition::multiset(const GroupAction& G) const {
  std::map<std::string, int> m;
  for (auto& [L, k] : parts) m[L.name(G)] += k;
  return m;
}

// ---------------------------------------------------------------- decomposition

Scalar idempotent_rank(const XMor& e) { return e.comp[0].trace(); }

Decomposition decompose(const CompletedObject& X, const DecomposeOptions& opt) {
  const BimodPtr& M = X.M;
  const GroupAction& G = *M->act;
  const AbelianGroup& grp = G.grp;
  const FieldCtx* field = G.A->field;
  Decomposition out;
  if (M->dim == 0 || x_is_zero(X.e)) {
    out.certified = true;
    return out;
  }
  const Cover cx = make_cover(*M);

  // Candidate labels from the grades present among the generators.
  std::vector<Label> cand;
  {
    std::set<std::pair<int, int>> seen;
    for (auto gr : cx.grade) {
      if (cx.projective) gr = orbit_min(G, gr.first, gr.second);
      if (!seen.insert(gr).second) continue;
      if (cx.projective) {
        for (auto& chi : characters(grp, pair_stabilizer(G, gr.first, gr.second)))
          cand.push_back({Label::Proj, gr.first, gr.second, chi});
      } else {
        for (auto& chi : characters(grp, whole_group(grp))) cand.push_back({Label::IdTwist, gr.first, -1, chi});
      }
    }
    std::sort(cand.begin(), cand.end());
  }

  // Trace-formula multiplicities.
  std::vector<Mat> ebar = top_of(X.e, cx, cx);
  auto grade_of_label = [&](const Label& L) {
    return L.kind == Label::Proj ? std::make_pair(L.a, L.b) : std::make_pair(L.a, -1);
  };
  Scalar rank_sum(0);
  std::vector<std::pair<Label, int>> mults;
  for (const Label& L : cand) {
    const Subgroup& H = L.chi.domain;
    std::set<std::pair<int, int>> orbit;
    for (uint32_t g = 0; g < grp.size(); ++g) orbit.insert(act_grade(G, g, grade_of_label(L), cx.projective));
    Scalar m(0);
    for (uint32_t t = 0; t < cx.ngen(); ++t) {
      if (!orbit.count(cx.grade[t])) continue;
      for (uint32_t a : H) m += L.chi.value(field, a) * ebar[grp.inv(a)].at(t, t);
    }
    require(m.is_rational() && m.rational().is_integer() && m.rational().sign() >= 0, "field-not-splitting",
            "non-integral multiplicity " + m.str());
    long long k = m.rational().to_int();
    if (k == 0) continue;
    mults.push_back({L, static_cast<int>(k)});
    BimodPtr LM = L.kind == Label::IdTwist ? regular_bimodule(M->act, L.a) : proj_bimodule(M->act, L.a, L.b);
    rank_sum += Scalar(k) * Scalar(static_cast<long long>(LM->dim), static_cast<long long>(H.size()));
  }
  require(rank_sum == idempotent_rank(X.e), "internal-error", "dimension audit failed in decomposition");
  out.parts = mults;
  if (!opt.certify) return out;

  // Split pairs, peeled off label by label.
  std::vector<std::pair<Label, int>> order = mults;
  if (opt.reverse) std::reverse(order.begin(), order.end());
  XMor e = X.e;
  for (auto& [L, mult] : order) {
    CompletedObject LO = label_object(M->act, L);
    const Bimodule& LB = *LO.M;
    const Cover cl = make_cover(LB);
    require(cl.ngen() == 1, "internal-error", "label object is not generated by one element");
    const auto gL = grade_of_label(L);
    const Subgroup& H = L.chi.domain;

    // Independent u = e o h o eps_L and v = eps_L o k o e from elementary top maps.
    std::vector<XMor> us, vs;
    {
      Echelon ech(static_cast<uint32_t>(grp.size() * cx.ngen()));
      for (uint32_t g = 0; g < grp.size() && static_cast<int>(us.size()) < mult; ++g) {
        for (uint32_t s = 0; s < cx.ngen() && static_cast<int>(us.size()) < mult; ++s) {
          if (cx.grade[s] != act_grade(G, g, gL, cx.projective)) continue;
          XMor h = x_single(LO.M, M, g, lift_into(LB, cl, *M, cx, g, svec_unit(s)));
          XMor u = x_compose(e, x_compose(h, LO.e));
          if (ech.insert(flatten_tops(top_of(u, cl, cx)))) us.push_back(std::move(u));
        }
      }
    }
    {
      Echelon ech(static_cast<uint32_t>(grp.size() * cx.ngen()));
      for (uint32_t g = 0; g < grp.size() && static_cast<int>(vs.size()) < mult; ++g) {
        for (uint32_t s = 0; s < cx.ngen() && static_cast<int>(vs.size()) < mult; ++s) {
          if (act_grade(G, g, cx.grade[s], cx.projective) != gL) continue;
          XMor k = x_single(M, LO.M, g, lift_from(*M, cx, LB, cl, g, svec_unit(s)));
          XMor v = x_compose(LO.e, x_compose(k, e));
          if (ech.insert(flatten_tops(top_of(v, cx, cl)))) vs.push_back(std::move(v));
        }
      }
    }
    require(static_cast<int>(us.size()) == mult && static_cast<int>(vs.size()) == mult, "field-not-splitting",
            "split maps do not match the multiplicity of " + L.name(G));

    // Pairing on tops: v_k o u_l = P_kl eps_L modulo the radical.
    const Scalar order_H(static_cast<long long>(H.size()));
    Mat P(mult, mult);
    std::vector<std::vector<XMor>> vu(mult, std::vector<XMor>(mult));
    for (int k = 0; k < mult; ++k) {
      for (int l = 0; l < mult; ++l) {
        vu[k][l] = x_compose(vs[k], us[l]);
        Scalar p = top_component(vu[k][l].comp[0], cl, cl).at(0, 0) * order_H;
        if (!p.is_zero()) P.col(l).push_back({static_cast<uint32_t>(k), p});
      }
    }
    require(invertible(P), "field-not-splitting", "degenerate top pairing for " + L.name(G));
    Mat Pi = inverse(P);
    auto combine = [&](const std::vector<XMor>& fam, int row, const BimodPtr& s, const BimodPtr& t) {
      XMor r = x_zero(s, t);
      for (int m = 0; m < mult; ++m) {
        Scalar c = Pi.at(row, m);
        if (!c.is_zero()) r = x_add(r, x_scale(c, fam[m]));
      }
      return r;
    };
    std::vector<XMor> v2;
    std::vector<std::vector<XMor>> gamma(mult, std::vector<XMor>(mult));
    for (int k = 0; k < mult; ++k) {
      v2.push_back(combine(vs, k, M, LO.M));
      for (int l = 0; l < mult; ++l) {
        XMor gkl = x_zero(LO.M, LO.M);
        for (int m = 0; m < mult; ++m) {
          Scalar c = Pi.at(k, m);
          if (!c.is_zero()) gkl = x_add(gkl, x_scale(c, vu[m][l]));
        }
        gamma[k][l] = std::move(gkl);
      }
    }
    // Gamma = eps I + N with N nilpotent; invert by the Neumann series.
    using MorMat = std::vector<std::vector<XMor>>;
    auto mm = [&](const MorMat& a, const MorMat& b) {
      MorMat c(mult, std::vector<XMor>(mult, x_zero(LO.M, LO.M)));
      for (int i = 0; i < mult; ++i)
        for (int j = 0; j < mult; ++j)
          for (int k = 0; k < mult; ++k) c[i][j] = x_add(c[i][j], x_compose(a[i][k], b[k][j]));
      return c;
    };
    MorMat negN(mult, std::vector<XMor>(mult)), S(mult, std::vector<XMor>(mult));
    for (int i = 0; i < mult; ++i) {
      for (int j = 0; j < mult; ++j) {
        XMor d = i == j ? x_sub(gamma[i][j], LO.e) : gamma[i][j];
        negN[i][j] = x_scale(Scalar(-1), d);
        S[i][j] = i == j ? LO.e : x_zero(LO.M, LO.M);
      }
    }
    MorMat Pw = S;
    bool converged = false;
    for (int it = 0; it < 64; ++it) {
      Pw = mm(Pw, negN);
      bool zero = true;
      for (auto& row : Pw)
        for (auto& x : row) zero = zero && x_is_zero(x);
      if (zero) {
        converged = true;
        break;
      }
      for (int i = 0; i < mult; ++i)
        for (int j = 0; j < mult; ++j) S[i][j] = x_add(S[i][j], Pw[i][j]);
    }
    require(converged, "field-not-splitting", "Gram matrix of " + L.name(G) + " is not unipotent");
    std::vector<XMor> u2;
    for (int l = 0; l < mult; ++l) {
      XMor r = x_zero(LO.M, M);
      for (int k = 0; k < mult; ++k) r = x_add(r, x_compose(us[k], S[k][l]));
      u2.push_back(std::move(r));
    }
    for (int k = 0; k < mult; ++k) {
      for (int l = 0; l < mult; ++l) {
        XMor t = x_compose(v2[k], u2[l]);
        require(k == l ? x_equal(t, LO.e) : x_is_zero(t), "internal-error", "split pair audit failed");
      }
      e = x_sub(e, x_compose(u2[k], v2[k]));
      out.splits.push_back({L, u2[k], v2[k]});
    }
  }
  require(x_is_zero(e), "field-not-splitting", "idempotent not exhausted by its split summands");
  out.certified = true;
  return out;
}

// ---------------------------------------------------------------- endomorphism rings

int end_mod_rad_dim(const CompletedObject& X) {
  const BimodPtr& M = X.M;
  auto basis = x_hom_basis(M, M).morphisms(M, M);
  const bool is_id = x_equal(X.e, x_identity(M));
  uint32_t flat_dim = static_cast<uint32_t>(M->act->size() * M->dim * M->dim);
  Echelon ech(flat_dim, true);
  std::vector<XMor> B;
  for (const XMor& b : basis) {
    XMor c = is_id ? b : x_compose(X.e, x_compose(b, X.e));
    if (ech.insert(x_flatten(c))) B.push_back(std::move(c));
  }
  // Coordinates with respect to B: the echelon tracks all insertions, so
  // re-express in the independent family.
  Echelon fam(flat_dim, true);
  for (const XMor& b : B) fam.insert(x_flatten(b));
  const uint32_t n = static_cast<uint32_t>(B.size());
  std::vector<std::vector<SVec>> mult(n, std::vector<SVec>(n));
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = 0; v < n; ++v) {
      SVec c;
      require(fam.coords(x_flatten(x_compose(B[u], B[v])), c), "internal-error", "endomorphism ring not closed");
      mult[u][v] = std::move(c);
    }
  }
  std::vector<SVec> rad = radical_basis(n, mult);
  Echelon R(n);
  for (const SVec& r : rad) R.insert(r);
  // Split semisimple quotient over the ground field: here the quotient is
  // commutative and the field contains the character values.
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      require(R.contains(svec_axpy(mult[u][v], Scalar(-1), mult[v][u])), "field-not-splitting",
              "endomorphism ring modulo radical is not commutative");
    }
  }
  return static_cast<int>(n - rad.size());
}

bool iso_test(const CompletedObject& X, const CompletedObject& Y) {
  DecomposeOptions opt;
  opt.certify = false;
  return decompose(X, opt).parts == decompose(Y, opt).parts;
}

}  // namespace gsym
