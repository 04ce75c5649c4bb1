/**
 * @file tensor.cpp
 * @brief Tensor quotients, tensor products of objects and morphisms, unitors, associators, flips.
 */
#include "gsym/tensor.hpp"

#include <algorithm>

#include "gsym/error.hpp"

namespace gsym {

namespace {

std::vector<uint32_t> arrow_generators(const Algebra& A) {
  return std::vector<uint32_t>(A.generators.begin() + A.nvert, A.generators.end());
}

const SVec kEmpty;

}  // namespace

// ---------------------------------------------------------------- quotients

TensorSide right_side(const Bimodule& M, uint32_t g) {
  const GroupAction& G = *M.act;
  TensorSide s;
  s.dim = M.dim;
  const auto& vinv = G.vperm[G.grp.inv(g)];
  for (uint32_t m = 0; m < M.dim; ++m) s.vert.push_back(vinv[M.rvert[m]]);
  for (uint32_t u : arrow_generators(*G.A)) s.arrow.push_back(g == 0 ? M.right[u] : right_action(M, G.mat[g].col(u)));
  return s;
}

TensorSide left_side(const Bimodule& M, uint32_t g) {
  const GroupAction& G = *M.act;
  TensorSide s;
  s.dim = M.dim;
  const auto& vinv = G.vperm[G.grp.inv(g)];
  for (uint32_t m = 0; m < M.dim; ++m) s.vert.push_back(vinv[M.lvert[m]]);
  for (uint32_t u : arrow_generators(*G.A)) s.arrow.push_back(g == 0 ? M.left[u] : left_action(M, G.mat[g].col(u)));
  return s;
}

TensorQ tensor_quotient(const TensorSide& X, const TensorSide& Y) {
  TensorQ q;
  q.xdim = X.dim;
  q.ydim = Y.dim;
  q.pair_of.assign(static_cast<size_t>(X.dim) * Y.dim, -1);
  for (uint32_t x = 0; x < X.dim; ++x) {
    for (uint32_t y = 0; y < Y.dim; ++y) {
      if (X.vert[x] != Y.vert[y]) continue;
      q.pair_of[static_cast<size_t>(x) * Y.dim + y] = static_cast<int32_t>(q.pairs.size());
      q.pairs.push_back({x, y});
    }
  }
  const uint32_t np = static_cast<uint32_t>(q.pairs.size());
  auto rev = [np](uint32_t k) { return np - 1 - k; };
  Echelon rel(np);
  Accum acc(np);
  for (size_t a = 0; a < X.arrow.size(); ++a) {
    const Mat& ra = X.arrow[a];
    const Mat& la = Y.arrow[a];
    for (uint32_t x = 0; x < X.dim; ++x) {
      const SVec& xa = ra.col(x);
      for (uint32_t y = 0; y < Y.dim; ++y) {
        const SVec& ay = la.col(y);
        if (xa.empty() && ay.empty()) continue;
        // x.a (x) y - x (x) a.y, restricted to compatible pairs.
        for (const auto& e : xa) {
          int32_t p = q.pair_of[static_cast<size_t>(e.i) * Y.dim + y];
          if (p >= 0) acc.add(rev(static_cast<uint32_t>(p)), e.v);
        }
        for (const auto& e : ay) {
          int32_t p = q.pair_of[static_cast<size_t>(x) * Y.dim + e.i];
          if (p >= 0) acc.add(rev(static_cast<uint32_t>(p)), -e.v);
        }
        SVec r = acc.take();
        if (!r.empty()) rel.insert(r);
      }
    }
  }
  std::vector<int32_t> qidx(np, -1);
  std::vector<char> piv(np, 0);
  for (uint32_t p : rel.pivots()) piv[rev(p)] = 1;
  for (uint32_t p = 0; p < np; ++p) {
    if (piv[p]) continue;
    qidx[p] = static_cast<int32_t>(q.basis.size());
    q.basis.push_back(p);
  }
  q.dim = static_cast<uint32_t>(q.basis.size());
  q.proj.resize(np);
  for (uint32_t p = 0; p < np; ++p) {
    if (!piv[p]) {
      q.proj[p] = svec_unit(static_cast<uint32_t>(qidx[p]));
      continue;
    }
    SVec r = rel.reduce(svec_unit(rev(p)));
    SVec out;
    for (const auto& e : r) out.push_back({static_cast<uint32_t>(qidx[rev(e.i)]), e.v});
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    q.proj[p] = std::move(out);
  }
  return q;
}

const SVec& TensorQ::project_pair(uint32_t x, uint32_t y) const {
  int32_t p = pair_of[static_cast<size_t>(x) * ydim + y];
  return p < 0 ? kEmpty : proj[p];
}

void TensorQ::project_into(const SVec& xv, const SVec& yv, const Scalar& c, uint32_t offset, Accum& acc) const {
  for (const auto& a : xv) {
    for (const auto& b : yv) {
      const SVec& pr = project_pair(a.i, b.i);
      if (pr.empty()) continue;
      Scalar s = c * a.v * b.v;
      for (const auto& e : pr) acc.add_mul(e.i + offset, s, e.v);
    }
  }
}

SVec TensorQ::project(const SVec& xv, const SVec& yv) const {
  Accum acc(dim);
  project_into(xv, yv, Scalar(1), 0, acc);
  return acc.take();
}

// ---------------------------------------------------------------- objects

namespace {

BimodPtr build_tensor(const BimodPtr& X, const BimodPtr& Y, const std::vector<uint32_t>& elems, bool spread) {
  const GroupAction& G = *X->act;
  const Algebra& A = *G.A;
  require(X->act == Y->act, "internal-error", "tensor of bimodules over different actions");
  auto td = std::make_shared<TensorData>();
  td->X = X;
  td->Y = Y;
  td->elem = elems;
  uint32_t total = 0;
  for (uint32_t g : elems) {
    td->q.push_back(tensor_quotient(right_side(*X, 0), left_side(*Y, g)));
    td->offset.push_back(total);
    total += td->q.back().dim;
  }
  std::vector<Mat> lg, rg;
  Accum acc(total);
  for (uint32_t u : A.generators) {
    Mat l(total, total), r(total, total);
    for (size_t s = 0; s < elems.size(); ++s) {
      const TensorQ& q = td->q[s];
      const uint32_t off = td->offset[s];
      Mat ry = elems[s] == 0 ? Y->right[u] : right_action(*Y, G.mat[elems[s]].col(u));
      for (uint32_t k = 0; k < q.dim; ++k) {
        auto [x, y] = q.pairs[q.basis[k]];
        SVec yv = svec_unit(y), xv = svec_unit(x);
        q.project_into(X->left[u].col(x), yv, Scalar(1), off, acc);
        l.set_col(off + k, acc.take());
        q.project_into(xv, ry.col(y), Scalar(1), off, acc);
        r.set_col(off + k, acc.take());
      }
    }
    lg.push_back(std::move(l));
    rg.push_back(std::move(r));
  }
  std::string name = "(" + X->name + (spread ? " (x) " : " (x)_A ") + Y->name + ")";
  return make_bimodule(X->act, total, lg, rg, BimodKind::Tensor, -1, -1, name, td);
}

}  // namespace

BimodPtr x_tensor(const BimodPtr& X, const BimodPtr& Y) {
  std::vector<uint32_t> elems(X->act->size());
  for (uint32_t g = 0; g < elems.size(); ++g) elems[g] = g;
  return build_tensor(X, Y, elems, true);
}

BimodPtr plain_tensor(const BimodPtr& X, const BimodPtr& Y) { return build_tensor(X, Y, {0}, false); }

XMor x_tensor_mor(const XMor& f, const XMor& g, BimodPtr src, BimodPtr tgt) {
  if (!src) src = x_tensor(f.src, g.src);
  if (!tgt) tgt = x_tensor(f.tgt, g.tgt);
  const TensorData& S = *src->tensor;
  const TensorData& T = *tgt->tensor;
  require(S.q.size() == f.comp.size() && T.q.size() == f.comp.size(), "internal-error",
          "tensor of morphisms needs spread tensor products");
  require(S.X->dim == f.src->dim && S.Y->dim == g.src->dim && T.X->dim == f.tgt->dim && T.Y->dim == g.tgt->dim,
          "internal-error", "tensor factors do not match the morphisms");
  const AbelianGroup& G = src->act->grp;
  XMor h = x_zero(src, tgt);
  Accum acc(tgt->dim);
  // Component a maps summand c of the source to summand a^-1 b of the target
  // through f_a (x) g_{b c^-1}.
  for (uint32_t a = 0; a < G.size(); ++a) {
    if (f.comp[a].is_zero()) continue;
    std::vector<SVec> cols(src->dim);
    for (uint32_t c = 0; c < G.size(); ++c) {
      const TensorQ& qs = S.q[c];
      for (uint32_t b = 0; b < G.size(); ++b) {
        const Mat& gm = g.comp[G.op(b, G.inv(c))];
        if (gm.is_zero()) continue;
        uint32_t psi = G.op(G.inv(a), b);
        const TensorQ& qt = T.q[psi];
        for (uint32_t k = 0; k < qs.dim; ++k) {
          auto [x, y] = qs.pairs[qs.basis[k]];
          qt.project_into(f.comp[a].col(x), gm.col(y), Scalar(1), T.offset[psi], acc);
          SVec v = acc.take();
          if (!v.empty()) cols[S.offset[c] + k] = svec_axpy(cols[S.offset[c] + k], Scalar(1), v);
        }
      }
    }
    for (uint32_t k = 0; k < src->dim; ++k) h.comp[a].set_col(k, std::move(cols[k]));
  }
  return h;
}

// ---------------------------------------------------------------- unitors

XMor unitor_right_in(const BimodPtr& M, const BimodPtr& MA) {
  const TensorData& T = *MA->tensor;
  const Algebra& A = M->alg();
  XMor f = x_zero(M, MA);
  for (uint32_t m = 0; m < M->dim; ++m) f.comp[0].set_col(m, svec_shift(T.q[0].project(svec_unit(m), A.one()), T.offset[0]));
  return f;
}

XMor unitor_right_out(const BimodPtr& MA) {
  const TensorData& T = *MA->tensor;
  const GroupAction& G = *MA->act;
  const BimodPtr& M = T.X;
  XMor f = x_zero(MA, M);
  for (size_t s = 0; s < T.q.size(); ++s) {
    uint32_t psi_inv = G.grp.inv(T.elem[s]);
    const TensorQ& q = T.q[s];
    std::vector<Mat> act(q.ydim);
    std::vector<char> have(q.ydim, 0);
    for (uint32_t k = 0; k < q.dim; ++k) {
      auto [m, a] = q.pairs[q.basis[k]];
      if (!have[a]) {
        act[a] = right_action(*M, G.mat[psi_inv].col(a));
        have[a] = 1;
      }
      f.comp[0].set_col(T.offset[s] + k, act[a].col(m));
    }
  }
  return f;
}

XMor unitor_left_in(const BimodPtr& M, const BimodPtr& AM) {
  const TensorData& T = *AM->tensor;
  const Algebra& A = M->alg();
  XMor f = x_zero(M, AM);
  for (uint32_t m = 0; m < M->dim; ++m) f.comp[0].set_col(m, svec_shift(T.q[0].project(A.one(), svec_unit(m)), T.offset[0]));
  return f;
}

XMor unitor_left_out(const BimodPtr& AM) {
  const TensorData& T = *AM->tensor;
  const GroupAction& G = *AM->act;
  const BimodPtr& M = T.Y;
  XMor f = x_zero(AM, M);
  for (size_t s = 0; s < T.q.size(); ++s) {
    uint32_t beta = T.elem[s];
    const TensorQ& q = T.q[s];
    std::vector<Mat> act(q.xdim);
    std::vector<char> have(q.xdim, 0);
    for (uint32_t k = 0; k < q.dim; ++k) {
      auto [a, m] = q.pairs[q.basis[k]];
      if (!have[a]) {
        act[a] = left_action(*M, G.mat[beta].col(a));
        have[a] = 1;
      }
      f.comp[beta].set_col(T.offset[s] + k, act[a].col(m));
    }
  }
  return f;
}

// ---------------------------------------------------------------- associators

XMor associator(const BimodPtr& X_YZ, const BimodPtr& XY_Z) {
  const TensorData& S = *X_YZ->tensor;   // X (x) W, W = Y (x) Z
  const TensorData& T = *XY_Z->tensor;   // V (x) Z, V = X (x) Y
  const TensorData& W = *S.Y->tensor;
  const TensorData& V = *T.X->tensor;
  const AbelianGroup& G = X_YZ->act->grp;
  XMor f = x_zero(X_YZ, XY_Z);
  Accum acc(XY_Z->dim);
  for (uint32_t p1 = 0; p1 < G.size(); ++p1) {
    const TensorQ& qs = S.q[p1];
    for (uint32_t k = 0; k < qs.dim; ++k) {
      auto [x, w] = qs.pairs[qs.basis[k]];
      // Locate w in its inner summand p2.
      uint32_t p2 = 0;
      while (p2 + 1 < W.offset.size() && W.offset[p2 + 1] <= w) ++p2;
      const TensorQ& qw = W.q[p2];
      auto [y, z] = qw.pairs[qw.basis[w - W.offset[p2]]];
      SVec u = svec_shift(V.q[p1].project(svec_unit(x), svec_unit(y)), V.offset[p1]);
      uint32_t p = G.op(p1, p2);
      T.q[p].project_into(u, svec_unit(z), Scalar(1), T.offset[p], acc);
      f.comp[0].set_col(S.offset[p1] + k, acc.take());
    }
  }
  return f;
}

XMor associator_inv(const BimodPtr& XY_Z, const BimodPtr& X_YZ) {
  const TensorData& T = *XY_Z->tensor;
  const TensorData& S = *X_YZ->tensor;
  const TensorData& V = *T.X->tensor;
  const TensorData& W = *S.Y->tensor;
  const AbelianGroup& G = XY_Z->act->grp;
  XMor f = x_zero(XY_Z, X_YZ);
  Accum acc(X_YZ->dim);
  for (uint32_t p = 0; p < G.size(); ++p) {
    const TensorQ& qt = T.q[p];
    for (uint32_t k = 0; k < qt.dim; ++k) {
      auto [v, z] = qt.pairs[qt.basis[k]];
      uint32_t p1 = 0;
      while (p1 + 1 < V.offset.size() && V.offset[p1 + 1] <= v) ++p1;
      const TensorQ& qv = V.q[p1];
      auto [x, y] = qv.pairs[qv.basis[v - V.offset[p1]]];
      uint32_t p2 = G.op(G.inv(p1), p);
      SVec w = svec_shift(W.q[p2].project(svec_unit(y), svec_unit(z)), W.offset[p2]);
      S.q[p1].project_into(svec_unit(x), w, Scalar(1), S.offset[p1], acc);
      f.comp[0].set_col(T.offset[p] + k, acc.take());
    }
  }
  return f;
}

// ---------------------------------------------------------------- flip

FlipData flip(const BimodPtr& M, const BimodPtr& N, uint32_t g) {
  const AbelianGroup& G = M->act->grp;
  uint32_t gi = G.inv(g);
  FlipData d;
  d.source = plain_tensor(twist(M, gi, gi), N);
  d.target = plain_tensor(M, twist(N, g, g));
  const TensorQ& qs = d.source->tensor->q[0];
  const TensorQ& qt = d.target->tensor->q[0];
  Mat f(d.target->dim, d.source->dim), b(d.source->dim, d.target->dim);
  for (uint32_t k = 0; k < qs.dim; ++k) {
    auto [x, y] = qs.pairs[qs.basis[k]];
    f.set_col(k, qt.project_pair(x, y));
  }
  for (uint32_t k = 0; k < qt.dim; ++k) {
    auto [x, y] = qt.pairs[qt.basis[k]];
    b.set_col(k, qs.project_pair(x, y));
  }
  d.iso = x_single(d.source, d.target, gi, f);
  d.inverse = x_single(d.target, d.source, g, b);
  return d;
}

}  // namespace gsym
