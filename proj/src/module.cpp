/**
 * @file module.cpp
 * @brief One-sided modules and the actions of the spread category on them.
 */
#include "gsym/module.hpp"

#include <algorithm>
#include <map>

#include "gsym/error.hpp"
#include "gsym/tensor.hpp"

namespace gsym {

namespace {

std::vector<int> arrow_slots(const Algebra& A) {
  std::vector<int> slot(A.arrows.size(), -1);
  int k = A.nvert;
  for (size_t a = 0; a < A.arrows.size(); ++a) {
    if (A.arrow_index[a] >= 0) slot[a] = k++;
  }
  return slot;
}

/** Side data of a module for tensor quotients. */
TensorSide module_side(const Module& V) {
  const Algebra& A = *V.act->A;
  TensorSide s;
  s.dim = V.dim;
  s.vert = V.vert;
  for (size_t k = A.nvert; k < A.generators.size(); ++k) s.arrow.push_back(V.action[A.generators[k]]);
  return s;
}

/** Restricts a family of operators to the span of the given independent vectors. */
Module image_module(GroupActionPtr act, bool right, const std::vector<SVec>& basis, const std::vector<Mat>& gen_ops,
                    uint32_t ambient, std::string name) {
  Echelon ech(ambient, true);
  for (const auto& b : basis) ech.insert(b);
  const uint32_t d = static_cast<uint32_t>(basis.size());
  std::vector<Mat> gen;
  for (const auto& op : gen_ops) {
    Mat m(d, d);
    for (uint32_t k = 0; k < d; ++k) {
      SVec c;
      require(ech.coords(op.apply(basis[k]), c), "internal-error", "image is not a submodule");
      m.set_col(k, std::move(c));
    }
    gen.push_back(std::move(m));
  }
  return make_module(std::move(act), right, d, gen, std::move(name));
}

}  // namespace

Module make_module(GroupActionPtr act, bool right, uint32_t dim, const std::vector<Mat>& gen, std::string name) {
  const Algebra& A = *act->A;
  require(gen.size() == A.generators.size(), "internal-error", "generator action count mismatch");
  Module V;
  V.act = act;
  V.right = right;
  V.dim = dim;
  V.name = std::move(name);
  std::vector<int> slot = arrow_slots(A);
  V.action.resize(A.dim);
  for (uint32_t u = 0; u < A.dim; ++u) {
    const Path& p = A.basis[u];
    if (p.word.empty()) {
      V.action[u] = gen[p.src];
      continue;
    }
    Mat m = gen[slot[p.word[0]]];
    for (size_t k = 1; k < p.word.size(); ++k) {
      const Mat& nxt = gen[slot[p.word[k]]];
      m = right ? nxt * m : m * nxt;
    }
    V.action[u] = std::move(m);
  }
  V.vert.assign(dim, -1);
  for (uint32_t m = 0; m < dim; ++m) {
    for (int v = 0; v < A.nvert; ++v) {
      const SVec& c = gen[v].col(m);
      if (c.empty()) continue;
      require(c.size() == 1 && c[0].i == m && c[0].v.is_one() && V.vert[m] < 0, "internal-error",
              "module basis is not Peirce-homogeneous");
      V.vert[m] = v;
    }
    require(V.vert[m] >= 0, "internal-error", "vertex idempotents do not act as a unit");
  }
  return V;
}

Module proj_left_module(GroupActionPtr act, int i) {
  const Algebra& A = *act->A;
  std::vector<uint32_t> P = A.left_proj_basis(i);
  std::vector<int> pos(A.dim, -1);
  for (size_t k = 0; k < P.size(); ++k) pos[P[k]] = static_cast<int>(k);
  const uint32_t d = static_cast<uint32_t>(P.size());
  std::vector<Mat> gen;
  for (uint32_t g : A.generators) {
    Mat m(d, d);
    for (uint32_t k = 0; k < d; ++k) {
      SVec c;
      for (const auto& e : A.mult[g][P[k]]) c.push_back({static_cast<uint32_t>(pos[e.i]), e.v});
      std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
      m.set_col(k, std::move(c));
    }
    gen.push_back(std::move(m));
  }
  return make_module(act, false, d, gen, "A" + A.vertex_name(i));
}

Module proj_right_module(GroupActionPtr act, int j) {
  const Algebra& A = *act->A;
  std::vector<uint32_t> Q = A.right_proj_basis(j);
  std::vector<int> pos(A.dim, -1);
  for (size_t k = 0; k < Q.size(); ++k) pos[Q[k]] = static_cast<int>(k);
  const uint32_t d = static_cast<uint32_t>(Q.size());
  std::vector<Mat> gen;
  for (uint32_t g : A.generators) {
    Mat m(d, d);
    for (uint32_t k = 0; k < d; ++k) {
      SVec c;
      for (const auto& e : A.mult[Q[k]][g]) c.push_back({static_cast<uint32_t>(pos[e.i]), e.v});
      std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
      m.set_col(k, std::move(c));
    }
    gen.push_back(std::move(m));
  }
  return make_module(act, true, d, gen, A.vertex_name(j) + "A");
}

Module simple_left_module(GroupActionPtr act, int i) {
  const Algebra& A = *act->A;
  std::vector<Mat> gen;
  for (uint32_t g : A.generators) gen.push_back(g == A.vertex_index[i] ? Mat::identity(1) : Mat(1, 1));
  return make_module(act, false, 1, gen, "S" + std::to_string(i + 1));
}

Module act_left(const XMor& e, const Module& V) {
  require(!V.right, "internal-error", "act_left needs a left module");
  const GroupAction& G = *V.act;
  const Algebra& A = *G.A;
  const Bimodule& M = *e.src;
  const uint32_t n = G.size();
  std::vector<TensorQ> q;
  std::vector<uint32_t> off;
  uint32_t total = 0;
  TensorSide vs = module_side(V);
  for (uint32_t g = 0; g < n; ++g) {
    q.push_back(tensor_quotient(right_side(M, g), vs));
    off.push_back(total);
    total += q.back().dim;
  }
  // E = e (x) id: summand g goes to summand a through e_{a g^-1}.
  Mat E(total, total);
  Accum acc(total);
  for (uint32_t g = 0; g < n; ++g) {
    for (uint32_t k = 0; k < q[g].dim; ++k) {
      auto [m, v] = q[g].pairs[q[g].basis[k]];
      SVec vv = svec_unit(v);
      for (uint32_t a = 0; a < n; ++a) {
        const Mat& c = e.comp[G.grp.op(a, G.grp.inv(g))];
        if (c.is_zero()) continue;
        q[a].project_into(c.col(m), vv, Scalar(1), off[a], acc);
      }
      E.set_col(off[g] + k, acc.take());
    }
  }
  // Left action on summand g: a -> M.left(g(a)) (x) id.
  std::vector<Mat> ops;
  for (uint32_t u : A.generators) {
    Mat op(total, total);
    for (uint32_t g = 0; g < n; ++g) {
      Mat lu = left_action(M, G.mat[g].col(u));
      for (uint32_t k = 0; k < q[g].dim; ++k) {
        auto [m, v] = q[g].pairs[q[g].basis[k]];
        q[g].project_into(lu.col(m), svec_unit(v), Scalar(1), off[g], acc);
        op.set_col(off[g] + k, acc.take());
      }
    }
    ops.push_back(std::move(op));
  }
  std::vector<SVec> basis;
  Echelon ech(total);
  for (uint32_t k = 0; k < total; ++k) {
    if (ech.insert(E.col(k))) basis.push_back(E.col(k));
  }
  return image_module(V.act, false, basis, ops, total, "(" + M.name + ")*" + V.name);
}

Module act_right(const Module& V, const XMor& e) {
  require(V.right, "internal-error", "act_right needs a right module");
  const GroupAction& G = *V.act;
  const Algebra& A = *G.A;
  const Bimodule& M = *e.src;
  const uint32_t n = G.size();
  std::vector<TensorQ> q;
  std::vector<uint32_t> off;
  uint32_t total = 0;
  TensorSide vs = module_side(V);
  for (uint32_t g = 0; g < n; ++g) {
    q.push_back(tensor_quotient(vs, left_side(M, g)));
    off.push_back(total);
    total += q.back().dim;
  }
  Mat E(total, total);
  Accum acc(total);
  for (uint32_t g = 0; g < n; ++g) {
    for (uint32_t k = 0; k < q[g].dim; ++k) {
      auto [v, m] = q[g].pairs[q[g].basis[k]];
      SVec vv = svec_unit(v);
      for (uint32_t a = 0; a < n; ++a) {
        const Mat& c = e.comp[G.grp.op(a, G.grp.inv(g))];
        if (c.is_zero()) continue;
        q[a].project_into(vv, c.col(m), Scalar(1), off[a], acc);
      }
      E.set_col(off[g] + k, acc.take());
    }
  }
  std::vector<Mat> ops;
  for (uint32_t u : A.generators) {
    Mat op(total, total);
    for (uint32_t g = 0; g < n; ++g) {
      Mat ru = right_action(M, G.mat[g].col(u));
      for (uint32_t k = 0; k < q[g].dim; ++k) {
        auto [v, m] = q[g].pairs[q[g].basis[k]];
        q[g].project_into(svec_unit(v), ru.col(m), Scalar(1), off[g], acc);
        op.set_col(off[g] + k, acc.take());
      }
    }
    ops.push_back(std::move(op));
  }
  std::vector<SVec> basis;
  Echelon ech(total);
  for (uint32_t k = 0; k < total; ++k) {
    if (ech.insert(E.col(k))) basis.push_back(E.col(k));
  }
  return image_module(V.act, true, basis, ops, total, V.name + "*(" + M.name + ")");
}

std::vector<uint32_t> top_multiplicities(const Module& V) {
  const Algebra& A = *V.act->A;
  std::vector<uint32_t> top(A.nvert, 0);
  std::vector<uint32_t> total(A.nvert, 0);
  for (int v : V.vert) ++total[v];
  std::vector<Echelon> rad(A.nvert, Echelon(V.dim));
  for (int ai : A.arrow_index) {
    if (ai < 0) continue;
    int t = V.right ? A.src(ai) : A.tgt(ai);
    for (uint32_t m = 0; m < V.dim; ++m) {
      const SVec& c = V.action[ai].col(m);
      if (!c.empty()) rad[t].insert(c);
    }
  }
  for (int v = 0; v < A.nvert; ++v) top[v] = total[v] - rad[v].rank();
  return top;
}

bool is_projective(const Module& V) {
  const Algebra& A = *V.act->A;
  auto top = top_multiplicities(V);
  size_t d = 0;
  for (int v = 0; v < A.nvert; ++v) d += top[v] * (V.right ? A.right_proj_basis(v).size() : A.left_proj_basis(v).size());
  return d == V.dim;
}

bool projective_modules_isomorphic(const Module& V, const Module& W) {
  require(is_projective(V) && is_projective(W), "unsupported-object", "module isomorphism is only decided for projectives");
  return V.right == W.right && V.dim == W.dim && top_multiplicities(V) == top_multiplicities(W);
}

}  // namespace gsym
