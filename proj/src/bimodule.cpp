/**
 * @file bimodule.cpp
 * @brief Bimodule construction, twisting, hom spaces and spread morphisms.
 */
#include "gsym/bimodule.hpp"

#include <algorithm>
#include <map>

#include "gsym/error.hpp"

namespace gsym {

namespace {

/** Position of each arrow among the algebra generators (-1 when zero). */
std::vector<int> arrow_generator_slot(const Algebra& A) {
  std::vector<int> slot(A.arrows.size(), -1);
  int k = A.nvert;
  for (size_t a = 0; a < A.arrows.size(); ++a) {
    if (A.arrow_index[a] >= 0) slot[a] = k++;
  }
  return slot;
}

int detect_vertex(const std::vector<Mat>& gen, int nvert, uint32_t m) {
  int found = -1;
  for (int v = 0; v < nvert; ++v) {
    const SVec& c = gen[v].col(m);
    if (c.empty()) continue;
    require(c.size() == 1 && c[0].i == m && c[0].v.is_one() && found < 0, "internal-error",
            "bimodule basis is not Peirce-homogeneous");
    found = v;
  }
  require(found >= 0, "internal-error", "vertex idempotents do not act as a unit");
  return found;
}

}  // namespace

BimodPtr make_bimodule(GroupActionPtr act, uint32_t dim, const std::vector<Mat>& left_gen,
                       const std::vector<Mat>& right_gen, BimodKind kind, int i, int j, std::string name,
                       std::shared_ptr<const TensorData> tensor) {
  const Algebra& A = *act->A;
  require(left_gen.size() == A.generators.size() && right_gen.size() == A.generators.size(), "internal-error",
          "generator action count mismatch");
  auto M = std::make_shared<Bimodule>();
  M->act = act;
  M->dim = dim;
  M->kind = kind;
  M->i = i;
  M->j = j;
  M->name = std::move(name);
  M->tensor = std::move(tensor);
  std::vector<int> slot = arrow_generator_slot(A);
  M->left.resize(A.dim);
  M->right.resize(A.dim);
  for (uint32_t u = 0; u < A.dim; ++u) {
    const Path& p = A.basis[u];
    if (p.word.empty()) {
      M->left[u] = left_gen[p.src];
      M->right[u] = right_gen[p.src];
      continue;
    }
    Mat l = left_gen[slot[p.word[0]]];
    for (size_t k = 1; k < p.word.size(); ++k) l = l * left_gen[slot[p.word[k]]];
    Mat r = right_gen[slot[p.word.back()]];
    for (size_t k = p.word.size() - 1; k-- > 0;) r = r * right_gen[slot[p.word[k]]];
    M->left[u] = std::move(l);
    M->right[u] = std::move(r);
  }
  M->lvert.resize(dim);
  M->rvert.resize(dim);
  for (uint32_t m = 0; m < dim; ++m) {
    M->lvert[m] = detect_vertex(left_gen, A.nvert, m);
    M->rvert[m] = detect_vertex(right_gen, A.nvert, m);
  }
  return M;
}

Mat left_action(const Bimodule& M, const SVec& a) {
  Mat r(M.dim, M.dim);
  for (const auto& e : a) r += e.v * M.left[e.i];
  return r;
}

Mat right_action(const Bimodule& M, const SVec& a) {
  Mat r(M.dim, M.dim);
  for (const auto& e : a) r += e.v * M.right[e.i];
  return r;
}

// ---------------------------------------------------------------- constructors

BimodPtr regular_bimodule(GroupActionPtr act, int block) {
  const Algebra& A = *act->A;
  std::vector<uint32_t> sub;
  std::vector<int> pos(A.dim, -1);
  for (uint32_t b = 0; b < A.dim; ++b) {
    if (block < 0 || A.block_of_vertex[A.src(b)] == block) {
      pos[b] = static_cast<int>(sub.size());
      sub.push_back(b);
    }
  }
  const uint32_t d = static_cast<uint32_t>(sub.size());
  auto restricted = [&](const SVec& v) {
    SVec out;
    for (const auto& e : v) {
      require(pos[e.i] >= 0, "internal-error", "block not closed under multiplication");
      out.push_back({static_cast<uint32_t>(pos[e.i]), e.v});
    }
    return out;
  };
  std::vector<Mat> lg, rg;
  for (uint32_t g : A.generators) {
    Mat l(d, d), r(d, d);
    for (uint32_t k = 0; k < d; ++k) {
      l.set_col(k, restricted(A.mult[g][sub[k]]));
      r.set_col(k, restricted(A.mult[sub[k]][g]));
    }
    lg.push_back(std::move(l));
    rg.push_back(std::move(r));
  }
  std::string name = block < 0 ? "A" : (A.nblocks == 1 ? "A" : "A_" + std::to_string(block + 1));
  return make_bimodule(act, d, lg, rg, BimodKind::Regular, block, -1, name);
}

BimodPtr proj_bimodule(GroupActionPtr act, int i, int j) {
  const Algebra& A = *act->A;
  require(i >= 0 && i < A.nvert && j >= 0 && j < A.nvert, "index-out-of-range", "vertex index out of range");
  std::vector<uint32_t> P = A.left_proj_basis(i), Q = A.right_proj_basis(j);
  std::vector<int> ppos(A.dim, -1), qpos(A.dim, -1);
  for (size_t k = 0; k < P.size(); ++k) ppos[P[k]] = static_cast<int>(k);
  for (size_t k = 0; k < Q.size(); ++k) qpos[Q[k]] = static_cast<int>(k);
  const uint32_t np = static_cast<uint32_t>(P.size()), nq = static_cast<uint32_t>(Q.size());
  const uint32_t d = np * nq;
  std::vector<Mat> lg, rg;
  for (uint32_t g : A.generators) {
    Mat l(d, d), r(d, d);
    for (uint32_t a = 0; a < np; ++a) {
      SVec ga = A.mult[g][P[a]];
      for (uint32_t b = 0; b < nq; ++b) {
        SVec col;
        for (const auto& e : ga) col.push_back({static_cast<uint32_t>(ppos[e.i]) * nq + b, e.v});
        std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.i < y.i; });
        l.set_col(a * nq + b, std::move(col));
      }
    }
    for (uint32_t b = 0; b < nq; ++b) {
      SVec bg = A.mult[Q[b]][g];
      for (uint32_t a = 0; a < np; ++a) {
        SVec col;
        for (const auto& e : bg) col.push_back({a * nq + static_cast<uint32_t>(qpos[e.i]), e.v});
        r.set_col(a * nq + b, std::move(col));
      }
    }
    lg.push_back(std::move(l));
    rg.push_back(std::move(r));
  }
  std::string name = "A" + A.vertex_name(i) + "(x)" + A.vertex_name(j) + "A";
  return make_bimodule(act, d, lg, rg, BimodKind::Projective, i, j, name);
}

BimodPtr simple_bimodule(GroupActionPtr act, int l, int r) {
  const Algebra& A = *act->A;
  std::vector<Mat> lg, rg;
  for (uint32_t g : A.generators) {
    Mat a(1, 1), b(1, 1);
    if (g == A.vertex_index[l]) a = Mat::identity(1);
    if (g == A.vertex_index[r]) b = Mat::identity(1);
    lg.push_back(a);
    rg.push_back(b);
  }
  return make_bimodule(act, 1, lg, rg, BimodKind::Simple, l, r, "L(" + A.vertex_name(l) + "," + A.vertex_name(r) + ")");
}

BimodPtr twist(const BimodPtr& M, uint32_t g, uint32_t h) {
  const GroupAction& G = *M->act;
  const Algebra& A = *G.A;
  if (g == 0 && h == 0) return M;
  std::vector<Mat> lg, rg;
  for (uint32_t u : A.generators) {
    lg.push_back(left_action(*M, G.mat[g].col(u)));
    rg.push_back(right_action(*M, G.mat[h].col(u)));
  }
  std::string name = "^" + G.element_name(g) + "(" + M->name + ")^" + G.element_name(h);
  return make_bimodule(M->act, M->dim, lg, rg, BimodKind::Twist, M->i, M->j, name, nullptr);
}

void check_bimodule(const Bimodule& M) {
  const Algebra& A = M.alg();
  Mat id = Mat::identity(M.dim);
  require(left_action(M, A.one()) == id && right_action(M, A.one()) == id, "internal-error",
          M.name + ": actions are not unital");
  for (uint32_t u = 0; u < A.dim; ++u) {
    for (uint32_t v = 0; v < A.dim; ++v) {
      require(M.left[u] * M.left[v] == left_action(M, A.mult[u][v]), "internal-error",
              M.name + ": left action is not multiplicative");
      require(M.right[v] * M.right[u] == right_action(M, A.mult[u][v]), "internal-error",
              M.name + ": right action is not multiplicative");
      require(M.left[u] * M.right[v] == M.right[v] * M.left[u], "internal-error",
              M.name + ": left and right actions do not commute");
    }
  }
}

// ---------------------------------------------------------------- hom spaces

bool is_twisted_map(const Bimodule& M, const Bimodule& N, uint32_t g, const Mat& f) {
  const GroupAction& G = *M.act;
  const Algebra& A = *G.A;
  if (f.rows() != N.dim || f.cols() != M.dim) return false;
  for (uint32_t u : A.generators) {
    const SVec& gu = G.mat[g].col(u);
    if (f * M.left[u] != left_action(N, gu) * f) return false;
    if (f * M.right[u] != right_action(N, gu) * f) return false;
  }
  return true;
}

std::vector<Mat> hom_basis(const Bimodule& M, const Bimodule& N, uint32_t g) {
  const GroupAction& G = *M.act;
  const Algebra& A = *G.A;
  const auto& vp = G.vperm[g];
  // Unknown F(s, m) exists when s lies in e_{g(l)} N e_{g(r)} for m in e_l M e_r.
  std::map<std::pair<int, int>, std::vector<uint32_t>> n_by_grade;
  for (uint32_t s = 0; s < N.dim; ++s) n_by_grade[{N.lvert[s], N.rvert[s]}].push_back(s);
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> vars_of_col(M.dim);  // (s, var)
  std::vector<std::pair<uint32_t, uint32_t>> var_pos;                           // var -> (s, m)
  for (uint32_t m = 0; m < M.dim; ++m) {
    auto it = n_by_grade.find({vp[M.lvert[m]], vp[M.rvert[m]]});
    if (it == n_by_grade.end()) continue;
    for (uint32_t s : it->second) {
      vars_of_col[m].push_back({s, static_cast<uint32_t>(var_pos.size())});
      var_pos.push_back({s, m});
    }
  }
  const uint32_t nv = static_cast<uint32_t>(var_pos.size());
  if (nv == 0) return {};
  Echelon ech(nv);
  for (uint32_t u : A.generators) {
    if (A.basis[u].word.empty()) continue;  // vertex equations hold by construction
    const SVec& gu = G.mat[g].col(u);
    for (int side = 0; side < 2; ++side) {
      const Mat& actM = side == 0 ? M.left[u] : M.right[u];
      Mat actN = side == 0 ? left_action(N, gu) : right_action(N, gu);
      for (uint32_t m = 0; m < M.dim; ++m) {
        // F(act_M m) - act_N F(m) = 0, one equation per coordinate t of N.
        std::map<uint32_t, std::map<uint32_t, Scalar>> eq;
        for (const auto& e : actM.col(m)) {
          for (const auto& [t, v] : vars_of_col[e.i]) eq[t][v] += e.v;
        }
        for (const auto& [s, v] : vars_of_col[m]) {
          for (const auto& e : actN.col(s)) eq[e.i][v] -= e.v;
        }
        for (auto& [t, row] : eq) {
          SVec r;
          for (auto& [v, c] : row) {
            if (!c.is_zero()) r.push_back({v, c});
          }
          if (!r.empty()) ech.insert(r);
        }
      }
    }
  }
  std::vector<Mat> out;
  for (const auto& x : ech.nullspace()) {
    Mat f(N.dim, M.dim);
    for (const auto& e : x) f.col(var_pos[e.i].second).push_back({var_pos[e.i].first, e.v});
    for (uint32_t m = 0; m < M.dim; ++m) {
      std::sort(f.col(m).begin(), f.col(m).end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool plain_isomorphic(const Bimodule& M, const Bimodule& N, uint32_t g, Mat* witness) {
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  auto H = hom_basis(M, N, g);
  if (H.empty()) return false;
  auto accept = [&](const Mat& f) {
    if (!invertible(f)) return false;
    if (witness) *witness = f;
    return true;
  };
  for (const auto& f : H) {
    if (accept(f)) return true;
  }
  // Deterministic small-integer combinations.
  for (int round = 1; round <= 6; ++round) {
    Mat f(N.dim, M.dim);
    for (size_t k = 0; k < H.size(); ++k) f += Scalar(static_cast<long long>(1 + (k * round + round * round) % 7)) * H[k];
    if (accept(f)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- spread morphisms

XMor x_zero(const BimodPtr& M, const BimodPtr& N) {
  XMor f;
  f.src = M;
  f.tgt = N;
  f.comp.assign(M->act->size(), Mat(N->dim, M->dim));
  return f;
}

XMor x_identity(const BimodPtr& M) {
  XMor f = x_zero(M, M);
  f.comp[0] = Mat::identity(M->dim);
  return f;
}

XMor x_single(const BimodPtr& M, const BimodPtr& N, uint32_t g, Mat m) {
  XMor f = x_zero(M, N);
  require(m.rows() == N->dim && m.cols() == M->dim, "internal-error", "component has the wrong shape");
  f.comp[g] = std::move(m);
  return f;
}

XMor x_compose(const XMor& g, const XMor& f) {
  require(g.src->dim == f.tgt->dim && g.comp.size() == f.comp.size(), "internal-error",
          "composition of incompatible morphisms");
  const AbelianGroup& G = f.src->act->grp;
  XMor h = x_zero(f.src, g.tgt);
  for (uint32_t a = 0; a < G.size(); ++a) {
    if (f.comp[a].is_zero()) continue;
    for (uint32_t b = 0; b < G.size(); ++b) {
      if (g.comp[b].is_zero()) continue;
      h.comp[G.op(a, b)] += g.comp[b] * f.comp[a];
    }
  }
  return h;
}

XMor x_add(const XMor& a, const XMor& b) {
  XMor r = a;
  for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] += b.comp[k];
  return r;
}

XMor x_sub(const XMor& a, const XMor& b) { return x_add(a, x_scale(Scalar(-1), b)); }

XMor x_scale(const Scalar& s, const XMor& a) {
  XMor r = a;
  for (auto& c : r.comp) c = s * c;
  return r;
}

bool x_equal(const XMor& a, const XMor& b) {
  if (a.comp.size() != b.comp.size()) return false;
  for (size_t k = 0; k < a.comp.size(); ++k) {
    if (a.comp[k] != b.comp[k]) return false;
  }
  return true;
}

bool x_is_zero(const XMor& a) {
  return std::all_of(a.comp.begin(), a.comp.end(), [](const Mat& m) { return m.is_zero(); });
}

bool x_valid(const XMor& f) {
  for (uint32_t g = 0; g < f.comp.size(); ++g) {
    if (!f.comp[g].is_zero() && !is_twisted_map(*f.src, *f.tgt, g, f.comp[g])) return false;
  }
  return true;
}

SVec x_flatten(const XMor& f) {
  SVec out;
  const uint32_t rows = f.tgt->dim, cols = f.src->dim;
  for (uint32_t g = 0; g < f.comp.size(); ++g) {
    for (uint32_t c = 0; c < cols; ++c) {
      for (const auto& e : f.comp[g].col(c)) out.push_back({(g * cols + c) * rows + e.i, e.v});
    }
  }
  return out;
}

XMor x_unflatten(const BimodPtr& M, const BimodPtr& N, const SVec& v) {
  XMor f = x_zero(M, N);
  const uint32_t rows = N->dim, cols = M->dim;
  for (const auto& e : v) {
    uint32_t r = e.i % rows, rest = e.i / rows;
    f.comp[rest / cols].col(rest % cols).push_back({r, e.v});
  }
  return f;
}

size_t XHomBasis::total() const {
  size_t t = 0;
  for (const auto& c : comp) t += c.size();
  return t;
}

std::vector<XMor> XHomBasis::morphisms(const BimodPtr& M, const BimodPtr& N) const {
  std::vector<XMor> out;
  for (uint32_t g = 0; g < comp.size(); ++g) {
    for (const auto& f : comp[g]) out.push_back(x_single(M, N, g, f));
  }
  return out;
}

XHomBasis x_hom_basis(const BimodPtr& M, const BimodPtr& N) {
  XHomBasis h;
  for (uint32_t g = 0; g < M->act->size(); ++g) h.comp.push_back(hom_basis(*M, *N, g));
  return h;
}

}  // namespace gsym
