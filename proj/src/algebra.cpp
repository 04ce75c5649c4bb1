/**
 * @file algebra.cpp
 * @brief Path bases, structure constants, radical, Nakayama permutation, trace.
 */
#include "gsym/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gsym/error.hpp"

namespace gsym {

namespace {

/** Enumerates all paths of length < bound, ordered by length then by word. */
std::vector<Path> enumerate_paths(const AlgebraPresentation& p, int bound) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (int v = 0; v < p.vertices; ++v) layer.push_back(Path{v, v, {}});
  for (int len = 0; len < bound && !layer.empty(); ++len) {
    for (const auto& q : layer) out.push_back(q);
    std::vector<Path> next;
    for (const auto& q : layer) {
      // Extend on the right: q * a requires src(q) = tgt(a).
      for (int a = 0; a < static_cast<int>(p.arrows.size()); ++a) {
        if (p.arrows[a].tgt != q.src) continue;
        Path r = q;
        if (r.word.empty()) r.tgt = p.arrows[a].tgt;
        r.word.push_back(a);
        r.src = p.arrows[a].src;
        next.push_back(r);
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) {
      if (x.word != y.word) return x.word < y.word;
      return x.src < y.src;
    });
    layer = std::move(next);
  }
  return out;
}

struct PathIndex {
  std::map<std::pair<int, std::vector<int>>, uint32_t> idx;  // key: (vertex for empty words, word)
  uint32_t find(const Path& q) const {
    auto it = idx.find({q.word.empty() ? q.src : -1, q.word});
    return it == idx.end() ? UINT32_MAX : it->second;
  }
};

/** Concatenation of paths (product x*y), or nullopt when zero by endpoints. */
bool concat(const Path& x, const Path& y, Path& out) {
  if (x.src != y.tgt) return false;
  out.tgt = x.tgt;
  out.src = y.src;
  out.word = x.word;
  out.word.insert(out.word.end(), y.word.begin(), y.word.end());
  return true;
}

}  // namespace

// ---------------------------------------------------------------- build

AlgebraPtr build_algebra(const AlgebraPresentation& p) {
  require(p.vertices >= 1, "bad-presentation", "quiver needs at least one vertex");
  for (const auto& a : p.arrows) {
    require(a.src >= 0 && a.src < p.vertices && a.tgt >= 0 && a.tgt < p.vertices, "bad-presentation",
            "arrow " + a.name + " has an endpoint outside the quiver");
  }
  // Validate relations: parallel, well-formed paths.
  std::vector<std::pair<int, int>> rel_ends;
  for (const auto& rel : p.relations) {
    int s = -1, t = -1;
    for (const auto& term : rel) {
      require(!term.word.empty(), "bad-presentation", "relations must be combinations of nontrivial paths");
      for (int a : term.word) {
        require(a >= 0 && a < static_cast<int>(p.arrows.size()), "bad-presentation", "unknown arrow in relation");
      }
      for (size_t k = 0; k + 1 < term.word.size(); ++k) {
        require(p.arrows[term.word[k]].src == p.arrows[term.word[k + 1]].tgt, "bad-presentation",
                "relation contains a product of non-composable arrows");
      }
      int ts = p.arrows[term.word.back()].src, tt = p.arrows[term.word.front()].tgt;
      if (s < 0) {
        s = ts;
        t = tt;
      }
      require(s == ts && t == tt, "bad-presentation", "relation mixes paths with different endpoints");
    }
    rel_ends.push_back({s, t});
  }

  // Choose the length bound.
  int bound = p.truncate;
  const bool truncated = p.truncate > 0;
  std::vector<Path> paths;
  std::unique_ptr<Echelon> ideal;
  PathIndex pidx;
  auto build_ideal = [&](int bnd) {
    paths = enumerate_paths(p, bnd);
    const uint32_t n = static_cast<uint32_t>(paths.size());
    pidx.idx.clear();
    for (uint32_t k = 0; k < n; ++k) pidx.idx[{paths[k].word.empty() ? paths[k].src : -1, paths[k].word}] = k;
    // Reverse index order so that pivots fall on the longest paths.
    ideal = std::make_unique<Echelon>(n);
    auto rev = [n](uint32_t k) { return n - 1 - k; };
    for (size_t r = 0; r < p.relations.size(); ++r) {
      auto [s, t] = rel_ends[r];
      for (const auto& left : paths) {
        if (left.src != t) continue;
        for (const auto& right : paths) {
          if (right.tgt != s) continue;
          std::map<uint32_t, Scalar> acc;
          for (const auto& term : p.relations[r]) {
            Path mid{p.arrows[term.word.back()].src, p.arrows[term.word.front()].tgt, term.word};
            Path lm, full;
            concat(left, mid, lm);
            concat(lm, right, full);
            if (full.length() >= bnd) continue;
            uint32_t k = pidx.find(full);
            if (k == UINT32_MAX) continue;
            acc[rev(k)] += term.coeff;
          }
          SVec v;
          for (auto& [k, c] : acc) {
            if (!c.is_zero()) v.push_back({k, c});
          }
          if (!v.empty()) ideal->insert(v);
        }
      }
    }
  };
  if (truncated) {
    build_ideal(bound);
  } else {
    bool closed = false;
    for (int len = 1; len <= p.max_length && !closed; ++len) {
      build_ideal(len + 1);
      const uint32_t n = static_cast<uint32_t>(paths.size());
      closed = true;
      bool any = false;
      for (uint32_t k = 0; k < n; ++k) {
        if (paths[k].length() != len) continue;
        any = true;
        if (!ideal->contains(svec_unit(n - 1 - k))) {
          closed = false;
          break;
        }
      }
      if (!any) closed = true;
      if (closed) bound = len + 1;
    }
    require(closed, "not-finite-dimensional",
            "paths do not vanish up to length " + std::to_string(p.max_length) + "; add relations or truncate");
  }

  auto A = std::make_shared<Algebra>();
  A->presentation = p;
  A->field = p.field;
  A->nvert = p.vertices;
  A->arrows = p.arrows;
  const uint32_t n = static_cast<uint32_t>(paths.size());
  std::vector<int> path_to_basis(n, -1);
  std::vector<char> is_pivot(n, 0);
  for (uint32_t pv : ideal->pivots()) is_pivot[n - 1 - pv] = 1;
  for (uint32_t k = 0; k < n; ++k) {
    if (is_pivot[k]) continue;
    path_to_basis[k] = static_cast<int>(A->basis.size());
    A->basis.push_back(paths[k]);
  }
  A->dim = static_cast<uint32_t>(A->basis.size());
  require(A->dim > 0, "bad-presentation", "presentation collapses to the zero algebra");
  // Normal form of a path (as a vector in the basis).
  auto normal_form = [&](const Path& q) -> SVec {
    if (q.length() >= bound) return {};
    uint32_t k = pidx.find(q);
    if (k == UINT32_MAX) return {};
    SVec r = ideal->reduce(svec_unit(n - 1 - k));
    SVec out;
    for (const auto& e : r) {
      int b = path_to_basis[n - 1 - e.i];
      require(b >= 0, "internal-error", "normal form left a pivot path");
      out.push_back({static_cast<uint32_t>(b), e.v});
    }
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.i < y.i; });
    return out;
  };
  for (const auto& b : A->basis) {
    if (b.word.empty()) {
      A->labels.push_back(A->vertex_name(b.src));
    } else {
      std::string s;
      for (size_t k = 0; k < b.word.size(); ++k) s += (k ? "*" : "") + p.arrows[b.word[k]].name;
      A->labels.push_back(s);
    }
  }
  A->vertex_index.assign(p.vertices, 0);
  for (int v = 0; v < p.vertices; ++v) {
    SVec nf = normal_form(Path{v, v, {}});
    require(nf.size() == 1 && nf[0].v.is_one(), "bad-presentation", "relations kill a vertex idempotent");
    A->vertex_index[v] = nf[0].i;
  }
  A->arrow_index.assign(p.arrows.size(), -1);
  for (size_t a = 0; a < p.arrows.size(); ++a) {
    Path q{p.arrows[a].src, p.arrows[a].tgt, {static_cast<int>(a)}};
    SVec nf = normal_form(q);
    if (nf.size() == 1 && nf[0].v.is_one() && A->basis[nf[0].i].word == q.word) {
      A->arrow_index[a] = static_cast<int>(nf[0].i);
    } else {
      require(nf.empty(), "bad-presentation", "arrow " + p.arrows[a].name + " is not a basis element");
    }
  }
  for (int v = 0; v < p.vertices; ++v) A->generators.push_back(A->vertex_index[v]);
  for (int ai : A->arrow_index) {
    if (ai >= 0) A->generators.push_back(static_cast<uint32_t>(ai));
  }
  A->mult.assign(A->dim, std::vector<SVec>(A->dim));
  for (uint32_t u = 0; u < A->dim; ++u) {
    for (uint32_t v = 0; v < A->dim; ++v) {
      Path q;
      if (concat(A->basis[u], A->basis[v], q)) A->mult[u][v] = normal_form(q);
    }
  }
  // Blocks: connected components of the quiver.
  std::vector<int> parent(p.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : p.arrows) parent[find(a.src)] = find(a.tgt);
  std::map<int, int> comp;
  A->block_of_vertex.assign(p.vertices, 0);
  for (int v = 0; v < p.vertices; ++v) {
    int r = find(v);
    if (!comp.count(r)) comp[r] = static_cast<int>(comp.size());
    A->block_of_vertex[v] = comp[r];
  }
  A->nblocks = static_cast<int>(comp.size());
  // Regular representations.
  A->L.assign(A->dim, Mat(A->dim, A->dim));
  A->R.assign(A->dim, Mat(A->dim, A->dim));
  for (uint32_t u = 0; u < A->dim; ++u) {
    for (uint32_t v = 0; v < A->dim; ++v) {
      A->L[u].set_col(v, A->mult[u][v]);
      A->R[u].set_col(v, A->mult[v][u]);
    }
  }
  try {
    A->nu = nakayama(*A);
    A->self_injective = true;
    A->weakly_symmetric = true;
    for (int v = 0; v < A->nvert; ++v) A->weakly_symmetric = A->weakly_symmetric && A->nu[v] == v;
  } catch (const Error& e) {
    if (e.name() != "not-self-injective") throw;
    A->nakayama_failure = e.what();
  }
  return A;
}

// ---------------------------------------------------------------- helpers

SVec Algebra::one() const {
  SVec o;
  for (uint32_t vi : vertex_index) o.push_back({vi, Scalar(1)});
  std::sort(o.begin(), o.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  return o;
}

SVec Algebra::block_unit(int b) const {
  SVec o;
  for (int v = 0; v < nvert; ++v) {
    if (block_of_vertex[v] == b) o.push_back({vertex_index[v], Scalar(1)});
  }
  std::sort(o.begin(), o.end(), [](const Entry& a, const Entry& c) { return a.i < c.i; });
  return o;
}

uint32_t Algebra::block_dim(int b) const {
  uint32_t d = 0;
  for (const auto& q : basis) d += block_of_vertex[q.src] == b ? 1 : 0;
  return d;
}

SVec Algebra::mul(const SVec& a, const SVec& b) const {
  Accum acc(dim);
  for (const auto& x : a) {
    for (const auto& y : b) {
      const SVec& pr = mult[x.i][y.i];
      if (pr.empty()) continue;
      Scalar c = x.v * y.v;
      acc.axpy(c, pr);
    }
  }
  return acc.take();
}

std::vector<uint32_t> Algebra::left_proj_basis(int i) const {
  std::vector<uint32_t> out;
  for (uint32_t b = 0; b < dim; ++b) {
    if (basis[b].src == i) out.push_back(b);
  }
  return out;
}

std::vector<uint32_t> Algebra::right_proj_basis(int j) const {
  std::vector<uint32_t> out;
  for (uint32_t b = 0; b < dim; ++b) {
    if (basis[b].tgt == j) out.push_back(b);
  }
  return out;
}

std::vector<uint32_t> Algebra::corner_basis(int i, int j) const {
  std::vector<uint32_t> out;
  for (uint32_t b = 0; b < dim; ++b) {
    if (basis[b].tgt == i && basis[b].src == j) out.push_back(b);
  }
  return out;
}

std::string Algebra::render(const SVec& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : a) {
    std::string c = e.v.str();
    bool neg = e.v.is_rational() && e.v.rational().sign() < 0;
    if (!first) os << (neg ? " - " : " + ");
    if (first && neg) os << "-";
    first = false;
    std::string mag = neg ? (-e.v).str() : c;
    if (!e.v.is_rational()) mag = "(" + c + ")";
    if (mag != "1") os << mag << "*";
    os << labels[e.i];
  }
  return os.str();
}

// ---------------------------------------------------------------- radical

std::vector<SVec> radical_basis(uint32_t dim, const std::vector<std::vector<SVec>>& mult) {
  if (dim == 0) return {};
  // Trace form Tr(L_u L_v) = Tr(L_{uv}) = sum_w c_{uv}^w Tr(L_w); Tr(L_w) = sum_u c_{wu}^u.
  std::vector<Scalar> tr(dim);
  for (uint32_t w = 0; w < dim; ++w) {
    for (uint32_t u = 0; u < dim; ++u) tr[w] += svec_get(mult[w][u], u);
  }
  // Its kernel is the radical in characteristic 0.
  Mat gram(dim, dim);
  for (uint32_t v = 0; v < dim; ++v) {
    SVec col;
    for (uint32_t u = 0; u < dim; ++u) {
      Scalar t;
      for (const auto& e : mult[u][v]) t.add_mul(e.v, tr[e.i]);
      if (!t.is_zero()) col.push_back({u, t});
    }
    gram.set_col(v, std::move(col));
  }
  return kernel(gram);
}

// ---------------------------------------------------------------- Nakayama

namespace {

/** Left socle of A e_i inside the basis: kernel of left multiplication by all arrows. */
std::vector<SVec> left_socle(const Algebra& A, int i) {
  std::vector<uint32_t> sub = A.left_proj_basis(i);
  std::vector<std::vector<Scalar>> rows;
  Mat eq(0, 0);
  std::vector<SVec> equations;  // each equation over sub coordinates
  for (int ai : A.arrow_index) {
    if (ai < 0) continue;
    // For each output coordinate, collect the row of L[ai] restricted to sub.
    std::map<uint32_t, SVec> by_row;
    for (uint32_t k = 0; k < sub.size(); ++k) {
      for (const auto& e : A.L[ai].col(sub[k])) by_row[e.i].push_back({k, e.v});
    }
    for (auto& [r, v] : by_row) equations.push_back(v);
  }
  Echelon ech(static_cast<uint32_t>(sub.size()));
  for (const auto& e : equations) ech.insert(e);
  std::vector<SVec> out;
  for (const auto& x : ech.nullspace()) {
    SVec full;
    for (const auto& e : x) full.push_back({sub[e.i], e.v});
    std::sort(full.begin(), full.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    out.push_back(full);
  }
  return out;
}

std::vector<SVec> right_socle(const Algebra& A, int j) {
  std::vector<uint32_t> sub = A.right_proj_basis(j);
  std::vector<SVec> equations;
  for (int ai : A.arrow_index) {
    if (ai < 0) continue;
    std::map<uint32_t, SVec> by_row;
    for (uint32_t k = 0; k < sub.size(); ++k) {
      for (const auto& e : A.R[ai].col(sub[k])) by_row[e.i].push_back({k, e.v});
    }
    for (auto& [r, v] : by_row) equations.push_back(v);
  }
  Echelon ech(static_cast<uint32_t>(sub.size()));
  for (const auto& e : equations) ech.insert(e);
  std::vector<SVec> out;
  for (const auto& x : ech.nullspace()) {
    SVec full;
    for (const auto& e : x) full.push_back({sub[e.i], e.v});
    std::sort(full.begin(), full.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
    out.push_back(full);
  }
  return out;
}

}  // namespace

std::vector<int> nakayama(const Algebra& A) {
  std::vector<int> nu(A.nvert, -1);
  std::vector<int> right_type(A.nvert, -1);
  for (int i = 0; i < A.nvert; ++i) {
    auto soc = left_socle(A, i);
    require(soc.size() == 1, "not-self-injective",
            "socle of A" + A.vertex_name(i) + " has dimension " + std::to_string(soc.size()));
    int k = A.tgt(soc[0].front().i);
    for (const auto& e : soc[0]) {
      require(A.tgt(e.i) == k, "not-self-injective", "socle of A" + A.vertex_name(i) + " is not simple");
    }
    require(nu[k] < 0, "not-self-injective",
            "two indecomposable projectives share the socle S" + std::to_string(k + 1));
    nu[k] = i;
    auto rsoc = right_socle(A, i);
    require(rsoc.size() == 1, "not-self-injective",
            "socle of " + A.vertex_name(i) + "A has dimension " + std::to_string(rsoc.size()));
    int r = A.src(rsoc[0].front().i);
    for (int q = 0; q < A.nvert; ++q) {
      require(right_type[q] != r, "not-self-injective", "two right projectives share a socle");
    }
    right_type[i] = r;
  }
  for (int e = 0; e < A.nvert; ++e) {
    require(nu[e] >= 0, "not-self-injective", "Nakayama assignment is not a permutation");
    require(A.right_proj_basis(e).size() == A.left_proj_basis(nu[e]).size(), "not-self-injective",
            "dim " + A.vertex_name(e) + "A differs from dim A" + A.vertex_name(nu[e]));
  }
  return nu;
}

// ---------------------------------------------------------------- trace

Scalar TraceData::t(const SVec& a) const {
  Scalar s;
  size_t p = 0;
  for (const auto& e : a) {
    while (p < functional.size() && functional[p].i < e.i) ++p;
    if (p < functional.size() && functional[p].i == e.i) s += functional[p].v * e.v;
  }
  return s;
}

TraceData trace_dual(const Algebra& A) {
  require(A.self_injective, "no-adjunction", "algebra is not self-injective: " + A.nakayama_failure);
  TraceData td;
  // Adapted basis: paths of A e_i ordered by length; the socle vector replaces
  // the longest path it involves.
  std::vector<char> replaced(A.dim, 0);
  std::vector<SVec> socle_of(A.nvert);
  for (int i = 0; i < A.nvert; ++i) {
    auto soc = left_socle(A, i);
    SVec s = soc[0];
    uint32_t lead = s.front().i;
    for (const auto& e : s) {
      if (A.basis[e.i].length() >= A.basis[lead].length()) lead = e.i;
    }
    s = svec_scale(s, svec_get(s, lead).inv());
    socle_of[i] = s;
    replaced[lead] = 1;
    td.functional.push_back({lead, Scalar(1)});
  }
  std::sort(td.functional.begin(), td.functional.end(), [](const Entry& a, const Entry& b) { return a.i < b.i; });
  for (int i = 0; i < A.nvert; ++i) {
    for (uint32_t b : A.left_proj_basis(i)) {
      if (!replaced[b]) td.adapted.push_back(svec_unit(b));
    }
    td.adapted.push_back(socle_of[i]);
  }
  // t must vanish on every non-socle adapted element: replacing a path by the
  // socle vector only changes coordinates along that path, so t(x) = x_lead.
  for (int i = 0; i < A.nvert; ++i) require(td.t(socle_of[i]).is_one(), "internal-error", "trace normalisation");
  // Solve t(b a*) = delta_{b,a} for a* in the path basis.
  const uint32_t d = A.dim;
  Mat gram(d, d);  // gram(b, c) = t(adapted_b * basis_c)
  for (uint32_t c = 0; c < d; ++c) {
    SVec col;
    for (uint32_t b = 0; b < td.adapted.size(); ++b) {
      Scalar v = td.t(A.mul(td.adapted[b], svec_unit(c)));
      if (!v.is_zero()) col.push_back({b, v});
    }
    gram.set_col(c, std::move(col));
  }
  require(invertible(gram), "internal-error", "dual basis system is singular");
  Mat ginv = inverse(gram);
  for (uint32_t a = 0; a < td.adapted.size(); ++a) td.dual.push_back(ginv.col(a));
  return td;
}

// ---------------------------------------------------------------- catalogue of presentations

AlgebraPresentation dual_numbers_presentation(const FieldCtx* f) {
  AlgebraPresentation p;
  p.field = f;
  p.vertices = 1;
  p.arrows = {{"x", 0, 0}};
  p.truncate = 2;
  return p;
}

AlgebraPresentation two_loop_presentation(const FieldCtx* f) {
  AlgebraPresentation p;
  p.field = f;
  p.vertices = 1;
  p.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  p.truncate = 2;
  return p;
}

AlgebraPresentation cyclic_presentation(const FieldCtx* f, int n) {
  AlgebraPresentation p;
  p.field = f;
  p.vertices = n;
  for (int i = 0; i < n; ++i) p.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});
  p.truncate = n;
  return p;
}

AlgebraPresentation two_cycle_presentation(const FieldCtx* f) {
  AlgebraPresentation p;
  p.field = f;
  p.vertices = 2;
  p.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  p.relations = {{PathTerm{Scalar(1), {0, 1}}}, {PathTerm{Scalar(1), {1, 0}}}};
  return p;
}

AlgebraPresentation a2_presentation(const FieldCtx* f) {
  AlgebraPresentation p;
  p.field = f;
  p.vertices = 2;
  p.arrows = {{"a", 0, 1}};
  return p;
}

}  // namespace gsym
