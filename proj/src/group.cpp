/**
 * @file group.cpp
 * @brief Abelian groups, subgroup enumeration, characters and validated actions.
 */
#include "gsym/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gsym/error.hpp"

namespace gsym {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int o : orders_) {
    require(o >= 1, "bad-group", "generator orders must be positive");
    size_ *= static_cast<uint32_t>(o);
    exponent_ = std::lcm(exponent_, o);
  }
  require(size_ <= 4096, "bad-group", "group too large");
  exps_.resize(size_);
  for (uint32_t g = 0; g < size_; ++g) {
    uint32_t r = g;
    exps_[g].resize(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
      exps_[g][i] = static_cast<int>(r % orders_[i]);
      r /= orders_[i];
    }
  }
  mul_.assign(size_, std::vector<uint32_t>(size_));
  inv_.resize(size_);
  for (uint32_t a = 0; a < size_; ++a) {
    std::vector<int> ie(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) ie[i] = mod(-exps_[a][i], orders_[i]);
    inv_[a] = index(ie);
    for (uint32_t b = 0; b < size_; ++b) {
      std::vector<int> s(orders_.size());
      for (size_t i = 0; i < orders_.size(); ++i) s[i] = (exps_[a][i] + exps_[b][i]) % orders_[i];
      mul_[a][b] = index(s);
    }
  }
}

uint32_t AbelianGroup::index(const std::vector<int>& e) const {
  uint32_t g = 0, stride = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    g += static_cast<uint32_t>(mod(e[i], orders_[i])) * stride;
    stride *= orders_[i];
  }
  return g;
}

uint32_t AbelianGroup::power(uint32_t a, long long k) const {
  std::vector<int> e(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) e[i] = mod(static_cast<long long>(exps_[a][i]) * k, orders_[i]);
  return index(e);
}

int AbelianGroup::order_of(uint32_t g) const {
  int o = 1;
  for (size_t i = 0; i < orders_.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], exps_[g][i]));
  return o;
}

std::vector<int> AbelianGroup::invariant_factors() const {
  Subgroup all(size_);
  std::iota(all.begin(), all.end(), 0u);
  return subgroup_invariant_factors(*this, all);
}

std::string AbelianGroup::name(uint32_t g, const std::vector<std::string>& gens) const {
  std::string s;
  for (size_t i = 0; i < orders_.size(); ++i) {
    int k = exps_[g][i];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += i < gens.size() ? gens[i] : "g" + std::to_string(i + 1);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- subgroups

Subgroup generated_subgroup(const AbelianGroup& G, const std::vector<uint32_t>& gens) {
  std::vector<char> in(G.size(), 0);
  std::vector<uint32_t> stack{0};
  in[0] = 1;
  while (!stack.empty()) {
    uint32_t x = stack.back();
    stack.pop_back();
    for (uint32_t g : gens) {
      uint32_t y = G.op(x, g);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  Subgroup H;
  for (uint32_t g = 0; g < G.size(); ++g) {
    if (in[g]) H.push_back(g);
  }
  return H;
}

std::vector<Subgroup> subgroups(const AbelianGroup& G) {
  std::set<Subgroup> seen;
  std::vector<Subgroup> frontier{Subgroup{0}};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& H : frontier) {
      for (uint32_t g = 0; g < G.size(); ++g) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        std::vector<uint32_t> gens = H;
        gens.push_back(g);
        Subgroup K = generated_subgroup(G, gens);
        if (seen.insert(K).second) next.push_back(K);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> subgroup_invariant_factors(const AbelianGroup& G, const Subgroup& H) {
  // For each prime p, |{x : p^k x = 0}| = p^{sum_i min(lambda_i, k)} determines the
  // partition lambda of the p-primary part.
  std::map<int, std::vector<int>> parts;  // p -> exponents lambda (descending)
  for (int p : prime_factors(static_cast<int>(H.size()))) {
    std::vector<int> s;  // s[k] = log_p |H[p^k]|
    int k = 0;
    while (true) {
      long long pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      size_t cnt = 0;
      for (uint32_t x : H) cnt += G.power(x, pk) == 0 ? 1 : 0;
      int lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      s.push_back(lg);
      if (k > 0 && s[k] == s[k - 1]) break;
      ++k;
    }
    // Number of parts with lambda_i >= k is s[k] - s[k-1].
    std::vector<int> lam;
    for (size_t kk = 1; kk < s.size(); ++kk) {
      int ge = s[kk] - s[kk - 1];
      for (int t = static_cast<int>(lam.size()); t < ge; ++t) lam.push_back(0);
      for (int t = 0; t < ge; ++t) lam[t] = static_cast<int>(kk);
    }
    parts[p] = lam;
  }
  size_t r = 0;
  for (auto& [p, lam] : parts) r = std::max(r, lam.size());
  std::vector<int> d(r, 1);
  for (auto& [p, lam] : parts) {
    // Largest exponents go to the last invariant factor.
    for (size_t t = 0; t < lam.size(); ++t) {
      int pw = 1;
      for (int q = 0; q < lam[t]; ++q) pw *= p;
      d[r - 1 - t] *= pw;
    }
  }
  return d;
}

// ---------------------------------------------------------------- characters

int Character::value_exp(uint32_t g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  require(it != domain.end() && *it == g, "bad-character", "element outside the character's domain");
  return val[it - domain.begin()];
}

bool Character::is_trivial() const {
  return std::all_of(val.begin(), val.end(), [](int v) { return v == 0; });
}

namespace {

std::vector<int> dual_values(const AbelianGroup& G, uint32_t c, const Subgroup& H) {
  const int e = G.exponent();
  std::vector<int> v;
  v.reserve(H.size());
  for (uint32_t g : H) {
    long long s = 0;
    for (size_t i = 0; i < G.orders().size(); ++i) {
      s += static_cast<long long>(G.exps(c)[i]) * G.exps(g)[i] * (e / G.orders()[i]);
    }
    v.push_back(mod(s, e));
  }
  return v;
}

Character canonical(const AbelianGroup& G, const Subgroup& H, std::vector<int> val) {
  Character chi;
  chi.domain = H;
  chi.val = std::move(val);
  chi.e = G.exponent();
  for (uint32_t c = 0; c < G.size(); ++c) {
    if (dual_values(G, c, H) == chi.val) {
      chi.rep = c;
      return chi;
    }
  }
  throw Error("bad-character", "values do not define a character of the subgroup");
}

}  // namespace

Character restrict_dual(const AbelianGroup& G, uint32_t c, const Subgroup& H) {
  return canonical(G, H, dual_values(G, c, H));
}

Character restrict(const AbelianGroup& G, const Character& chi, const Subgroup& H) {
  std::vector<int> v;
  for (uint32_t g : H) v.push_back(chi.value_exp(g));
  return canonical(G, H, v);
}

std::vector<Character> characters(const AbelianGroup& G, const Subgroup& H) {
  std::vector<Character> out;
  std::set<std::vector<int>> seen;
  for (uint32_t c = 0; c < G.size(); ++c) {
    auto v = dual_values(G, c, H);
    if (seen.insert(v).second) out.push_back(canonical(G, H, v));
  }
  return out;
}

Character char_mul(const AbelianGroup& G, const Character& a, const Character& b) {
  require(a.domain == b.domain, "bad-character", "characters on different subgroups");
  std::vector<int> v(a.val.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = (a.val[k] + b.val[k]) % a.e;
  return canonical(G, a.domain, v);
}

Character char_inv(const AbelianGroup& G, const Character& a) {
  std::vector<int> v(a.val.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = mod(-a.val[k], a.e);
  return canonical(G, a.domain, v);
}

std::string char_name(const AbelianGroup& G, const Character& chi) {
  std::string s = "(";
  for (size_t i = 0; i < G.orders().size(); ++i) s += (i ? "," : "") + std::to_string(G.exps(chi.rep)[i]);
  return s + ")";
}

// ---------------------------------------------------------------- actions

Mat generator_matrix(const Algebra& A, const std::vector<std::pair<uint32_t, SVec>>& images) {
  std::vector<SVec> img(A.dim);
  std::vector<char> given(A.dim, 0);
  for (const auto& [b, v] : images) {
    require(b < A.dim, "bad-presentation", "image assigned to an unknown basis element");
    img[b] = v;
    given[b] = 1;
  }
  std::vector<int> arrow_img(A.arrows.size(), -1);
  for (uint32_t g : A.generators) {
    if (!given[g]) img[g] = svec_unit(g);
  }
  for (size_t a = 0; a < A.arrows.size(); ++a) arrow_img[a] = A.arrow_index[a];
  // Remaining paths: products of the images of their arrows.
  for (uint32_t b = 0; b < A.dim; ++b) {
    const Path& p = A.basis[b];
    if (given[b] || p.word.size() < 2) continue;
    SVec v = img[static_cast<uint32_t>(arrow_img[p.word[0]])];
    for (size_t k = 1; k < p.word.size(); ++k) v = A.mul(v, img[static_cast<uint32_t>(arrow_img[p.word[k]])]);
    img[b] = v;
  }
  Mat m(A.dim, A.dim);
  for (uint32_t b = 0; b < A.dim; ++b) m.set_col(b, img[b]);
  return m;
}

namespace {

void check_automorphism(const Algebra& A, const GroupGenerator& g) {
  const Mat& M = g.image;
  require(M.rows() == A.dim && M.cols() == A.dim, "not-automorphism", g.name + ": matrix has the wrong shape");
  require(M.apply(A.one()) == A.one(), "not-automorphism", g.name + " does not fix the unit");
  for (uint32_t u = 0; u < A.dim; ++u) {
    for (uint32_t v = 0; v < A.dim; ++v) {
      require(A.mul(M.col(u), M.col(v)) == M.apply(A.mult[u][v]), "not-automorphism",
              g.name + " is not multiplicative on (" + A.labels[u] + ", " + A.labels[v] + ")");
    }
  }
  require(invertible(M), "not-automorphism", g.name + " is not invertible");
}

Mat mat_power(const Mat& m, int k) {
  Mat r = Mat::identity(m.rows());
  for (int t = 0; t < k; ++t) r = r * m;
  return r;
}

}  // namespace

GroupActionPtr build_group_action(AlgebraPtr A, const std::vector<GroupGenerator>& gens) {
  auto act = std::make_shared<GroupAction>();
  act->A = A;
  std::vector<int> orders;
  for (const auto& g : gens) {
    require(g.order >= 1, "wrong-order", g.name + " needs a positive order");
    check_automorphism(*A, g);
    orders.push_back(g.order);
    act->gen_names.push_back(g.name);
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    const Mat& m = gens[i].image;
    require(mat_power(m, gens[i].order) == Mat::identity(A->dim), "wrong-order",
            gens[i].name + " does not have order dividing " + std::to_string(gens[i].order));
    for (int p : prime_factors(gens[i].order)) {
      require(mat_power(m, gens[i].order / p) != Mat::identity(A->dim), "wrong-order",
              gens[i].name + " has order smaller than " + std::to_string(gens[i].order));
    }
    for (size_t j = 0; j < i; ++j) {
      require(m * gens[j].image == gens[j].image * m, "not-abelian",
              gens[i].name + " and " + gens[j].name + " do not commute");
    }
  }
  act->grp = AbelianGroup(orders);
  const AbelianGroup& G = act->grp;
  act->mat.resize(G.size());
  for (uint32_t g = 0; g < G.size(); ++g) {
    Mat m = Mat::identity(A->dim);
    for (size_t i = 0; i < gens.size(); ++i) m = m * mat_power(gens[i].image, G.exps(g)[i]);
    act->mat[g] = std::move(m);
  }
  for (uint32_t g = 1; g < G.size(); ++g) {
    for (uint32_t h = 0; h < g; ++h) {
      require(act->mat[g] != act->mat[h], "not-faithful",
              "elements " + act->element_name(g) + " and " + act->element_name(h) + " act identically");
    }
  }
  act->vperm.assign(G.size(), std::vector<int>(A->nvert, -1));
  for (uint32_t g = 0; g < G.size(); ++g) {
    for (int v = 0; v < A->nvert; ++v) {
      const SVec& img = act->mat[g].col(A->vertex_index[v]);
      int w = -1;
      for (int u = 0; u < A->nvert; ++u) {
        if (img == svec_unit(A->vertex_index[u])) w = u;
      }
      require(w >= 0, "idempotents-not-invariant",
              act->element_name(g) + " does not map " + A->vertex_name(v) + " to a vertex idempotent");
      require(A->block_of_vertex[w] == A->block_of_vertex[v], "blocks-not-preserved",
              act->element_name(g) + " moves " + A->vertex_name(v) + " to another block");
      act->vperm[g][v] = w;
    }
  }
  return act;
}

GroupActionPtr trivial_action(AlgebraPtr A) { return build_group_action(std::move(A), {}); }

}  // namespace gsym
