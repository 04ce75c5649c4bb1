/**
 * @file report.cpp
 * @brief JSON reports for the command-line commands.
 */
#include "gsym/report.hpp"

#include <json.hpp>

#include "gsym/error.hpp"
#include "gsym/twocat.hpp"

namespace gsym {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json instance_summary(const Instance& inst) {
  const Algebra& A = *inst.A;
  const GroupAction& G = *inst.act;
  json j;
  j["name"] = inst.name;
  j["field_conductor"] = A.field ? A.field->m : 1;
  j["dimension"] = A.dim;
  j["vertices"] = A.nvert;
  j["blocks"] = A.nblocks;
  j["group_order"] = G.size();
  j["group_cyclic_orders"] = G.grp.orders();
  j["generators"] = G.gen_names;
  j["self_injective"] = A.self_injective;
  j["weakly_symmetric"] = A.weakly_symmetric;
  if (A.self_injective) {
    json nu = json::array();
    for (int v : A.nu) nu.push_back(A.vertex_name(v));
    j["nakayama"] = nu;
  }
  return j;
}

json names(const Catalogue& cat, const std::vector<int>& idx) {
  json a = json::array();
  for (int k : idx) a.push_back(cat.name(k));
  return a;
}

json partition(const Catalogue& cat, const std::vector<std::vector<int>>& part) {
  json a = json::array();
  for (auto& c : part) a.push_back(names(cat, c));
  return a;
}

json catalogue_json(const Catalogue& cat) {
  const Algebra& A = *cat.act->A;
  json a = json::array();
  for (size_t k = 0; k < cat.size(); ++k) {
    const Label& L = cat.labels[k];
    json e;
    e["index"] = k;
    e["name"] = cat.name(k);
    e["kind"] = L.kind == Label::IdTwist ? "identity-twist" : "projective";
    e["source_block"] = cat.src_block[k] + 1;
    e["target_block"] = cat.tgt_block[k] + 1;
    e["stabilizer_order"] = L.chi.domain.size();
    e["character"] = char_name(cat.act->grp, L.chi);
    e["bimodule_dimension"] = cat.objects[k].M->dim;
    e["rank"] = idempotent_rank(cat.objects[k].e).str();
    if (L.kind == Label::Proj) e["vertices"] = {A.vertex_name(L.a), A.vertex_name(L.b)};
    a.push_back(e);
  }
  return a;
}

json table_json(const Catalogue& cat, const MultTable& t) {
  json a = json::array();
  for (size_t f = 0; f < cat.size(); ++f) {
    for (size_t h = 0; h < cat.size(); ++h) {
      json prod = json::object();
      for (size_t k = 0; k < cat.size(); ++k)
        if (t.mult[f][h][k]) prod[cat.name(k)] = t.mult[f][h][k];
      a.push_back({{"left", cat.name(f)}, {"right", cat.name(h)}, {"product", prod}});
    }
  }
  return a;
}

bool table_associative(const MultTable& t) {
  const size_t n = t.mult.size();
  for (size_t f = 0; f < n; ++f)
    for (size_t g = 0; g < n; ++g)
      for (size_t h = 0; h < n; ++h)
        for (size_t k = 0; k < n; ++k) {
          long long l = 0, r = 0;
          for (size_t m = 0; m < n; ++m) {
            l += static_cast<long long>(t.mult[f][g][m]) * t.mult[m][h][k];
            r += static_cast<long long>(t.mult[g][h][m]) * t.mult[f][m][k];
          }
          if (l != r) return false;
        }
  return true;
}

json fiat_json(const Catalogue& cat, const FiatReport& fr) {
  json j;
  j["self_injective"] = fr.self_injective;
  j["weakly_symmetric"] = fr.weakly_symmetric;
  j["zigzags_ok"] = fr.zigzags_ok;
  j["weakly_fiat"] = fr.weakly_fiat;
  j["fiat"] = fr.fiat;
  json star = json::object();
  for (size_t k = 0; k < fr.star.size(); ++k) star[cat.name(k)] = cat.name(fr.star[k]);
  j["star"] = star;
  if (fr.star_antihomomorphism) j["star_antihomomorphism"] = *fr.star_antihomomorphism;
  if (!fr.reason.empty()) j["reason"] = fr.reason;
  return j;
}

json subgroup_json(const GroupAction& G, const Subgroup& K) {
  json a = json::array();
  for (uint32_t g : K) a.push_back(G.element_name(g));
  return a;
}

/** Plain bases of the catalogue: regular blocks and projective bimodules of orbit representatives. */
std::vector<BimodPtr> plain_bases(const GroupActionPtr& act) {
  const Algebra& A = *act->A;
  std::vector<BimodPtr> out;
  for (int b = 0; b < A.nblocks; ++b) out.push_back(regular_bimodule(act, b));
  for (int i = 0; i < A.nvert; ++i)
    for (int j = 0; j < A.nvert; ++j)
      if (orbit_min(*act, i, j) == std::make_pair(i, j)) out.push_back(proj_bimodule(act, i, j));
  return out;
}

Report check_report(const Instance& inst, const RunOptions& opt) {
  json checks = json::array();
  Report r;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    json c{{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    if (!ok && r.ok) {
      r.ok = false;
      r.failure = name;
    }
    return ok;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  };
  guarded("bimodule-actions", [&] {
    for (auto& M : plain_bases(inst.act)) check_bimodule(*M);
    record("bimodule-actions", true);
  });
  guarded("end-mod-rad", [&] {
    bool ok = true;
    for (auto& M : plain_bases(inst.act)) ok = ok && end_mod_rad_dim(whole(M)) == static_cast<int>(stabilizer(M).size());
    record("end-mod-rad", ok);
  });
  guarded("character-idempotents", [&] {
    bool ok = true;
    for (auto& M : plain_bases(inst.act)) {
      XMor sum = x_zero(M, M);
      for (auto& chi : characters(inst.act->grp, stabilizer(M))) {
        XMor e = epsilon_idempotent(M, chi);
        ok = ok && x_valid(e) && x_equal(x_compose(e, e), e);
        sum = x_add(sum, e);
      }
      ok = ok && x_equal(sum, x_identity(M));
    }
    record("character-idempotents", ok);
  });
  Catalogue cat;
  MultTable table;
  bool have_table = false;
  guarded("catalogue", [&] {
    cat = catalogue(inst.act);
    bool ok = true;
    for (auto& X : cat.objects) ok = ok && x_valid(X.e) && x_equal(x_compose(X.e, X.e), X.e);
    record("catalogue", ok);
  });
  if (r.ok) {
    guarded("closed-forms", [&] {
      TableOptions to;
      to.certify = opt.certify;
      table = mult_table(cat, to);
      have_table = true;
      record("closed-forms", true);
    });
  }
  if (have_table) {
    record("table-associativity", table_associative(table));
    guarded("cell-shape", [&] { record("cell-shape", cells(cat, table).expected_shape); });
    if (inst.A->self_injective) {
      guarded("zig-zags", [&] {
        FiatReport fr = fiat_report(cat, &table);
        record("zig-zags", fr.zigzags_ok, fr.reason);
        record("star-antihomomorphism", fr.star_antihomomorphism.value_or(false));
      });
    }
  }
  json j;
  j["command"] = "check";
  j["instance"] = instance_summary(inst);
  j["checks"] = checks;
  j["ok"] = r.ok;
  if (!r.ok) j["failed"] = r.failure;
  r.json = dump(j);
  return r;
}

Report automorphism_report(const Instance& inst, const RunOptions& opt) {
  const Algebra& A = *inst.A;
  const GroupAction& G = *inst.act;
  Mat phi = Mat::identity(A.dim);
  std::string gen = "identity";
  if (!G.grp.orders().empty()) {
    std::vector<int> ex(G.grp.orders().size(), 0);
    ex[0] = 1;
    phi = G.mat[G.grp.index(ex)];
    gen = G.gen_names.empty() ? "g" : G.gen_names[0];
  }
  AutomorphismReport s = automorphism_toolkit(A, phi, opt.budget);
  json j;
  j["command"] = "automorphism";
  j["instance"] = instance_summary(inst);
  j["generator"] = gen;
  j["order"] = s.order_phi;
  j["a"] = A.render(s.a);
  j["a_inverse"] = A.render(s.a_inv);
  j["square_is_conjugation_by_a"] = s.phi2_is_conjugation;
  j["t"] = A.render(s.t);
  j["t_central"] = s.t_central;
  j["b"] = A.render(s.b);
  j["b_squared_is_a_inverse"] = s.b_squared;
  j["order_sigma_phi"] = s.order_sigma_phi;
  j["sigma_phi_fourth_power_identity"] = s.fourth_power_identity;
  Report r;
  r.ok = s.phi2_is_conjugation && s.t_central && s.b_squared && s.fourth_power_identity;
  if (!r.ok) r.failure = "automorphism-toolkit";
  if (A.nvert == 2) {
    Catalogue cat = catalogue(inst.act);
    MultTable t = mult_table(cat);
    FiatReport fr = fiat_report(cat, &t);
    RealizationReport rr = hcell_realization_check(cat, t, fr);
    json h;
    h["realized"] = rr.realized;
    h["n"] = rr.n;
    h["cartan"] = rr.cartan;
    if (rr.F >= 0) {
      h["F"] = cat.name(rr.F);
      h["G"] = cat.name(rr.G);
    }
    if (!rr.reason.empty()) h["reason"] = rr.reason;
    j["hcell_realization"] = h;
    if (!rr.realized && r.ok) {
      r.ok = false;
      r.failure = "hcell-realization";
    }
  }
  j["ok"] = r.ok;
  r.json = dump(j);
  return r;
}

}  // namespace

const std::vector<std::string>& instance_commands() {
  static const std::vector<std::string> cmds{"check", "catalogue", "table", "cells",
                                             "adjunctions", "fiat", "classify", "automorphism"};
  return cmds;
}

Report run_command(const Instance& inst, const std::string& command, const RunOptions& opt) {
  if (command == "check") return check_report(inst, opt);
  if (command == "automorphism") return automorphism_report(inst, opt);
  Report r;
  json j;
  j["command"] = command;
  j["instance"] = instance_summary(inst);
  if (command == "classify") {
    ClassifyReport c = classify_count(inst.act->grp);
    json e = json::array();
    for (auto& x : c.entries)
      e.push_back({{"subgroup", subgroup_json(*inst.act, x.K)},
                   {"order", x.K.size()},
                   {"invariant_factors", x.factors},
                   {"schur_order", x.schur}});
    j["subgroups"] = e;
    j["total"] = c.total;
  } else {
    Catalogue cat = catalogue(inst.act);
    if (command == "catalogue") {
      j["labels"] = catalogue_json(cat);
      j["count"] = cat.size();
    } else if (command == "table") {
      TableOptions to;
      to.certify = opt.certify;
      MultTable t = mult_table(cat, to);
      j["products"] = table_json(cat, t);
      j["closed_form_checks"] = t.closed_form_checks;
      j["associative"] = table_associative(t);
      r.ok = table_associative(t);
      if (!r.ok) r.failure = "table-associativity";
    } else if (command == "cells") {
      MultTable t = mult_table(cat);
      CellStructure cs = cells(cat, t);
      j["left_cells"] = partition(cat, cs.left);
      j["right_cells"] = partition(cat, cs.right);
      j["two_sided_cells"] = partition(cat, cs.two_sided);
      json sizes = json::array();
      for (auto& c : cs.two_sided) sizes.push_back(c.size());
      j["two_sided_sizes"] = sizes;
      j["expected_shape"] = cs.expected_shape;
      r.ok = cs.expected_shape;
      if (!r.ok) r.failure = "cell-shape";
    } else if (command == "adjunctions") {
      json a = json::array();
      bool all = true;
      for (size_t k = 0; k < cat.size(); ++k) {
        AdjunctionDatum d = adjunction(cat, k);
        bool ok = verify_zigzag(d);
        all = all && ok;
        a.push_back({{"label", cat.name(k)}, {"right_adjoint", cat.name(d.right)}, {"zigzags", ok}});
      }
      j["adjunctions"] = a;
      r.ok = all;
      if (!all) r.failure = "zig-zags";
    } else if (command == "fiat") {
      MultTable t = mult_table(cat);
      FiatReport fr = fiat_report(cat, &t);
      j["report"] = fiat_json(cat, fr);
    } else {
      throw Error("unknown-command", "unknown command '" + command + "'");
    }
  }
  j["ok"] = r.ok;
  if (!r.ok) j["failed"] = r.failure;
  r.json = dump(j);
  return r;
}

Report hcell_solve_report(int max) {
  HCellReport h = hcell_solve(max);
  json j;
  j["command"] = "hcell-solve";
  j["max"] = max;
  json s = json::array();
  for (auto& x : h.solutions) s.push_back({x.x, x.y, x.b, x.c});
  j["solutions"] = s;
  j["count"] = h.solutions.size();
  j["all_diagonal"] = h.all_diagonal;
  j["y_zero_solutions"] = h.y_zero_solutions;
  Report r;
  r.ok = h.all_diagonal && h.y_zero_solutions == 0;
  if (!r.ok) r.failure = "hcell-diagonal";
  j["ok"] = r.ok;
  r.json = dump(j);
  return r;
}

}  // namespace gsym
