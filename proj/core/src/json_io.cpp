#include "igcx/json_io.hpp"

namespace igcx {

namespace {

json matrix_to_json(std::vector<int> const& flat, int rows, int cols,
                    bool null_for_negative) {
  json out = json::array();
  for (int i = 0; i < rows; ++i) {
    json row = json::array();
    for (int j = 0; j < cols; ++j) {
      int v = flat[static_cast<size_t>(i) * cols + j];
      if (v < 0 && null_for_negative) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    out.push_back(row);
  }
  return out;
}

std::vector<int> matrix_from_json(json const& j, int& rows, int& cols) {
  if (!j.is_array()) {
    throw IgcxError("MalformedTable", "expected an array of rows");
  }
  rows = static_cast<int>(j.size());
  std::vector<int> out;
  cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  for (auto const& row : j) {
    if (static_cast<int>(row.size()) != cols) {
      throw IgcxError("MalformedTable", "ragged rows");
    }
    for (auto const& v : row) {
      out.push_back(v.is_null() ? -1 : v.get<int>());
    }
  }
  return out;
}

json labels_to_json(std::vector<std::string> const& labels) {
  json out = json::array();
  for (auto const& s : labels) {
    out.push_back(s);
  }
  return out;
}

std::vector<std::string> labels_from_json(json const& j) {
  std::vector<std::string> out;
  if (j.is_array()) {
    for (auto const& v : j) {
      out.push_back(v.get<std::string>());
    }
  }
  return out;
}

json cone_to_json(Cone const& g) {
  return json{{"apex", g.apex}, {"components", g.comp}};
}

Cone cone_from_json(json const& j) {
  Cone g;
  g.apex = j.at("apex").get<int>();
  g.comp = j.at("components").get<std::vector<int>>();
  return g;
}

}  // namespace

json to_json(FiniteSemigroup const& S) {
  json j;
  j["kind"]  = "semigroup";
  j["n"]     = S.n;
  j["table"] = matrix_to_json(S.table, S.n, S.n, false);
  if (!S.name.empty()) {
    j["name"] = S.name;
  }
  if (!S.labels.empty()) {
    j["labels"] = labels_to_json(S.labels);
  }
  return j;
}

FiniteSemigroup semigroup_from_json(json const& j) {
  int  rows = 0, cols = 0;
  auto table = matrix_from_json(j.at("table"), rows, cols);
  int  n     = j.contains("n") ? j.at("n").get<int>() : rows;
  if (rows != n || cols != n) {
    throw IgcxError("MalformedTable", "table is not n x n", {n, rows, cols});
  }
  return load_cayley(n, table, j.value("name", std::string()), false,
                     labels_from_json(j.value("labels", json())));
}

json to_json(BiorderedSet const& E) {
  json j;
  j["kind"]    = "biorder";
  j["n"]       = E.n;
  j["product"] = matrix_to_json(E.product, E.n, E.n, true);
  if (!E.labels.empty()) {
    j["labels"] = labels_to_json(E.labels);
  }
  if (!E.name.empty()) {
    j["name"] = E.name;
  }
  return j;
}

BiorderedSet biorder_from_json(json const& j) {
  int  rows = 0, cols = 0;
  auto product = matrix_from_json(j.at("product"), rows, cols);
  int  n       = j.contains("n") ? j.at("n").get<int>() : rows;
  if (rows != n || cols != n) {
    throw IgcxError("MalformedTable", "product is not n x n", {n, rows, cols});
  }
  return load_biorder(n, product, labels_from_json(j.value("labels", json())),
                      j.value("name", std::string()));
}

json to_json(InductiveGroupoid const& G) {
  json j;
  j["kind"]    = "inductive_groupoid";
  j["biorder"] = to_json(G.E);
  json mor     = json::array();
  for (int m = 0; m < G.g.size(); ++m) {
    mor.push_back(
        json{{"dom", G.g.dom[m]}, {"cod", G.g.cod[m]}, {"inv", G.g.inv[m]}});
  }
  j["morphisms"] = mor;
  json comp      = json::array();
  for (int a = 0; a < G.g.size(); ++a) {
    for (int b = 0; b < G.g.size(); ++b) {
      if (G.g.compose(a, b) >= 0) {
        comp.push_back(json::array({a, b, G.g.compose(a, b)}));
      }
    }
  }
  j["compose"] = comp;
  json leq     = json::array();
  for (int a = 0; a < G.g.size(); ++a) {
    for (int b = 0; b < G.g.size(); ++b) {
      if (G.g.mor_leq(a, b)) {
        leq.push_back(json::array({a, b}));
      }
    }
  }
  j["leq"]  = leq;
  json eval = json::array();
  for (int e = 0; e < G.E.n; ++e) {
    for (int f = 0; f < G.E.n; ++f) {
      int m = e == f ? -1 : G.eval_gen[static_cast<size_t>(e) * G.E.n + f];
      if (m >= 0) {
        eval.push_back(json::array({e, f, m}));
      }
    }
  }
  j["eval"] = eval;
  if (!G.g.mor_label.empty()) {
    j["morphism_labels"] = labels_to_json(G.g.mor_label);
  }
  return j;
}

InductiveGroupoid groupoid_from_json(json const& j) {
  InductiveGroupoid G;
  G.E               = biorder_from_json(j.at("biorder"));
  G.g.num_objects   = G.E.n;
  auto const& mor   = j.at("morphisms");
  for (auto const& m : mor) {
    G.g.dom.push_back(m.at("dom").get<int>());
    G.g.cod.push_back(m.at("cod").get<int>());
    G.g.inv.push_back(m.at("inv").get<int>());
  }
  G.g.identity.assign(G.E.n, -1);
  G.g.init_tables();
  for (auto const& t : j.at("compose")) {
    G.g.set_comp(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  }
  for (auto const& t : j.at("leq")) {
    G.g.set_leq(t[0].get<int>(), t[1].get<int>());
  }
  // identities are the units of composition
  for (int m = 0; m < G.g.size(); ++m) {
    if (G.g.dom[m] == G.g.cod[m] && G.g.compose(m, m) == m) {
      bool unit = true;
      for (int x = 0; x < G.g.size() && unit; ++x) {
        if (G.g.cod[x] == G.g.dom[m] && G.g.compose(x, m) != x) {
          unit = false;
        }
      }
      if (unit) {
        G.g.identity[G.g.dom[m]] = m;
      }
    }
  }
  for (int e = 0; e < G.E.n; ++e) {
    if (G.g.identity[e] < 0) {
      throw IgcxError("MalformedComposition", "missing identity", {e});
    }
  }
  G.eval_gen.assign(static_cast<size_t>(G.E.n) * G.E.n, -1);
  for (auto const& t : j.at("eval")) {
    G.eval_gen[static_cast<size_t>(t[0].get<int>()) * G.E.n + t[1].get<int>()] =
        t[2].get<int>();
  }
  if (j.contains("morphism_labels")) {
    G.g.mor_label = labels_from_json(j.at("morphism_labels"));
  }
  G.finalize();
  return G;
}

json to_json(Category const& C, std::vector<Cone> const* cones) {
  json j;
  j["kind"]    = "normal_category";
  j["objects"] = C.num_objects;
  json mor     = json::array();
  for (int m = 0; m < C.size(); ++m) {
    mor.push_back(json{{"dom", C.dom[m]}, {"cod", C.cod[m]}});
  }
  j["morphisms"] = mor;
  j["identity"]  = C.identity;
  json comp      = json::array();
  for (int a = 0; a < C.size(); ++a) {
    for (int b = 0; b < C.size(); ++b) {
      if (C.compose(a, b) >= 0) {
        comp.push_back(json::array({a, b, C.compose(a, b)}));
      }
    }
  }
  j["compose"] = comp;
  json incl    = json::array();
  for (int c = 0; c < C.num_objects; ++c) {
    for (int d = 0; d < C.num_objects; ++d) {
      if (C.subobj(c, d)) {
        incl.push_back(json::array({c, d, C.inclusion(c, d)}));
      }
    }
  }
  j["inclusions"] = incl;
  if (cones != nullptr) {
    json cs = json::array();
    for (auto const& g : *cones) {
      cs.push_back(cone_to_json(g));
    }
    j["cones"] = cs;
  }
  if (!C.obj_label.empty()) {
    j["object_labels"] = labels_to_json(C.obj_label);
  }
  if (!C.mor_label.empty()) {
    j["morphism_labels"] = labels_to_json(C.mor_label);
  }
  return j;
}

Category category_from_json(json const& j, std::vector<Cone>* cones) {
  Category C;
  C.num_objects = j.at("objects").get<int>();
  for (auto const& m : j.at("morphisms")) {
    C.dom.push_back(m.at("dom").get<int>());
    C.cod.push_back(m.at("cod").get<int>());
  }
  C.identity = j.at("identity").get<std::vector<int>>();
  C.init_tables();
  for (auto const& t : j.at("compose")) {
    C.set_comp(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  }
  for (auto const& t : j.at("inclusions")) {
    int c = t[0].get<int>(), d = t[1].get<int>();
    C.obj_leq[static_cast<size_t>(c) * C.num_objects + d] = 1;
    C.incl[static_cast<size_t>(c) * C.num_objects + d]    = t[2].get<int>();
  }
  if (cones != nullptr && j.contains("cones")) {
    for (auto const& c : j.at("cones")) {
      cones->push_back(cone_from_json(c));
    }
  }
  if (j.contains("object_labels")) {
    C.obj_label = labels_from_json(j.at("object_labels"));
  }
  if (j.contains("morphism_labels")) {
    C.mor_label = labels_from_json(j.at("morphism_labels"));
  }
  C.finalize();
  return C;
}

json to_json(CrossConnection const& x) {
  json j;
  j["kind"] = "cross_connection";
  j["c"]    = to_json(x.C, &x.C_cones);
  j["d"]    = to_json(x.D, &x.D_cones);
  json g    = json::array();
  for (int d = 0; d < x.D.num_objects; ++d) {
    g.push_back(cone_to_json(x.NC.T.cones[x.gamma[d]]));
  }
  j["gamma"] = g;
  json dl    = json::array();
  for (int c = 0; c < x.C.num_objects; ++c) {
    dl.push_back(cone_to_json(x.ND.T.cones[x.delta[c]]));
  }
  j["delta"] = dl;
  // morphism actions as image cones of the lambda presentation
  json gm = json::array();
  for (int m = 0; m < x.D.size(); ++m) {
    gm.push_back(cone_to_json(x.NC.T.cones[x.NC.R.mor_euf[x.gamma_mor[m]][1]]));
  }
  j["gamma_map"] = gm;
  json dm        = json::array();
  for (int m = 0; m < x.C.size(); ++m) {
    dm.push_back(cone_to_json(x.ND.T.cones[x.ND.R.mor_euf[x.delta_mor[m]][1]]));
  }
  j["delta_map"] = dm;
  return j;
}

CrossConnection crossconnection_from_json(json const& j) {
  std::vector<Cone> c_cones, d_cones;
  Category          C = category_from_json(j.at("c"), &c_cones);
  Category          D = category_from_json(j.at("d"), &d_cones);
  NormalDual        NC = normal_dual(C);
  NormalDual        ND = normal_dual(D);
  auto lookup = [](NormalDual const& N, json const& cj, char const* what) {
    int idx = N.T.index_of(cone_from_json(cj));
    if (idx < 0) {
      throw IgcxError("MalformedTable",
                      detail::msg(what, " entry is not a cone of the category"));
    }
    return idx;
  };
  std::vector<int> gamma, delta, gamma_mor, delta_mor;
  for (auto const& cj : j.at("gamma")) {
    gamma.push_back(lookup(NC, cj, "gamma"));
  }
  for (auto const& cj : j.at("delta")) {
    delta.push_back(lookup(ND, cj, "delta"));
  }
  size_t i = 0;
  for (auto const& cj : j.at("gamma_map")) {
    int theta = lookup(NC, cj, "gamma_map");
    int d1    = D.dom[static_cast<int>(i)], d2 = D.cod[static_cast<int>(i)];
    int lam   = NC.lambda_of(gamma.at(d1), theta, gamma.at(d2));
    if (lam < 0) {
      throw IgcxError("MalformedTable", "gamma_map entry is not a lambda",
                      {static_cast<int>(i)});
    }
    gamma_mor.push_back(lam);
    ++i;
  }
  i = 0;
  for (auto const& cj : j.at("delta_map")) {
    int theta = lookup(ND, cj, "delta_map");
    int c1    = C.dom[static_cast<int>(i)], c2 = C.cod[static_cast<int>(i)];
    int lam   = ND.lambda_of(delta.at(c1), theta, delta.at(c2));
    if (lam < 0) {
      throw IgcxError("MalformedTable", "delta_map entry is not a lambda",
                      {static_cast<int>(i)});
    }
    delta_mor.push_back(lam);
    ++i;
  }
  CrossConnection x;
  x.C         = std::move(C);
  x.D         = std::move(D);
  x.C_cones   = std::move(c_cones);
  x.D_cones   = std::move(d_cones);
  x.NC        = std::move(NC);
  x.ND        = std::move(ND);
  x.gamma     = std::move(gamma);
  x.delta     = std::move(delta);
  x.gamma_mor = std::move(gamma_mor);
  x.delta_mor = std::move(delta_mor);
  x.derive();
  return x;
}

json to_json(Report const& r) {
  json checks = json::array();
  for (auto const& it : r.items) {
    json c;
    c["check"] = it.check;
    c["pass"]  = it.pass;
    if (!it.witness.empty()) {
      c["witness"] = it.witness;
    }
    if (!it.detail.empty()) {
      c["detail"] = it.detail;
    }
    checks.push_back(c);
  }
  return json{{"checks", checks}, {"ok", r.ok()}};
}

json to_json(RoundTripReport const& r) {
  return json{{"direction", r.direction},
              {"naturality_squares", r.naturality_squares},
              {"checks", to_json(r.checks)},
              {"verdict", r.pass() ? "pass" : "fail"}};
}

json to_json(SemigroupRoundTrip const& rt) {
  return json{{"input", rt.name},
              {"preparation", to_json(rt.preparation)},
              {"ig_side", to_json(rt.ig_side)},
              {"cr_side", to_json(rt.cr_side)},
              {"verdict", rt.pass() ? "pass" : "fail"}};
}

std::string detect_kind(json const& j) {
  if (j.contains("kind")) {
    return j.at("kind").get<std::string>();
  }
  if (j.contains("table")) {
    return "semigroup";
  }
  if (j.contains("product")) {
    return "biorder";
  }
  if (j.contains("eval")) {
    return "inductive_groupoid";
  }
  if (j.contains("gamma")) {
    return "cross_connection";
  }
  if (j.contains("inclusions")) {
    return "normal_category";
  }
  throw IgcxError("MalformedTable", "cannot infer the structure kind");
}

}  // namespace igcx
