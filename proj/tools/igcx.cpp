// igcx: load, check, build and round-trip the categorical models of regular
// semigroups at desk scale.  Subcommands: fixtures, validate, build,
// roundtrip.  Reports are canonical JSON (sorted keys, deterministic ids).

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "igcx/json_io.hpp"

namespace {

using igcx::json;

struct Options {
  std::string output;
  std::string format = "json";
  int         jobs   = 1;
  int         closure_cap = 0;
  int         max_size    = 512;
};

void emit(Options const& opt, json const& j, std::string const& text) {
  std::string payload = opt.format == "text" ? text : j.dump(2) + "\n";
  if (opt.output.empty() || opt.output == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      throw igcx::IgcxError("Io", "cannot open output file: " + opt.output);
    }
    out << payload;
  }
}

json load_input(Options const& opt, std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw igcx::IgcxError("Io", "cannot open input file: " + path);
  }
  json j = json::parse(in);
  if (j.contains("n") && j.at("n").get<int>() > opt.max_size) {
    throw igcx::IgcxError("SizeBound", "input exceeds --max-size",
                          {j.at("n").get<int>(), opt.max_size});
  }
  return j;
}

std::string report_text(igcx::Report const& r) {
  std::string out;
  for (auto const& it : r.items) {
    out += (it.pass ? "pass " : "FAIL ") + it.check;
    if (!it.witness.empty()) {
      out += " [";
      for (size_t i = 0; i < it.witness.size(); ++i) {
        out += (i ? "," : "") + std::to_string(it.witness[i]);
      }
      out += "]";
    }
    if (!it.detail.empty()) {
      out += " " + it.detail;
    }
    out += "\n";
  }
  return out;
}

int run_validate(Options const& opt, std::string const& input) {
  json         j    = load_input(opt, input);
  std::string  kind = igcx::detect_kind(j);
  igcx::Report rep;
  if (kind == "semigroup") {
    try {
      auto S = igcx::semigroup_from_json(j);
      rep.pass("associative");
      if (!S.regular) {
        rep.fail("regular", {}, "not every element has an inner inverse");
      } else {
        rep.pass("regular");
      }
    } catch (igcx::IgcxError const& e) {
      rep.fail(e.kind(), e.witness(), e.what());
    }
  } else if (kind == "biorder") {
    int rows = 0, cols = 0;
    // rerun the non-throwing axiom scan to list every named violation
    json tbl = j.at("product");
    std::vector<int> product;
    try {
      igcx::BiorderedSet E = igcx::biorder_from_json(j);
      rep = igcx::check_biorder_table(E.n, E.product);
      if (igcx::is_regular(E)) {
        rep.pass("regular");
      } else {
        rep.fail("regular", {}, "some sandwich set is empty");
      }
      // chain-groupoid axioms on the closure window
      igcx::ChainClosureOptions co;
      co.max_len       = opt.closure_cap;
      co.max_morphisms = opt.closure_cap > 0 ? opt.closure_cap * opt.closure_cap
                                             : 0;
      rep.merge(igcx::check_chain_groupoid(igcx::chain_groupoid(E, co)),
                "chains.");
    } catch (igcx::IgcxError const& e) {
      // reconstruct the raw table for the scan when load refused it
      try {
        product.clear();
        for (auto const& row : tbl) {
          for (auto const& v : row) {
            product.push_back(v.is_null() ? -1 : v.get<int>());
          }
          cols = static_cast<int>(tbl[0].size());
          rows = static_cast<int>(tbl.size());
        }
        if (rows == cols) {
          rep = igcx::check_biorder_table(rows, product);
        }
      } catch (...) {
      }
      if (rep.items.empty() || rep.ok()) {
        rep.fail(e.kind(), e.witness(), e.what());
      }
    }
  } else if (kind == "inductive_groupoid") {
    auto G = igcx::groupoid_from_json(j);
    rep    = igcx::check_inductive(G);
  } else if (kind == "normal_category") {
    std::vector<igcx::Cone> cones;
    auto C = igcx::category_from_json(j, &cones);
    rep    = igcx::check_normal_category(C, cones.empty() ? nullptr : &cones);
  } else if (kind == "cross_connection") {
    auto x = igcx::crossconnection_from_json(j);
    rep    = igcx::validate_crossconnection(x);
  } else {
    throw igcx::IgcxError("MalformedTable", "unknown kind: " + kind);
  }
  json out;
  out["input"]  = input;
  out["kind"]   = kind;
  out["report"] = igcx::to_json(rep);
  emit(opt, out, report_text(rep));
  return rep.ok() ? 0 : 1;
}

int run_build(Options const& opt, std::string const& what,
              std::string const& input) {
  json        j    = load_input(opt, input);
  std::string kind = igcx::detect_kind(j);
  if (what == "cc") {
    igcx::InductiveGroupoid G;
    if (kind == "semigroup") {
      G = igcx::trace_groupoid(igcx::semigroup_from_json(j));
    } else if (kind == "inductive_groupoid") {
      G = igcx::groupoid_from_json(j);
    } else {
      throw igcx::IgcxError("MalformedTable",
                            "build cc needs a semigroup or groupoid");
    }
    auto rep = igcx::check_inductive(G);
    if (!rep.ok()) {
      json out;
      out["report"] = igcx::to_json(rep);
      emit(opt, out, report_text(rep));
      return 1;
    }
    auto cc  = igcx::cross_connection_of(G);
    json out = igcx::to_json(cc.x);
    out["provenance"] =
        json{{"construction", "cross_connection_of"}, {"input", input}};
    out["e_gamma_size"] = cc.x.e_gamma.size();
    emit(opt, out, "|E_Gamma| = " + std::to_string(cc.x.e_gamma.size()) + "\n");
    return 0;
  }
  if (what == "ig") {
    igcx::CrossConnection x;
    if (kind == "cross_connection") {
      x = igcx::crossconnection_from_json(j);
    } else if (kind == "semigroup") {
      x = igcx::cross_connection_of(
              igcx::trace_groupoid(igcx::semigroup_from_json(j)))
              .x;
    } else {
      throw igcx::IgcxError("MalformedTable",
                            "build ig needs a cross-connection or semigroup");
    }
    auto rep = igcx::validate_crossconnection(x);
    if (!rep.ok()) {
      json out;
      out["report"] = igcx::to_json(rep);
      emit(opt, out, report_text(rep));
      return 1;
    }
    auto GG  = igcx::inductive_groupoid_of(x);
    json out = igcx::to_json(GG.ig);
    out["provenance"] =
        json{{"construction", "inductive_groupoid_of"}, {"input", input}};
    emit(opt, out,
         "objects = " + std::to_string(GG.ig.E.n)
             + ", morphisms = " + std::to_string(GG.ig.g.size()) + "\n");
    return 0;
  }
  throw igcx::IgcxError("MalformedTable", "build target must be ig or cc");
}

json roundtrip_eval(igcx::FiniteSemigroup const& S) {
  return igcx::to_json(igcx::roundtrip_semigroup(S));
}

int run_roundtrip(Options const& opt, std::string const& input,
                  std::string const& fixture, std::vector<int> const& params,
                  bool all_fixtures) {
  if (all_fixtures) {
    std::vector<igcx::FiniteSemigroup> fs;
    fs.push_back(igcx::builtin("left_zero", {2}));
    fs.push_back(igcx::builtin("right_zero", {2}));
    fs.push_back(igcx::builtin("rect_band", {2, 2}));
    fs.push_back(igcx::builtin("semilattice_chain", {2}));
    fs.push_back(igcx::builtin("brandt2"));
    fs.push_back(igcx::builtin("full_transformation", {2}));
    fs.push_back(igcx::builtin("full_transformation", {3}));
    std::vector<std::future<json>> futs;
    size_t jobs = std::max(1, opt.jobs);
    std::vector<json> results(fs.size());
    for (size_t base = 0; base < fs.size(); base += jobs) {
      futs.clear();
      for (size_t i = base; i < std::min(fs.size(), base + jobs); ++i) {
        futs.push_back(std::async(std::launch::async, roundtrip_eval,
                                  std::cref(fs[i])));
      }
      for (size_t i = 0; i < futs.size(); ++i) {
        results[base + i] = futs[i].get();
      }
    }
    json out;
    out["kind"]    = "roundtrip_suite";
    out["results"] = results;
    bool ok        = true;
    std::string text;
    for (auto const& r : results) {
      ok = ok && r.at("verdict") == "pass";
      text += r.at("input").get<std::string>() + ": "
              + r.at("verdict").get<std::string>() + "\n";
    }
    out["verdict"] = ok ? "pass" : "fail";
    emit(opt, out, text);
    return ok ? 0 : 1;
  }
  igcx::FiniteSemigroup S;
  if (!fixture.empty()) {
    S = igcx::builtin(fixture, params);
  } else {
    json        j    = load_input(opt, input);
    std::string kind = igcx::detect_kind(j);
    if (kind == "semigroup") {
      S = igcx::semigroup_from_json(j);
    } else if (kind == "inductive_groupoid") {
      // one direction only for a bare groupoid
      auto G   = igcx::groupoid_from_json(j);
      auto rep = igcx::check_inductive(G);
      json out;
      out["input"]       = input;
      out["preparation"] = igcx::to_json(rep);
      if (rep.ok()) {
        auto cc  = igcx::cross_connection_of(G);
        auto GG  = igcx::inductive_groupoid_of(cc.x);
        auto rt  = igcx::iso_ig(G, cc, GG);
        out["ig_side"] = igcx::to_json(rt);
        out["verdict"] = rt.pass() ? "pass" : "fail";
      } else {
        out["verdict"] = "fail";
      }
      emit(opt, out, out.at("verdict").get<std::string>() + "\n");
      return out.at("verdict") == "pass" ? 0 : 1;
    } else if (kind == "cross_connection") {
      auto x   = igcx::crossconnection_from_json(j);
      auto rep = igcx::validate_crossconnection(x);
      json out;
      out["input"]       = input;
      out["preparation"] = igcx::to_json(rep);
      if (rep.ok()) {
        auto GG    = igcx::inductive_groupoid_of(x);
        auto round = igcx::cross_connection_of(GG.ig);
        auto rt    = igcx::iso_cr(x, GG, round);
        out["cr_side"] = igcx::to_json(rt);
        out["verdict"] = rt.pass() ? "pass" : "fail";
      } else {
        out["verdict"] = "fail";
      }
      emit(opt, out, out.at("verdict").get<std::string>() + "\n");
      return out.at("verdict") == "pass" ? 0 : 1;
    } else {
      throw igcx::IgcxError("MalformedTable", "roundtrip: unsupported kind");
    }
  }
  json out = roundtrip_eval(S);
  emit(opt, out,
       S.name + ": " + out.at("verdict").get<std::string>() + "\n");
  return out.at("verdict") == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite engine for the categorical models of regular semigroups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--output", opt.output, "output file (default stdout)");
  app.add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "parallel workers for fixture suites");
  app.add_option("--closure-cap", opt.closure_cap,
                 "cap for chain-groupoid closures (0 = default)");
  app.add_option("--max-size", opt.max_size, "reject inputs larger than this");

  auto* fx = app.add_subcommand("fixtures", "emit a builtin Cayley table");
  std::string fx_name;
  std::vector<int> fx_params;
  bool fx_list = false;
  fx->add_option("--name", fx_name, "fixture name");
  fx->add_option("--params", fx_params, "fixture parameters");
  fx->add_flag("--list", fx_list, "list the registry");

  auto* val = app.add_subcommand("validate", "axiom report for a structure");
  std::string val_input;
  val->add_option("--input", val_input, "structure JSON")->required();

  auto* bld = app.add_subcommand("build", "apply a construction");
  std::string bld_what, bld_input;
  bld->add_option("what", bld_what, "ig or cc")->required();
  bld->add_option("--input", bld_input, "input JSON")->required();

  auto* rt = app.add_subcommand("roundtrip", "equivalence suite on an input");
  std::string rt_input, rt_fixture;
  std::vector<int> rt_params;
  bool rt_all = false;
  rt->add_option("--input", rt_input, "input JSON");
  rt->add_option("--fixture", rt_fixture, "builtin fixture name");
  rt->add_option("params", rt_params, "fixture parameters");
  rt->add_flag("--all-fixtures", rt_all, "run the whole builtin corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fx->parsed()) {
      if (fx_list) {
        json out;
        out["fixtures"] = igcx::builtin_names();
        emit(opt, out, "");
        return 0;
      }
      auto S = igcx::builtin(fx_name, fx_params);
      emit(opt, igcx::to_json(S), S.name + "\n");
      return 0;
    }
    if (val->parsed()) {
      return run_validate(opt, val_input);
    }
    if (bld->parsed()) {
      return run_build(opt, bld_what, bld_input);
    }
    if (rt->parsed()) {
      return run_roundtrip(opt, rt_input, rt_fixture, rt_params, rt_all);
    }
  } catch (igcx::IgcxError const& e) {
    json err;
    err["error"] = json{{"kind", e.kind()}, {"message", e.what()},
                        {"witness", e.witness()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (std::exception const& e) {
    json err;
    err["error"] = json{{"kind", "Internal"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
