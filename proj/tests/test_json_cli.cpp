#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "igcx/json_io.hpp"

using namespace igcx;
using igcx_test::fixture;

namespace {

std::string tmp_path(std::string const& name) {
  return std::string(IGCX_TEST_TMPDIR) + "/" + name;
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::string const& args, std::string const& out_file) {
  std::string cmd = std::string(IGCX_CLI_PATH) + " " + args + " > " + out_file
                    + " 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("JSON round trips preserve the structures", "[json]") {
  auto S  = fixture("brandt2");
  auto S2 = semigroup_from_json(to_json(S));
  REQUIRE(S2.table == S.table);
  REQUIRE(S2.name == S.name);

  auto E  = idempotent_biorder(S);
  auto E2 = biorder_from_json(to_json(E));
  REQUIRE(E2.product == E.product);

  auto G  = trace_groupoid(S);
  auto G2 = groupoid_from_json(to_json(G));
  REQUIRE(G2.g.dom == G.g.dom);
  REQUIRE(G2.g.comp == G.g.comp);
  REQUIRE(G2.eval_gen == G.eval_gen);
  REQUIRE(check_inductive(G2).ok());

  auto cc = cross_connection_of(G);
  auto x2 = crossconnection_from_json(to_json(cc.x));
  REQUIRE(x2.e_gamma == cc.x.e_gamma);
  REQUIRE(validate_crossconnection(x2).ok());
}

TEST_CASE("serialization is deterministic", "[json]") {
  auto cc = cross_connection_of(trace_groupoid(fixture("rect_band", {2, 2})));
  REQUIRE(to_json(cc.x).dump(2) == to_json(cc.x).dump(2));
  auto rt  = roundtrip_semigroup(fixture("left_zero", {2}));
  auto rt2 = roundtrip_semigroup(fixture("left_zero", {2}));
  REQUIRE(to_json(rt).dump(2) == to_json(rt2).dump(2));
}

TEST_CASE("cli: fixtures and validate", "[cli]") {
  auto out = tmp_path("fx.json");
  REQUIRE(run_cli("fixtures --name rect_band --params 2 2", out) == 0);
  auto j = json::parse(read_file(out));
  REQUIRE(j.at("n") == 4);

  // a valid biorder validates with exit 0
  auto E = idempotent_biorder(fixture("full_transformation", {2}));
  write_file(tmp_path("bio.json"), to_json(E).dump(2));
  REQUIRE(run_cli("validate --input " + tmp_path("bio.json"),
                  tmp_path("v1.json"))
          == 0);

  // corrupting the table yields exit 1 and a named B-axiom witness
  auto bad          = to_json(E);
  bad["product"][0][0] = 1;
  write_file(tmp_path("bad.json"), bad.dump(2));
  REQUIRE(run_cli("validate --input " + tmp_path("bad.json"),
                  tmp_path("v2.json"))
          == 1);
  auto rep = json::parse(read_file(tmp_path("v2.json")));
  bool named = false;
  for (auto const& c : rep.at("report").at("checks")) {
    if (!c.at("pass").get<bool>()
        && c.at("check").get<std::string>().rfind("B1", 0) == 0) {
      named = true;
    }
  }
  REQUIRE(named);
}

TEST_CASE("cli: build cc and ig", "[cli]") {
  write_file(tmp_path("rb.json"),
             to_json(fixture("rect_band", {2, 2})).dump(2));
  REQUIRE(run_cli("build cc --input " + tmp_path("rb.json"),
                  tmp_path("cc.json"))
          == 0);
  auto j = json::parse(read_file(tmp_path("cc.json")));
  REQUIRE(j.at("e_gamma_size") == 4);

  REQUIRE(run_cli("build ig --input " + tmp_path("cc.json"),
                  tmp_path("ig.json"))
          == 0);
  auto g = json::parse(read_file(tmp_path("ig.json")));
  REQUIRE(g.at("kind") == "inductive_groupoid");
  // 16 pair morphisms for the rectangular band
  REQUIRE(g.at("morphisms").size() == 16);
}

TEST_CASE("cli: roundtrip fixture and determinism", "[cli]") {
  REQUIRE(run_cli("roundtrip --fixture full_transformation 2",
                  tmp_path("r1.json"))
          == 0);
  auto j = json::parse(read_file(tmp_path("r1.json")));
  REQUIRE(j.at("verdict") == "pass");

  // byte-identical reports across runs
  REQUIRE(run_cli("roundtrip --fixture brandt2", tmp_path("d1.json")) == 0);
  REQUIRE(run_cli("roundtrip --fixture brandt2", tmp_path("d2.json")) == 0);
  REQUIRE(read_file(tmp_path("d1.json")) == read_file(tmp_path("d2.json")));

  // a roundtrip on a serialized cross-connection exercises the cr side only
  write_file(tmp_path("lz.json"), to_json(fixture("left_zero", {2})).dump(2));
  REQUIRE(run_cli("build cc --input " + tmp_path("lz.json"),
                  tmp_path("lzcc.json"))
          == 0);
  REQUIRE(run_cli("roundtrip --input " + tmp_path("lzcc.json"),
                  tmp_path("r2.json"))
          == 0);
  REQUIRE(json::parse(read_file(tmp_path("r2.json"))).at("verdict") == "pass");

  // ... and a serialized groupoid exercises the ig side only
  write_file(tmp_path("lzig.json"),
             to_json(trace_groupoid(fixture("left_zero", {2}))).dump(2));
  REQUIRE(run_cli("validate --input " + tmp_path("lzig.json"),
                  tmp_path("v3.json"))
          == 0);
  REQUIRE(run_cli("roundtrip --input " + tmp_path("lzig.json"),
                  tmp_path("r3.json"))
          == 0);
  REQUIRE(json::parse(read_file(tmp_path("r3.json"))).at("verdict") == "pass");
}

TEST_CASE("cli: malformed input gives a machine-readable error", "[cli]") {
  write_file(tmp_path("junk.json"), "{\"n\": 2, \"table\": [[0,1],[0,0]]}");
  REQUIRE(run_cli("validate --input " + tmp_path("junk.json"),
                  tmp_path("e1.json"))
          == 1);
  auto rep = json::parse(read_file(tmp_path("e1.json")));
  bool has_na = false;
  for (auto const& c : rep.at("report").at("checks")) {
    if (c.at("check") == "NotAssociative") {
      has_na = true;
    }
  }
  REQUIRE(has_na);
}
