#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocolim/verify.hpp"
#include "hocolim/workspace.hpp"

using namespace hocolim;
using chainz::ChainComplex;
using chainz::ChainMap;
using chainz::FpAbGroup;
using zmat::IntMatrix;

TEST_CASE("workspace round-trips through the canonical form") {
  auto w = verify::builtin_workspace();
  auto text = ws::serialize(w);
  auto w2 = ws::parse(text);
  CHECK(ws::serialize(w2) == text);  // canonical form is a fixed point
  CHECK(w2.complexes.size() == w.complexes.size());
  CHECK(w2.categories.size() == w.categories.size());
  CHECK(w2.diagrams.size() == w.diagrams.size());
  CHECK(w2.transformations.size() == w.transformations.size());
  // resolved objects survive, not just the reference lists
  w2.category_entry("group_ring_z2").cat.validate();
  w2.diagram_entry("torsion_arrow").dia.validate();
  w2.transformation_entry("torsion_arrow_id").tr.validate();
  CHECK(w2.complex("z2").group(0).rels.at(0, 0) == 2);
}

TEST_CASE("big integers serialize as decimal strings") {
  zmat::Int big("123456789012345678901234567890");
  auto j = ws::int_to_json(big);
  CHECK(j.is_string());
  CHECK(ws::int_from_json(j) == big);
  CHECK(ws::int_to_json(zmat::Int(-7)).is_number_integer());
  CHECK(ws::int_from_json(ws::json(-7)) == -7);
  IntMatrix m(1, 1);
  m.at(0, 0) = big;
  CHECK(ws::matrix_from_json(ws::matrix_to_json(m)) == m);
}

TEST_CASE("parse errors carry positions and names") {
  CHECK_THROWS_WITH_AS(ws::parse("{ not json"),
                       doctest::Contains("byte"), ws::WsError);
  CHECK_THROWS_AS(ws::parse(R"({"diagrams": {"d": {"category": "missing",
                              "values": [], "actions": []}}})"),
                  ws::WsError);
  auto w = verify::builtin_workspace();
  CHECK_THROWS_AS(w.complex("nope"), ws::WsError);
}

TEST_CASE("homology command reports invariants and flags bad differentials") {
  auto w = verify::builtin_workspace();
  auto r = verify::cmd_homology(w, "z2");
  CHECK(r.ok());
  bool found = false;
  for (const auto& [k, v] : r.info)
    if (k == "H0") {
      CHECK(v == "Z/2");
      found = true;
    }
  CHECK(found);

  // d∘d != 0 is an input error naming the degree
  ChainComplex bad;
  bad.groups.assign(3, FpAbGroup::free_group(1));
  bad.diffs = {IntMatrix{{1}}, IntMatrix{{1}}};
  w.complexes["bad"] = bad;
  CHECK_THROWS_AS(verify::cmd_homology(w, "bad"), ws::WsError);
  CHECK_THROWS_AS(verify::cmd_homology(w, "nope"), ws::WsError);
}

TEST_CASE("replace command: direct mode on the two-object example") {
  auto w = verify::builtin_workspace();
  auto res = verify::cmd_replace(w, "torsion_arrow", "direct", -1, {});
  CHECK(res.report.ok());
  // the output workspace re-validates and carries the replacement
  auto text = ws::serialize(res.output);
  auto again = ws::parse(text);
  CHECK(verify::suite_workspace(again).ok());
  const auto& g = again.diagram_entry("torsion_arrow_replacement").dia;
  CHECK(chainz::homology(g.value[0]).h.at(0) ==
        chainz::GroupInvariants{0, {2}});
  CHECK(chainz::homology(g.value[1]).h.at(0) ==
        chainz::GroupInvariants{0, {4}});
  for (const auto& v : g.value) CHECK(chainz::is_cofibrant(v));

  // keeping the whole shape is the identity replacement
  auto idres =
      verify::cmd_replace(w, "torsion_arrow", "direct", -1, {"0", "1"});
  CHECK(idres.report.ok());
  const auto& gid = idres.output.diagram_entry("torsion_arrow_replacement").dia;
  for (long c = 0; c < 2; ++c)
    CHECK(gid.value[c].same_presentation(
        w.diagram_entry("torsion_arrow").dia.value[c]));

  CHECK_THROWS_AS(verify::cmd_replace(w, "torsion_arrow", "direct", -1,
                                      {"nope"}),
                  ws::WsError);
}

TEST_CASE("replace command: bar mode emits the truncated resolution") {
  auto w = verify::builtin_workspace();
  auto res = verify::cmd_replace(w, "trivial_module", "bar", 4, {});
  CHECK(res.report.ok());
  CHECK(verify::suite_workspace(res.output).ok());
  const auto& b = res.output.diagram_entry("trivial_module_bar").dia;
  CHECK(chainz::is_cofibrant(b.value[0]));
}

TEST_CASE("wcolim command: evaluation, duality check, quillen flag") {
  auto w = verify::builtin_workspace();
  auto r = verify::cmd_wcolim(w, "trivial_weight", "trivial_module");
  CHECK(r.ok());
  // trivial weight against the trivial module is Z
  bool found = false;
  for (const auto& [k, v] : r.info)
    if (k == "homology") {
      CHECK(v == "H0 = Z");
      found = true;
    }
  CHECK(found);

  CHECK_THROWS_AS(verify::cmd_wcolim(w, "torsion_arrow", "trivial_module"),
                  ws::WsError);

  auto rq = verify::cmd_wcolim(w, "trivial_weight", "cylinder_module",
                               "cylinder_collapse");
  CHECK(rq.ok());  // flat weight preserves the weak equivalence

  // the quillen check rejects a transformation over the wrong shape
  CHECK_THROWS_AS(verify::cmd_wcolim(w, "trivial_weight", "trivial_module",
                                     "torsion_arrow_id"),
                  ws::WsError);
}

TEST_CASE("verify command aggregates the suites") {
  auto w = verify::builtin_workspace();
  auto r = verify::cmd_verify(w, "counterexample", 1);
  CHECK(r.ok());
  CHECK(r.checks.size() == 5);
  CHECK_THROWS_AS(verify::cmd_verify(w, "nope", 1), ws::WsError);

  // a broken naturality square fails, naming the transformation
  auto bad = w;
  auto& tr = bad.transformations.at("torsion_arrow_id");
  tr.tr.components[1].set(0, IntMatrix{{2}});
  auto rb = verify::suite_workspace(bad);
  CHECK_FALSE(rb.ok());
  bool named = false;
  for (const auto& c : rb.checks)
    if (!c.pass && c.name.find("torsion_arrow_id") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("reports render as text and json") {
  verify::Report r;
  r.command = "demo";
  r.add("works", true, "w");
  r.add("breaks", false, "because");
  r.note("k", "v");
  CHECK_FALSE(r.ok());
  auto text = r.to_text();
  CHECK(text.find("PASS  works") != std::string::npos);
  CHECK(text.find("FAIL  breaks") != std::string::npos);
  CHECK(text.find("OVERALL FAIL") != std::string::npos);
  auto j = r.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["info"]["k"] == "v");
}

TEST_CASE("random corpus complexes are valid, free and bounded") {
  auto cs = verify::corpus_complexes(7, 20);
  CHECK(cs.size() == 20);
  auto again = verify::corpus_complexes(7, 20);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    cs[i].validate();
    CHECK(chainz::is_cofibrant(cs[i]));
    CHECK(cs[i].lo >= 0);
    CHECK(cs[i].hi() <= 3);
    for (int n = cs[i].lo; n <= cs[i].hi(); ++n) CHECK(cs[i].gens(n) <= 4);
    CHECK(cs[i].same_presentation(again[i]));  // seeded: reproducible
  }
}
