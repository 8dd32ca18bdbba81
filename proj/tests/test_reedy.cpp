#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocolim/chainz.hpp"
#include "hocolim/dgcat.hpp"
#include "hocolim/diagram.hpp"
#include "hocolim/reedy.hpp"

using namespace hocolim;
using chainz::ChainComplex;
using chainz::ChainMap;
using chainz::FpAbGroup;
using chainz::GroupInvariants;
using zmat::IntMatrix;

namespace {

chainz::Homology hom_of(const ChainComplex& c) { return chainz::homology(c); }

GroupInvariants invariants_at(const ChainComplex& c, int n) {
  return c.in_support(n) ? c.group(n).invariants() : GroupInvariants{};
}

// category with set-like homs concentrated in degree 0, given by matrices
dgcat::DgCategory cat_deg0(std::vector<std::string> names,
                           std::vector<std::vector<long>> ranks,
                           std::vector<std::vector<std::vector<IntMatrix>>> cm,
                           std::vector<IntMatrix> units) {
  dgcat::DgCategory c;
  const long n = (long)names.size();
  c.objects = std::move(names);
  c.hom.assign(n, std::vector<ChainComplex>(n));
  c.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  c.unit.resize(n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      c.hom[a][b] = ranks[a][b]
                        ? ChainComplex::single(FpAbGroup::free_group(ranks[a][b]), 0)
                        : ChainComplex::zero();
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long d = 0; d < n; ++d) {
        ChainMap m(chainz::tensor(c.hom[b][d], c.hom[a][b]), c.hom[a][d]);
        if (ranks[b][d] * ranks[a][b] > 0 && ranks[a][d] > 0)
          m.set(0, cm[a][b][d]);
        c.comp[a][b][d] = std::move(m);
      }
  for (long a = 0; a < n; ++a) {
    ChainMap u(ChainComplex::unit(), c.hom[a][a]);
    u.set(0, units[a]);
    c.unit[a] = std::move(u);
  }
  c.validate();
  return c;
}

dgcat::DgFunctor wide_functor(const dgcat::DgCategory& sub,
                              const dgcat::DgCategory& amb,
                              std::vector<std::vector<IntMatrix>> mats) {
  dgcat::DgFunctor f;
  f.source = sub;
  f.target = amb;
  const long n = sub.size();
  f.on_objects.resize(n);
  f.on_homs.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < n; ++a) {
    f.on_objects[a] = a;
    for (long b = 0; b < n; ++b) {
      ChainMap m(sub.hom[a][b], amb.hom[a][b]);
      if (!sub.hom[a][b].is_zero_complex()) m.set(0, mats[a][b]);
      f.on_homs[a][b] = std::move(m);
    }
  }
  f.validate();
  return f;
}

// objects a, b with s : a -> b, p : b -> a and p ∘ s = id_a
reedy::ReedyStructure retract_reedy() {
  const IntMatrix z;
  auto shape = cat_deg0(
      {"a", "b"}, {{1, 1}, {1, 2}},
      {{{IntMatrix{{1}}, IntMatrix{{1}}}, {IntMatrix{{1}}, IntMatrix{{1, 1}}}},
       {{IntMatrix{{1}}, IntMatrix{{0}, {1}}},
        {IntMatrix{{1, 1}}, IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 1}}}}},
      {IntMatrix{{1}}, IntMatrix{{1}, {0}}});
  auto plus = cat_deg0({"a", "b"}, {{1, 1}, {0, 1}},
                       {{{IntMatrix{{1}}, IntMatrix{{1}}}, {z, IntMatrix{{1}}}},
                        {{z, z}, {z, IntMatrix{{1}}}}},
                       {IntMatrix{{1}}, IntMatrix{{1}}});
  auto minus = cat_deg0({"a", "b"}, {{1, 0}, {1, 1}},
                        {{{IntMatrix{{1}}, z}, {z, z}},
                         {{IntMatrix{{1}}, z}, {IntMatrix{{1}}, IntMatrix{{1}}}}},
                        {IntMatrix{{1}}, IntMatrix{{1}}});
  auto plus_in = wide_functor(
      plus, shape,
      {{IntMatrix{{1}}, IntMatrix{{1}}}, {IntMatrix{}, IntMatrix{{1}, {0}}}});
  auto minus_in = wide_functor(
      minus, shape,
      {{IntMatrix{{1}}, IntMatrix{}}, {IntMatrix{{1}}, IntMatrix{{1}, {0}}}});
  return reedy::make_reedy(shape, {0, 1}, plus_in, minus_in);
}

// diagram over the arrow category with the generator acting by m
diagram::Diagram arrow_diagram(ChainComplex x0, ChainComplex x1,
                               const ChainMap& m) {
  auto arrow = dgcat::arrow_category();
  diagram::Diagram x;
  x.shape = arrow;
  x.value = {std::move(x0), std::move(x1)};
  x.action.assign(2, std::vector<ChainMap>(2));
  x.action[0][0] = chainz::unitor_left(x.value[0]);
  x.action[1][1] = chainz::unitor_left(x.value[1]);
  x.action[0][1] = chainz::compose(m, chainz::unitor_left(x.value[0]));
  x.action[1][0] =
      chainz::zero_map(chainz::tensor(arrow.hom[1][0], x.value[1]), x.value[0]);
  x.validate();
  return x;
}

ChainMap deg0_map(const ChainComplex& src, const ChainComplex& tgt,
                  IntMatrix m) {
  ChainMap f(src, tgt);
  f.set(0, std::move(m));
  f.validate();
  return f;
}

}  // namespace

TEST_CASE("direct shapes carry the trivial decomposition") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  rs.validate();
  CHECK(rs.blocks[0][1].inclusions.size() == 2);
  CHECK(chainz::is_isomorphism(rs.decomposition[0][1]));
  // hom(0,1) decomposes through the middle 0 only
  CHECK(rs.blocks[0][1].inclusions[0].source.gens(0) == 1);
  CHECK(rs.blocks[0][1].inclusions[1].source.is_zero_complex());
}

TEST_CASE("the walking retraction is a non-direct reedy shape") {
  auto rs = retract_reedy();  // make_reedy already validated it
  // hom(b,b) = Z{id} ⊕ Z{s∘p} through the middles b and a
  CHECK(rs.blocks[1][1].complex.gens(0) == 2);
  auto bad = rs;
  bad.decomposition[1][1].set(0, IntMatrix{{1, 1}, {1, 0}});
  CHECK_THROWS(bad.validate());
}

TEST_CASE("latching over the arrow shape evaluates at the source") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  const auto x0 = ChainComplex::single(FpAbGroup::free_group(2), 0);
  const auto x1 = ChainComplex::single(FpAbGroup::cyclic(4), 0);
  auto x = arrow_diagram(x0, x1, deg0_map(x0, x1, IntMatrix{{1, 3}}));

  auto l1 = reedy::latching(rs, x, 1);
  CHECK(invariants_at(l1.object.complex, 0) == invariants_at(x0, 0));
  // the latching map is the action of the generator, up to the identification
  const auto m = deg0_map(x0, x1, IntMatrix{{1, 3}});
  CHECK(hom_of(chainz::mapping_cone(l1.latch)) == hom_of(chainz::mapping_cone(m)));

  auto l0 = reedy::latching(rs, x, 0);
  CHECK(hom_of(l0.object.complex).is_trivial());
  CHECK(chainz::is_zero_map(l0.latch));
}

TEST_CASE("latching of a representable is the boundary value") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  auto r0 = diagram::representable(rs.shape, 0);
  auto l1 = reedy::latching(rs, r0, 1);
  CHECK(chainz::is_isomorphism(l1.latch));  // ∂(0,1)-cell = hom(0,1)
  auto r1 = diagram::representable(rs.shape, 1);
  auto l1r = reedy::latching(rs, r1, 1);
  CHECK(l1r.object.complex.is_zero_complex());
}

TEST_CASE("skeleta interpolate between zero and the diagram") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  const auto x0 = ChainComplex::unit();
  const auto x1 = ChainComplex::single(FpAbGroup::free_group(2), 0);
  auto x = arrow_diagram(x0, x1, deg0_map(x0, x1, IntMatrix{{1}, {0}}));

  auto skm = reedy::skeleton(rs, x, -1);
  CHECK(skm.diagram.value[0].is_zero_complex());
  CHECK(skm.diagram.value[1].is_zero_complex());

  auto sk0 = reedy::skeleton(rs, x, 0);
  CHECK(chainz::is_isomorphism(sk0.to_x.components[0]));
  // below the top degree the skeleton value is the latching object
  auto l1 = reedy::latching(rs, x, 1);
  CHECK(hom_of(sk0.diagram.value[1]) == hom_of(l1.object.complex));

  auto sk1 = reedy::skeleton(rs, x, 1);
  CHECK(chainz::is_isomorphism(sk1.to_x.components[0]));
  CHECK(chainz::is_isomorphism(sk1.to_x.components[1]));
}

TEST_CASE("corner cells over the arrow shape") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  for (long c = 0; c < 2; ++c)
    for (long cp = 0; cp < 2; ++cp) {
      auto r = reedy::cells_flatness_check(rs, c, cp);
      CHECK(!r.skipped);
      CHECK(r.flat);
      CHECK(r.shape_ok);
    }
}

TEST_CASE("corner cells over the walking retraction") {
  auto rs = retract_reedy();
  for (long c = 0; c < 2; ++c)
    for (long cp = 0; cp < 2; ++cp) {
      auto r = reedy::cells_flatness_check(rs, c, cp);
      CHECK(!r.skipped);
      CHECK(r.flat);
      CHECK(r.shape_ok);
    }
}

TEST_CASE("non-flat homs make the cell check inapplicable") {
  const IntMatrix z;
  auto shape = cat_deg0({"u", "v"}, {{1, 1}, {0, 1}},
                        {{{IntMatrix{{1}}, IntMatrix{{1}}}, {z, IntMatrix{{1}}}},
                         {{z, z}, {z, IntMatrix{{1}}}}},
                        {IntMatrix{{1}}, IntMatrix{{1}}});
  // turn hom(u,v) into Z/2
  shape.hom[0][1] = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  shape.comp[0][0][1] = chainz::unitor_right(shape.hom[0][1]);
  shape.comp[0][1][1] = chainz::unitor_left(shape.hom[0][1]);
  shape.comp[0][1][0] = chainz::zero_map(
      chainz::tensor(shape.hom[1][0], shape.hom[0][1]), shape.hom[0][0]);
  shape.comp[1][0][1] = chainz::zero_map(
      chainz::tensor(shape.hom[0][1], shape.hom[1][0]), shape.hom[1][1]);
  shape.degree = {0, 1};
  shape.validate();
  auto rs = reedy::direct_reedy(shape);
  auto r = reedy::cells_flatness_check(rs, 1, 0);
  CHECK(r.skipped);
}

TEST_CASE("cofibrancy certificate over the arrow shape") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  const auto x0 = ChainComplex::unit();
  const auto x1 = ChainComplex::single(FpAbGroup::free_group(2), 0);
  auto x = arrow_diagram(x0, x1, deg0_map(x0, x1, IntMatrix{{1}, {0}}));

  auto rep = reedy::reedy_cofibrant_away(rs, x, {false, false});
  REQUIRE(rep.ok);
  CHECK(rep.presentation.attachments.size() == 2);
  CHECK(rep.presentation.base.value[0].is_zero_complex());
  for (const auto& w : rep.witness.components)
    CHECK(chainz::is_isomorphism(w));
  auto rp = diagram::replay(rep.presentation);
  for (long t = 0; t < 2; ++t)
    CHECK(rp.diagram.value[t].same_presentation(rep.witness.source.value[t]));

  // relative to the initial part {0} only one cell is needed
  auto rel = reedy::reedy_cofibrant_away(rs, x, {true, false});
  REQUIRE(rel.ok);
  CHECK(rel.presentation.attachments.size() == 1);
  CHECK(invariants_at(rel.presentation.base.value[0], 0) ==
        invariants_at(x0, 0));
}

TEST_CASE("a torsion target defeats the latching cofibration test") {
  auto rs = reedy::direct_reedy(dgcat::arrow_category());
  const auto x0 = ChainComplex::unit();
  const auto x1 = ChainComplex::single(FpAbGroup::cyclic(4), 0);
  auto x = arrow_diagram(x0, x1, deg0_map(x0, x1, IntMatrix{{1}}));
  auto rep = reedy::reedy_cofibrant_away(rs, x, {false, false});
  CHECK(!rep.ok);
  CHECK(rep.failing == 1);
  CHECK(rep.detail.find("'1'") != std::string::npos);
}

TEST_CASE("cofibrancy certificate over the walking retraction") {
  auto rs = retract_reedy();
  auto x = diagram::representable(rs.shape, 0);
  auto rep = reedy::reedy_cofibrant_away(rs, x, {false, false});
  REQUIRE(rep.ok);
  for (const auto& w : rep.witness.components)
    CHECK(chainz::is_isomorphism(w));
}

TEST_CASE("cofibrant replacement corrects torsion values") {
  // X(c0) = Z/2, X(c1) = Z/4, the generator acting by multiplication by 2
  const auto f0 = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  const auto f1 = ChainComplex::single(FpAbGroup::cyclic(4), 0);
  auto f = arrow_diagram(f0, f1, deg0_map(f0, f1, IntMatrix{{2}}));

  auto rep = reedy::replace_direct(f, {false, false});
  CHECK(diagram::is_pointwise_we(rep.lambda));
  CHECK(chainz::is_cofibrant(rep.g.value[0]));
  CHECK(chainz::is_cofibrant(rep.g.value[1]));
  CHECK(hom_of(rep.g.value[0]) == hom_of(f0));
  CHECK(hom_of(rep.g.value[1]) == hom_of(f1));

  auto rp = diagram::replay(rep.presentation);
  for (long t = 0; t < 2; ++t)
    CHECK(rp.diagram.value[t].same_presentation(rep.g.value[t]));
}

TEST_CASE("replacement relative to a subcategory fixes it pointwise") {
  // (0 -> Z/2) away from the source object
  const auto f1 = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  auto f = arrow_diagram(ChainComplex::zero(), f1,
                         chainz::zero_map(ChainComplex::zero(), f1));
  auto rep = reedy::replace_direct(f, {true, false});
  CHECK(rep.g.value[0].same_presentation(f.value[0]));
  CHECK(chainz::is_isomorphism(rep.lambda.components[0]));
  CHECK(diagram::is_pointwise_we(rep.lambda));
  CHECK(chainz::is_cofibrant(rep.g.value[1]));
  // the replacement of Z/2 matches its free resolution
  CHECK(hom_of(rep.g.value[1]) == hom_of(f1));
  CHECK(hom_of(rep.g.value[1]) ==
        hom_of(chainz::free_resolution(f1).source));
}

TEST_CASE("replacement is trivial when the subcategory is everything") {
  const auto f0 = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  const auto f1 = ChainComplex::single(FpAbGroup::cyclic(4), 0);
  auto f = arrow_diagram(f0, f1, deg0_map(f0, f1, IntMatrix{{2}}));
  auto rep = reedy::replace_direct(f, {true, true});
  CHECK(rep.presentation.attachments.empty());
  for (long t = 0; t < 2; ++t) {
    CHECK(rep.g.value[t].same_presentation(f.value[t]));
    CHECK(chainz::is_isomorphism(rep.lambda.components[t]));
  }
}

TEST_CASE("diagram maps factor as cofibration then weak equivalence") {
  const auto x0 = ChainComplex::unit();
  const auto y0 = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  const auto y1 = ChainComplex::single(FpAbGroup::cyclic(4), 0);
  auto x = arrow_diagram(x0, x0, chainz::identity_map(x0));
  auto y = arrow_diagram(y0, y1, deg0_map(y0, y1, IntMatrix{{2}}));
  diagram::Transformation f;
  f.source = x;
  f.target = y;
  f.components = {deg0_map(x0, y0, IntMatrix{{1}}),
                  deg0_map(x0, y1, IntMatrix{{2}})};
  f.validate();

  auto fac = reedy::factorize_diagram(f);
  CHECK(diagram::is_pointwise_cofibration(fac.g));
  CHECK(diagram::is_pointwise_we(fac.h));
  for (long c = 0; c < 2; ++c)
    CHECK(chainz::equal_maps(
        chainz::compose(fac.h.components[c], fac.g.components[c]),
        f.components[c]));
}

TEST_CASE("factorizing an identity gives isomorphisms") {
  const auto x0 = ChainComplex::unit();
  const auto x1 = ChainComplex::single(FpAbGroup::free_group(2), 0);
  auto x = arrow_diagram(x0, x1, deg0_map(x0, x1, IntMatrix{{1}, {1}}));
  auto fac = reedy::factorize_diagram(diagram::identity_transformation(x));
  for (long c = 0; c < 2; ++c) {
    CHECK(chainz::is_isomorphism(fac.g.components[c]));
    CHECK(chainz::is_isomorphism(fac.h.components[c]));
  }
}
