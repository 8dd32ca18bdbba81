#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hocolim/chainz.hpp"
#include "hocolim/dgcat.hpp"

using namespace hocolim;
using chainz::ChainComplex;
using chainz::ChainMap;
using chainz::FpAbGroup;
using zmat::IntMatrix;

namespace {

// the group ring Z[Z/2] as a one-object dg-category: basis {1, t}, t^2 = 1
dgcat::DgCategory group_ring_z2() {
  ChainComplex end = ChainComplex::single(FpAbGroup::free_group(2), 0);
  ChainMap mult(chainz::tensor(end, end), end);
  mult.set(0, IntMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}});
  ChainMap one(ChainComplex::unit(), end);
  one.set(0, IntMatrix{{1}, {0}});
  return dgcat::one_object("x", end, mult, one);
}

dgcat::DgCategory z_mod2_ring() {
  ChainComplex end =
      ChainComplex::single(FpAbGroup(1, IntMatrix{{2}}), 0);
  ChainMap mult(chainz::tensor(end, end), end);
  mult.set(0, IntMatrix{{1}});
  ChainMap one(ChainComplex::unit(), end);
  one.set(0, IntMatrix{{1}});
  return dgcat::one_object("x", end, mult, one);
}

}  // namespace

TEST_CASE("poset categories validate and are direct when graded") {
  auto arrow = dgcat::arrow_category();
  arrow.validate();
  CHECK(arrow.size() == 2);
  CHECK(arrow.hom[0][1].gens(0) == 1);
  CHECK(arrow.hom[1][0].is_zero_complex());

  auto disc = dgcat::discrete({"a", "b", "c"});
  disc.validate();
  CHECK(disc.hom[0][1].is_zero_complex());
  CHECK(disc.hom[1][1].gens(0) == 1);

  // non-transitive relation is rejected
  CHECK_THROWS(dgcat::from_poset(
      {"a", "b", "c"},
      {{true, true, false}, {false, true, true}, {false, false, true}}));

  // declaring degrees against the arrow direction breaks directness
  auto bad = dgcat::arrow_category();
  bad.degree = {1, 0};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("group ring categories validate; flatness matches torsion") {
  auto zg = group_ring_z2();
  zg.validate();
  auto rep = dgcat::is_locally_flat(zg);
  CHECK(rep.flat);
  CHECK(rep.failures.empty());

  auto z2 = z_mod2_ring();
  z2.validate();
  auto rep2 = dgcat::is_locally_flat(z2);
  CHECK_FALSE(rep2.flat);
  REQUIRE(rep2.failures.size() == 1);
  CHECK_FALSE(rep2.failures[0].report.flat);

  auto poset = dgcat::from_poset({"a", "b"}, {{true, true}, {false, true}});
  CHECK(dgcat::is_locally_flat(poset).flat);
}

TEST_CASE("a broken associativity or unit is caught") {
  auto zg = group_ring_z2();
  zg.unit[0].set(0, IntMatrix{{0}, {1}});  // send 1 to t
  CHECK_THROWS(zg.validate());

  // multiplication with t * 1 = 1 breaks the right unit law
  auto zg2 = group_ring_z2();
  zg2.comp[0][0][0].set(0, IntMatrix{{1, 0, 1, 1}, {0, 1, 0, 0}});
  CHECK_THROWS(zg2.validate());
}

TEST_CASE("opposite and double opposite") {
  auto arrow = dgcat::arrow_category();
  auto op = dgcat::opposite(arrow);
  op.validate();
  CHECK(op.hom[1][0].gens(0) == 1);
  CHECK(op.hom[0][1].is_zero_complex());

  auto zg = group_ring_z2();
  auto zgop = dgcat::opposite(zg);
  zgop.validate();
  auto back = dgcat::opposite(zgop);
  CHECK(chainz::equal_maps(back.comp[0][0][0], zg.comp[0][0][0]));
}

TEST_CASE("product of categories") {
  auto arrow = dgcat::arrow_category();
  auto sq = dgcat::product(arrow, arrow);
  sq.validate();
  CHECK(sq.size() == 4);
  CHECK(sq.degree == std::vector<int>{0, 1, 1, 2});
  // hom((0,0),(1,1)) = Z ⊗ Z = Z, hom((1,0),(0,1)) = 0
  CHECK(sq.hom[0][3].gens(0) == 1);
  CHECK(sq.hom[2][1].is_zero_complex());

  auto zg = group_ring_z2();
  auto prod = dgcat::product(zg, arrow);
  prod.validate();
  CHECK(prod.hom[0][1].gens(0) == 2);
}

TEST_CASE("identity functor validates; broken functors are rejected") {
  auto zg = group_ring_z2();
  auto id = dgcat::identity_functor(zg);
  id.validate();

  // negating the hom component breaks unit preservation
  id.on_homs[0][0] = chainz::scale_map(id.on_homs[0][0], -1);
  CHECK_THROWS(id.validate());
}

TEST_CASE("sequence category of a one-object category") {
  auto zg = group_ring_z2();
  auto dc = dgcat::delta_category(zg, 1);
  REQUIRE(dc.seqs.size() == 2);
  const long s1 = dc.object_of({0});
  const long s2 = dc.object_of({0, 0});

  // End(x) = Z: only the identity injection, a unit summand
  CHECK(dc.cat.hom[s1][s1].gens(0) == 1);
  REQUIRE(dc.summands[s1][s1].size() == 1);
  CHECK(dc.summands[s1][s1][0].top);

  // hom((x),(x,x)) = Z ⊕ Z[Z/2]: top injection 0 -> 1 plus 0 -> 0
  CHECK(dc.cat.hom[s1][s2].gens(0) == 3);
  REQUIRE(dc.summands[s1][s2].size() == 2);
  CHECK(dc.summands[s1][s2][0].top);
  CHECK_FALSE(dc.summands[s1][s2][1].top);

  // nothing maps a longer sequence to a shorter one; End((x,x)) = Z
  CHECK(dc.cat.hom[s2][s1].is_zero_complex());
  CHECK(dc.cat.hom[s2][s2].gens(0) == 1);

  CHECK(dc.cat.degree == std::vector<int>{0, 1});
  dc.cat.validate();
  dc.projection.validate();
  CHECK(dc.projection.on_objects == std::vector<long>{0, 0});
}

TEST_CASE("sequence category of a poset") {
  auto poset = dgcat::from_poset({"a", "b"}, {{true, true}, {false, true}});
  auto dc = dgcat::delta_category(poset, 1);
  REQUIRE(dc.seqs.size() == 6);
  dc.cat.validate();
  dc.projection.validate();

  const long a = dc.object_of({0});
  const long b = dc.object_of({1});
  const long ab = dc.object_of({0, 1});
  const long ba = dc.object_of({1, 0});

  // (a) -> (a,b): the non-top injection hits C(a,b) = Z; top fails the
  // matching condition since a != b
  CHECK(dc.cat.hom[a][ab].gens(0) == 1);
  CHECK_FALSE(dc.summands[a][ab][0].top);
  // (a) -> (b): no injection matches
  CHECK(dc.cat.hom[a][b].is_zero_complex());
  // (b) -> (b,a): only the top injection 0 -> 0 fails (b != a at slot 1)...
  // top needs phi(0) = 1 with b = a: fails; non-top phi(0) = 0 gives C(b,a) = 0
  CHECK(dc.cat.hom[b][ba].is_zero_complex());
  // (b) -> (a,b): top injection 0 -> 1 matches, giving Z
  CHECK(dc.cat.hom[b][ab].gens(0) == 1);
  CHECK(dc.summands[b][ab][0].top);
}

TEST_CASE("sequence category is locally flat iff homs are") {
  auto zg = group_ring_z2();
  CHECK(dgcat::is_locally_flat(dgcat::delta_category(zg, 1).cat).flat);

  auto z2 = z_mod2_ring();
  CHECK_FALSE(dgcat::is_locally_flat(dgcat::delta_category(z2, 1).cat).flat);
}

TEST_CASE("category of sequences ending at a fixed object") {
  auto zg = group_ring_z2();
  auto dc = dgcat::delta_category(zg, 2);
  REQUIRE(dc.seqs.size() == 3);
  auto comma = dgcat::comma_top_category(dc, 0);
  REQUIRE(comma.objects.size() == 3);
  CHECK(comma.initial == 0);
  CHECK(dc.seqs[comma.objects[comma.initial]] == std::vector<long>{0});

  // initial object: exactly one morphism to every object
  for (size_t b = 0; b < comma.objects.size(); ++b)
    CHECK(comma.morphisms[comma.initial][b].size() == 1);
  // two top-preserving injections (x,x) -> (x,x,x): {0,2} and {1,2}
  CHECK(comma.morphisms[1][2].size() == 2);
  CHECK(comma.morphisms[2][1].empty());

  comma.cat.validate();
  comma.inclusion.validate();
}

TEST_CASE("sequence category of a two-object direct shape") {
  // two objects with a nontrivial hom complex between them
  dgcat::DgCategory c;
  c.objects = {"a", "b"};
  ChainComplex h{0,
                 {FpAbGroup::free_group(1), FpAbGroup::free_group(1)},
                 {IntMatrix{{2}}}};
  c.hom = {{ChainComplex::unit(), h},
           {ChainComplex::zero(), ChainComplex::unit()}};
  c.comp.assign(2, std::vector<std::vector<ChainMap>>(
                       2, std::vector<ChainMap>(2)));
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) {
        const auto src = chainz::tensor(c.hom[y][z], c.hom[x][y]);
        if (x == y)
          c.comp[x][y][z] = chainz::unitor_right(c.hom[x][z]);
        else if (y == z)
          c.comp[x][y][z] = chainz::unitor_left(c.hom[x][z]);
        else
          c.comp[x][y][z] = chainz::zero_map(src, c.hom[x][z]);
      }
  c.unit.clear();
  for (long x = 0; x < 2; ++x) {
    ChainMap u(ChainComplex::unit(), c.hom[x][x]);
    u.set(0, IntMatrix{{1}});
    c.unit.push_back(std::move(u));
  }
  c.degree = {0, 1};
  c.validate();

  auto dc = dgcat::delta_category(c, 1);
  dc.cat.validate();
  dc.projection.validate();
  // (a) -> (a,b) carries the hom complex h plus no unit summand
  const long a = dc.object_of({0});
  const long ab = dc.object_of({0, 1});
  CHECK(dc.cat.hom[a][ab].gens(0) == 1);
  CHECK(dc.cat.hom[a][ab].gens(1) == 1);
}
