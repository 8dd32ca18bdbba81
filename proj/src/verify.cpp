#include "hocolim/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hocolim/bar.hpp"
#include "hocolim/reedy.hpp"

namespace hocolim::verify {

using dgcat::DgCategory;
using diagram::Diagram;
using diagram::Transformation;
using zmat::IntMatrix;

// ---------------------------------------------------------------------------
// Report

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Check& Report::add(const std::string& name, bool pass, std::string witness) {
  checks.push_back(Check{name, pass, std::move(witness)});
  return checks.back();
}

void Report::note(const std::string& key, const std::string& value) {
  info.emplace_back(key, value);
}

ws::json Report::to_json() const {
  ws::json jchecks = ws::json::array();
  for (const auto& c : checks)
    jchecks.push_back(ws::json{
        {"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  ws::json jinfo = ws::json::object();
  for (const auto& [k, v] : info) jinfo[k] = v;
  return ws::json{{"command", command},
                  {"pass", ok()},
                  {"checks", std::move(jchecks)},
                  {"info", std::move(jinfo)}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  for (const auto& [k, v] : info) out << k << ": " << v << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  out << (ok() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

long pick(std::mt19937_64& rng, long n) { return (long)(rng() % (unsigned long)n); }

void random_unimodular(long n, std::mt19937_64& rng, IntMatrix& p,
                       IntMatrix& pinv) {
  p = IntMatrix::identity(n);
  pinv = IntMatrix::identity(n);
  if (n < 2) return;
  for (int ops = 0; ops < 4; ++ops) {
    long i = pick(rng, n), j = pick(rng, n);
    long k = pick(rng, 5) - 2;
    if (i == j || k == 0) continue;
    IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
    e.at(j, i) = k;
    einv.at(j, i) = -k;
    p = e * p;
    pinv = pinv * einv;
  }
}

std::string homology_string(const ChainComplex& c) {
  auto h = chainz::homology(c);
  std::ostringstream out;
  bool first = true;
  for (int n = std::min(c.lo, 0); n <= c.hi(); ++n) {
    auto it = h.h.find(n);
    auto inv = it == h.h.end() ? chainz::GroupInvariants{} : it->second;
    if (!first) out << ", ";
    out << "H" << n << " = " << inv.to_string();
    first = false;
  }
  if (first) out << "trivial";
  return out.str();
}

}  // namespace

ChainComplex random_complex(std::mt19937_64& rng) {
  std::vector<long> ranks(4, 0);
  std::vector<IntMatrix> d;
  for (int n = 0; n < 3; ++n) d.emplace_back(0, 0);
  struct Disk {
    int n;
    long mult, a, b;
  };
  std::vector<Disk> disks;
  const int cells = 2 + (int)pick(rng, 3);
  for (int i = 0; i < cells; ++i) {
    int n = (int)pick(rng, 4);
    if (pick(rng, 2) == 0 || n == 3) {
      if (ranks[n] < 4) ++ranks[n];
    } else if (ranks[n] < 4 && ranks[n + 1] < 4) {
      disks.push_back(Disk{n, 1 + pick(rng, 3), ranks[n]++, ranks[n + 1]++});
    }
  }
  if (ranks == std::vector<long>(4, 0)) ranks[pick(rng, 4)] = 1;
  for (int n = 0; n < 3; ++n) d[n] = IntMatrix(ranks[n], ranks[n + 1]);
  for (const auto& dk : disks) d[dk.n].at(dk.a, dk.b) = dk.mult;
  std::vector<IntMatrix> p(4), pinv(4);
  for (int n = 0; n < 4; ++n) random_unimodular(ranks[n], rng, p[n], pinv[n]);
  for (int n = 0; n < 3; ++n) d[n] = p[n] * d[n] * pinv[n + 1];
  auto c = ChainComplex::free_complex(0, ranks, d);
  c.trim();
  c.validate();
  return c;
}

std::vector<ChainComplex> corpus_complexes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<ChainComplex> out;
  for (int i = 0; i < count; ++i) out.push_back(random_complex(rng));
  return out;
}

namespace {

DgCategory group_ring_z2() {
  ChainComplex end = ChainComplex::single(chainz::FpAbGroup::free_group(2), 0);
  ChainMap mult(chainz::tensor(end, end), end);
  mult.set(0, IntMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}});
  ChainMap one(ChainComplex::unit(), end);
  one.set(0, IntMatrix{{1}, {0}});
  return dgcat::one_object("x", end, mult, one);
}

DgCategory chain3_category() {
  auto c = dgcat::from_poset({"c0", "c1", "c2"},
                             {{true, true, true},
                              {false, true, true},
                              {false, false, true}});
  c.degree = {0, 1, 2};
  return c;
}

// diagram over a poset shape from maps along the relation a <= b; composite
// relations must be supplied consistently (the constructor validates)
Diagram poset_diagram(const DgCategory& shape, std::vector<ChainComplex> values,
                      const std::map<std::pair<long, long>, ChainMap>& maps) {
  Diagram x;
  x.shape = shape;
  x.value = std::move(values);
  const long n = shape.size();
  x.action.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (a == b) {
        x.action[a][a] = chainz::unitor_left(x.value[a]);
      } else if (auto it = maps.find({a, b}); it != maps.end()) {
        x.action[a][b] =
            chainz::compose(it->second, chainz::unitor_left(x.value[a]));
      } else {
        x.action[a][b] = chainz::zero_map(
            chainz::tensor(shape.hom[a][b], x.value[a]), x.value[b]);
      }
    }
  x.validate();
  return x;
}

// the two-object torsion example: Z/2 -> Z/4 over the arrow, generator
// acting by multiplication by 2
Diagram torsion_arrow_diagram() {
  auto arrow = dgcat::arrow_category();
  auto x0 = ChainComplex::single(chainz::FpAbGroup::cyclic(2), 0);
  auto x1 = ChainComplex::single(chainz::FpAbGroup::cyclic(4), 0);
  ChainMap m(x0, x1);
  m.set(0, IntMatrix{{2}});
  return poset_diagram(arrow, {x0, x1}, {{{0, 1}, m}});
}

}  // namespace

ws::Workspace builtin_workspace() {
  ws::Workspace w;
  w.complexes["unit"] = ChainComplex::unit();
  w.complexes["zero"] = ChainComplex::zero();
  w.complexes["z2"] = ChainComplex::single(chainz::FpAbGroup::cyclic(2), 0);
  w.complexes["z4"] = ChainComplex::single(chainz::FpAbGroup::cyclic(4), 0);
  w.complexes["free2"] =
      ChainComplex::single(chainz::FpAbGroup::free_group(2), 0);
  w.complexes["cylinder"] =
      ChainComplex::free_complex(0, {2, 1}, {IntMatrix{{1}, {-1}}});

  w.add_category("group_ring_z2", group_ring_z2());
  w.add_category("arrow", dgcat::arrow_category());
  w.add_category("chain3", chain3_category());

  auto zg = w.category_entry("group_ring_z2").cat;
  w.add_category("group_ring_z2_op", dgcat::opposite(zg));
  w.add_diagram("trivial_module", "group_ring_z2",
                diagram::constant_diagram(zg, ChainComplex::unit()));
  w.add_diagram("trivial_weight", "group_ring_z2_op",
                diagram::constant_diagram(dgcat::opposite(zg),
                                          ChainComplex::unit()));
  auto cyl = w.complexes["cylinder"];
  w.add_diagram("cylinder_module", "group_ring_z2",
                diagram::constant_diagram(zg, cyl));
  ChainMap collapse(cyl, ChainComplex::unit());
  collapse.set(0, IntMatrix{{1, 1}});
  w.add_transformation(
      "cylinder_collapse", "cylinder_module", "trivial_module",
      diagram::Transformation{diagram::constant_diagram(zg, cyl),
                              diagram::constant_diagram(zg,
                                                        ChainComplex::unit()),
                              {collapse}});
  w.add_diagram("torsion_arrow", "arrow", torsion_arrow_diagram());
  w.add_transformation(
      "torsion_arrow_id", "torsion_arrow", "torsion_arrow",
      diagram::identity_transformation(torsion_arrow_diagram()));
  return w;
}

// ---------------------------------------------------------------------------
// Suites

Report suite_axioms(std::uint64_t seed) {
  Report r;
  r.command = "verify axioms";
  auto cs = corpus_complexes(seed, 24);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int n = (int)cs.size();
  r.note("corpus size", std::to_string(n));
  bool fact = true, two_three = true, po_stable = true, composite = true;
  std::string witness[4];
  for (int i = 0; i < n; ++i) {
    const auto& a = cs[i];
    const auto& b = cs[(i + 1) % n];
    const auto& c = cs[(i + 2) % n];
    auto u = chainz::random_chain_map(a, b, rng, 2);
    auto [g, h] = chainz::factorize(u);
    if (!(chainz::is_cofibration(g) && chainz::is_weak_equivalence(h) &&
          chainz::equal_maps(chainz::compose(h, g), u)) &&
        fact) {
      fact = false;
      witness[0] = "instance " + std::to_string(i);
    }
    // h is a WE, so by two-out-of-three u and g agree
    if (chainz::is_weak_equivalence(u) != chainz::is_weak_equivalence(g) &&
        two_three) {
      two_three = false;
      witness[1] = "instance " + std::to_string(i);
    }
    auto q = chainz::random_chain_map(a, c, rng, 2);
    auto po = chainz::pushout(g, q);
    if (!chainz::is_cofibration(po.from_bottom) && po_stable) {
      po_stable = false;
      witness[2] = "instance " + std::to_string(i) + ", cokernel " +
                   chainz::cokernel_invariants_string(po.from_bottom);
    }
    // two more factorization steps give a finite composite of cofibrations
    auto [g2, h2] = chainz::factorize(
        chainz::random_chain_map(g.target, cs[(i + 3) % n], rng, 2));
    auto [g3, h3] = chainz::factorize(
        chainz::random_chain_map(g2.target, cs[(i + 4) % n], rng, 2));
    if (!chainz::is_cofibration(chainz::compose(g3, chainz::compose(g2, g))) &&
        composite) {
      composite = false;
      witness[3] = "instance " + std::to_string(i);
    }
  }
  r.add("factorization: cofibration followed by weak equivalence", fact,
        witness[0]);
  r.add("two-out-of-three across factorizations", two_three, witness[1]);
  r.add("cofibrations are stable under pushout", po_stable, witness[2]);
  r.add("finite composites of cofibrations are cofibrations", composite,
        witness[3]);
  return r;
}

namespace {

// the Reedy/replacement instances need deliberately small inputs: the cell
// replay certificate solves iterated pushout comparisons whose integer
// entries grow quickly with the presentation size
ChainComplex small_complex(std::mt19937_64& rng) {
  long r0 = 1 + pick(rng, 2), r1 = pick(rng, 3), r2 = r1 ? pick(rng, 2) : 0;
  IntMatrix d1(r0, r1), d2(r1, r2);
  if (r1) d1.at(pick(rng, r0), 0) = 1 + pick(rng, 3);
  auto c = ChainComplex::free_complex(0, {r0, r1, r2}, {d1, d2});
  c.trim();
  return c;
}

struct ReedyInstance {
  std::string name;
  reedy::ReedyStructure rs;
  Diagram x;
  bool full_certificate;  // run the cell replay certificate too
};

std::vector<ReedyInstance> reedy_instances(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  std::vector<ReedyInstance> out;

  auto arrow = dgcat::arrow_category();
  auto v0 = small_complex(rng);
  auto v1 = small_complex(rng);
  ChainMap f01 = chainz::random_chain_map(v0, v1, rng, 1);
  out.push_back(ReedyInstance{"arrow", reedy::direct_reedy(arrow),
                              poset_diagram(arrow, {v0, v1}, {{{0, 1}, f01}}),
                              true});

  auto chain3 = chain3_category();
  auto w0 = small_complex(rng);
  auto w1 = small_complex(rng);
  auto w2 = small_complex(rng);
  ChainMap g01 = chainz::random_chain_map(w0, w1, rng, 1);
  ChainMap g12 = chainz::random_chain_map(w1, w2, rng, 1);
  out.push_back(ReedyInstance{
      "chain3", reedy::direct_reedy(chain3),
      poset_diagram(chain3, {w0, w1, w2},
                    {{{0, 1}, g01},
                     {{1, 2}, g12},
                     {{0, 2}, chainz::compose(g12, g01)}}),
      false});

  auto vshape = dgcat::from_poset(
      {"a", "b", "c"},
      {{true, true, false}, {false, true, false}, {false, true, true}});
  vshape.degree = {0, 1, 0};
  auto u0 = small_complex(rng);
  auto u1 = small_complex(rng);
  auto u2 = small_complex(rng);
  out.push_back(ReedyInstance{
      "cospan", reedy::direct_reedy(vshape),
      poset_diagram(vshape, {u0, u1, u2},
                    {{{0, 1}, chainz::random_chain_map(u0, u1, rng, 1)},
                     {{2, 1}, chainz::random_chain_map(u2, u1, rng, 1)}}),
      false});
  return out;
}

}  // namespace

Report suite_reedy(std::uint64_t seed) {
  Report r;
  r.command = "verify reedy";
  for (auto& inst : reedy_instances(seed)) {
    const std::string tag = "[" + inst.name + "] ";
    const long n = inst.rs.shape.size();
    bool decomposed = true;
    std::string wit;
    try {
      inst.rs.validate();
    } catch (const std::exception& e) {
      decomposed = false;
      wit = e.what();
    }
    r.add(tag + "plus/minus decomposition is an isomorphism", decomposed, wit);

    bool cells = true;
    for (long c = 0; c < n && cells; ++c)
      for (long cp = 0; cp < n && cells; ++cp) {
        auto cr = reedy::cells_flatness_check(inst.rs, c, cp);
        if (cr.skipped || !cr.flat || !cr.shape_ok) {
          cells = false;
          wit = "objects (" + std::to_string(c) + ", " + std::to_string(cp) +
                "): " + cr.detail;
        }
      }
    r.add(tag + "corner cells: flat, iso off the diagonal, a free cell on it",
          cells, wit);

    // the replacement is Reedy cofibrant by construction
    auto rep = reedy::replace_direct(inst.x, std::vector<bool>(n, false));
    r.add(tag + "replacement is a pointwise weak equivalence",
          diagram::is_pointwise_we(rep.lambda));

    bool latch = true;
    for (long c = 0; c < n && latch; ++c) {
      auto ld = reedy::latching(inst.rs, rep.g, c);
      if (!chainz::is_cofibration(ld.latch)) {
        latch = false;
        wit = "object " + inst.rs.shape.objects[c] + ": cokernel " +
              chainz::cokernel_invariants_string(ld.latch);
      }
    }
    r.add(tag + "latching maps of the replacement are cofibrations", latch,
          wit);

    bool replayed = true;
    auto again = diagram::replay(rep.presentation);
    for (long c = 0; c < n; ++c)
      replayed = replayed &&
                 again.diagram.value[c].same_presentation(rep.g.value[c]);
    r.add(tag + "cell presentation replays the skeleton pushouts", replayed);

    if (inst.full_certificate) {
      auto away = reedy::reedy_cofibrant_away(inst.rs, rep.g,
                                              std::vector<bool>(n, false));
      r.add(tag + "relative-cell certificate with pushout comparisons",
            away.ok, away.detail);
    }

    int top = 0;
    for (int d : inst.rs.degree) top = std::max(top, d);
    auto sk = reedy::skeleton(inst.rs, rep.g, top);
    bool sk_ok = true;
    for (const auto& cmp : sk.to_x.components)
      sk_ok = sk_ok && chainz::is_isomorphism(cmp);
    auto sk_empty = reedy::skeleton(inst.rs, rep.g, -1);
    for (const auto& v : sk_empty.diagram.value)
      sk_ok = sk_ok && chainz::homology(v).is_trivial();
    r.add(tag + "skeleton tower: empty at -1, everything at the top degree",
          sk_ok);

    bool bar_latch = true;
    for (int lvl = 0; lvl <= 4 && bar_latch; ++lvl) {
      auto bl = bar::bar_reedy_latching_check(inst.rs.shape, lvl);
      if (bl.skipped || !bl.bimodule_ok || !bl.representable_ok) {
        bar_latch = false;
        wit = "level " + std::to_string(lvl) + ": " + bl.detail;
      }
    }
    r.add(tag + "bar bimodule latching maps are cofibrations (n <= 4)",
          bar_latch, wit);
  }
  return r;
}

Report suite_bar(std::uint64_t seed) {
  Report r;
  r.command = "verify bar";
  auto zg = group_ring_z2();
  auto x = diagram::constant_diagram(zg, ChainComplex::unit());
  auto rep = bar::bar_replacement(x, 6);
  r.add("simplicial identities of the resolution",
        bar::simplicial_identities(rep.data[0]));
  r.add("augmentation is a weak equivalence in the safe range",
        chainz::is_weak_equivalence_up_to(rep.eps.components[0],
                                          rep.safe_degree));
  r.add("resolution values are cofibrant",
        chainz::is_cofibrant(rep.b.value[0]));

  // group homology of Z/2 through the trivial-weight colimit; the oracle is
  // the 2-periodic resolution with differentials t-1, t+1
  auto wc = diagram::weighted_colimit(
      diagram::constant_diagram(dgcat::opposite(zg), ChainComplex::unit()),
      rep.b);
  auto oracle = ChainComplex::free_complex(
      0, {1, 1, 1, 1, 1},
      {IntMatrix{{0}}, IntMatrix{{2}}, IntMatrix{{0}}, IntMatrix{{2}}});
  auto got = chainz::homology(wc.complex);
  auto want = chainz::homology(oracle);
  bool oracle_ok = true;
  for (int n = 0; n <= rep.safe_degree; ++n) {
    auto gi = got.h.count(n) ? got.h.at(n) : chainz::GroupInvariants{};
    auto wi = want.h.count(n) ? want.h.at(n) : chainz::GroupInvariants{};
    oracle_ok = oracle_ok && gi == wi;
  }
  r.add("coinvariants match the 2-periodic resolution of Z over Z[Z/2]",
        oracle_ok, homology_string(wc.complex));

  bool contraction = true;
  std::string wit;
  std::vector<DgCategory> shapes = {zg, dgcat::arrow_category()};
  auto ms = corpus_complexes(seed ^ 0xda942042e4dd58b5ULL, 2);
  for (const auto& shape : shapes)
    for (long c = 0; c < shape.size() && contraction; ++c)
      for (const auto& m : ms) {
        auto cr = bar::contraction_check(shape, c, m, 5);
        if (!cr.section_exact || !cr.homotopy_exact) {
          contraction = false;
          wit = shape.objects[c] + ": " + cr.detail;
          break;
        }
      }
  r.add("extra degeneracy contracts bar resolutions of representables",
        contraction, wit);
  return r;
}

Report suite_counterexample() {
  Report r;
  r.command = "verify counterexample";
  auto c = bar::counterexample_z2();
  r.add("the identity of the hom-object is 2-torsion", c.unit_two_zero);
  r.add("unitality forces 2-torsion on every diagram value",
        c.forced_on_values);
  r.add("nonzero bounded free values rule the forced torsion out",
        c.free_values_faithful);
  r.add("the shape is not locally flat", !c.locally_flat, c.falsifier);
  r.add("conclusion: no pointwise cofibrant replacement exists",
        c.no_replacement, c.detail);
  return r;
}

Report suite_workspace(const ws::Workspace& w) {
  Report r;
  r.command = "verify workspace objects";
  auto run = [&](const std::string& what, const std::string& name,
                 const auto& validate) {
    try {
      validate();
      r.add(what + " \"" + name + "\" is valid", true);
    } catch (const std::exception& e) {
      r.add(what + " \"" + name + "\" is valid", false, e.what());
    }
  };
  for (const auto& [name, c] : w.complexes)
    run("complex", name, [&] { c.validate(); });
  for (const auto& [name, e] : w.categories)
    run("category", name, [&] { e.cat.validate(); });
  for (const auto& [name, e] : w.diagrams)
    run("diagram", name, [&] { e.dia.validate(); });
  for (const auto& [name, e] : w.transformations)
    run("transformation", name, [&] { e.tr.validate(); });
  return r;
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_homology(const ws::Workspace& w, const std::string& name) {
  const auto& c = w.complex(name);
  try {
    c.validate();
  } catch (const std::exception& e) {
    throw ws::WsError("complex \"" + name + "\": " + e.what());
  }
  Report r;
  r.command = "homology " + name;
  r.note("homology", homology_string(c));
  auto h = chainz::homology(c);
  for (int n = std::min(c.lo, 0); n <= c.hi(); ++n) {
    auto it = h.h.find(n);
    auto inv = it == h.h.end() ? chainz::GroupInvariants{} : it->second;
    r.note("H" + std::to_string(n), inv.to_string());
  }
  r.add("complex is a valid chain complex", true);
  return r;
}

ReplaceResult cmd_replace(const ws::Workspace& w, const std::string& name,
                          const std::string& mode, int truncation,
                          const std::vector<std::string>& away_from) {
  const auto& entry = w.diagram_entry(name);
  const auto& shape = entry.dia.shape;
  std::vector<bool> away(shape.size(), false);
  for (const auto& obj : away_from) {
    auto it = std::find(shape.objects.begin(), shape.objects.end(), obj);
    if (it == shape.objects.end())
      throw ws::WsError("--away-from: unknown object \"" + obj + "\"");
    away[it - shape.objects.begin()] = true;
  }

  ReplaceResult res;
  res.report.command = "replace " + name + " --mode " + mode;
  res.output = w;
  if (mode == "direct") {
    if (!shape.has_degrees())
      throw ws::WsError(
          "mode direct needs a direct shape (category with declared degrees)");
    reedy::Replacement rep;
    try {
      rep = reedy::replace_direct(entry.dia, away);
    } catch (const std::exception& e) {
      throw ws::WsError(std::string("replace_direct: ") + e.what());
    }
    res.report.add("augmentation is a pointwise weak equivalence",
                   diagram::is_pointwise_we(rep.lambda));
    bool replayed = true;
    auto again = diagram::replay(rep.presentation);
    for (long c = 0; c < shape.size(); ++c)
      replayed = replayed &&
                 again.diagram.value[c].same_presentation(rep.g.value[c]);
    res.report.add("cell presentation replays to the replacement", replayed);
    auto rs = reedy::direct_reedy(shape);
    auto cert = reedy::reedy_cofibrant_away(rs, rep.g, away);
    res.report.add("latching maps away from the kept part are cofibrations",
                   cert.ok, cert.detail);
    res.report.note("cells attached",
                    std::to_string(rep.presentation.attachments.size()));
    for (long c = 0; c < shape.size(); ++c)
      res.report.note("replacement at " + shape.objects[c],
                      homology_string(rep.g.value[c]));
    res.output.add_diagram(name + "_replacement", entry.category, rep.g);
    res.output.add_transformation(name + "_augmentation",
                                  name + "_replacement", name, rep.lambda);
  } else if (mode == "bar") {
    bar::BarReplacement rep;
    try {
      rep = bar::bar_replacement(entry.dia, truncation);
    } catch (const std::exception& e) {
      throw ws::WsError(std::string("bar_replacement: ") + e.what());
    }
    res.report.note("truncation", std::to_string(rep.truncation));
    res.report.note("safe degree", std::to_string(rep.safe_degree));
    bool simplicial = true, we = true;
    for (long c = 0; c < shape.size(); ++c) {
      simplicial = simplicial && bar::simplicial_identities(rep.data[c]);
      we = we && chainz::is_weak_equivalence_up_to(rep.eps.components[c],
                                                   rep.safe_degree);
    }
    res.report.add("simplicial identities hold at every object", simplicial);
    res.report.add("augmentation is a weak equivalence in the safe range", we);
    if (dgcat::is_locally_flat(shape).flat) {
      bool cof = true;
      for (const auto& v : rep.b.value) cof = cof && chainz::is_cofibrant(v);
      res.report.add("resolution values are cofibrant", cof);
    } else {
      res.report.note("cofibrancy", "skipped: shape is not locally flat");
    }
    for (long c = 0; c < shape.size(); ++c)
      res.report.note("levels at " + shape.objects[c],
                      std::to_string(rep.data[c].levels.size()));
    res.output.add_diagram(name + "_bar", entry.category, rep.b);
    res.output.add_transformation(name + "_bar_augmentation", name + "_bar",
                                  name, rep.eps);
  } else {
    throw ws::WsError("unknown replace mode \"" + mode +
                      "\" (expected direct or bar)");
  }
  return res;
}

Report cmd_wcolim(const ws::Workspace& w, const std::string& weight,
                  const std::string& name, const std::string& check_quillen) {
  const auto& we = w.diagram_entry(weight);
  const auto& xe = w.diagram_entry(name);
  auto op = dgcat::opposite(xe.dia.shape);
  if (we.dia.shape.size() != op.size())
    throw ws::WsError("shape mismatch: weight must live over the opposite of "
                      "the diagram's shape");
  for (long a = 0; a < op.size(); ++a)
    for (long b = 0; b < op.size(); ++b)
      if (!we.dia.shape.hom[a][b].same_presentation(op.hom[a][b]))
        throw ws::WsError("shape mismatch: weight hom(" + op.objects[a] + ", " +
                          op.objects[b] + ") differs from the opposite shape");

  Report r;
  r.command = "wcolim " + weight + " " + name;
  auto wc = diagram::weighted_colimit(we.dia, xe.dia);
  wc.complex.validate();
  r.add("weighted colimit is a valid chain complex", true);
  r.note("homology", homology_string(wc.complex));

  if (!check_quillen.empty()) {
    const auto& te = w.transformation_entry(check_quillen);
    if (te.tr.source.shape.size() != xe.dia.shape.size())
      throw ws::WsError("--check-quillen: \"" + check_quillen +
                        "\" lives over a different shape");
    for (long a = 0; a < op.size(); ++a)
      for (long b = 0; b < op.size(); ++b)
        if (!te.tr.source.shape.hom[a][b].same_presentation(
                xe.dia.shape.hom[a][b]))
          throw ws::WsError("--check-quillen: \"" + check_quillen +
                            "\" lives over a different shape");
    if (!diagram::is_pointwise_we(te.tr))
      throw ws::WsError("--check-quillen: \"" + check_quillen +
                        "\" is not a pointwise weak equivalence");
    auto src = diagram::weighted_colimit(we.dia, te.tr.source);
    auto dst = diagram::weighted_colimit(we.dia, te.tr.target);
    auto induced = diagram::weighted_colimit_map(
        src, dst, diagram::identity_transformation(we.dia), te.tr);
    bool flat = true;
    for (const auto& h : we.dia.value) flat = flat && chainz::is_flat(h).flat;
    r.note("weight flat", flat ? "yes" : "no");
    r.add("the weight preserves the supplied weak equivalence",
          chainz::is_weak_equivalence(induced));
  }
  return r;
}

Report cmd_verify(const ws::Workspace& w, const std::string& suite,
                  std::uint64_t seed) {
  std::vector<Report> parts;
  if (suite == "axioms" || suite == "all") parts.push_back(suite_axioms(seed));
  if (suite == "reedy" || suite == "all") parts.push_back(suite_reedy(seed));
  if (suite == "bar" || suite == "all") parts.push_back(suite_bar(seed));
  if (suite == "counterexample" || suite == "all")
    parts.push_back(suite_counterexample());
  if (suite == "all") parts.push_back(suite_workspace(w));
  if (parts.empty())
    throw ws::WsError("unknown suite \"" + suite +
                      "\" (axioms | reedy | bar | counterexample | all)");
  if (parts.size() == 1) return parts[0];
  Report r;
  r.command = "verify all";
  for (auto& p : parts) {
    for (auto& c : p.checks) r.checks.push_back(std::move(c));
    for (auto& kv : p.info) r.info.push_back(std::move(kv));
  }
  return r;
}

}  // namespace hocolim::verify
