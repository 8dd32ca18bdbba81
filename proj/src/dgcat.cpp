#include "hocolim/dgcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocolim::dgcat {

using chainz::ChainComplex;
using chainz::ChainMap;
using chainz::Sum;
using chainz::TensorTree;

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

/// All injective monotone maps [k] -> [n], as increasing index vectors,
/// in lexicographic order.
std::vector<std::vector<long>> monotone_injections(long k, long n) {
  std::vector<std::vector<long>> out;
  if (k > n) return out;
  std::vector<long> phi(k + 1);
  for (long i = 0; i <= k; ++i) phi[i] = i;
  while (true) {
    out.push_back(phi);
    long i = k;
    while (i >= 0 && phi[i] == n - (k - i)) --i;
    if (i < 0) break;
    ++phi[i];
    for (long j = i + 1; j <= k; ++j) phi[j] = phi[j - 1] + 1;
  }
  return out;
}

}  // namespace

void DgCategory::validate() const {
  const long n = size();
  if ((long)hom.size() != n || (long)unit.size() != n || (long)comp.size() != n)
    throw std::invalid_argument("dg-category: inconsistent table sizes");
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      hom[a][b].validate();
      for (long c = 0; c < n; ++c) {
        const auto& m = comp[a][b][c];
        if (!m.source.same_presentation(chainz::tensor(hom[b][c], hom[a][b])) ||
            !m.target.same_presentation(hom[a][c]))
          throw std::invalid_argument("dg-category: composition endpoints wrong for " +
                                      objects[a] + "," + objects[b] + "," + objects[c]);
        m.validate();
      }
    }
  for (long c = 0; c < n; ++c) {
    if (!unit[c].source.same_presentation(ChainComplex::unit()) ||
        !unit[c].target.same_presentation(hom[c][c]))
      throw std::invalid_argument("dg-category: unit endpoints wrong for " + objects[c]);
    unit[c].validate();
  }

  // unit laws: composing against the unit is the canonical isomorphism
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const auto& h = hom[a][b];
      if (h.is_zero_complex()) continue;
      const auto right = chainz::compose(
          comp[a][a][b],
          chainz::compose(chainz::tensor_map(chainz::identity_map(h), unit[a]),
                          chainz::unitor_right_inv(h)));
      if (!chainz::equal_maps(right, chainz::identity_map(h)))
        throw std::invalid_argument("dg-category: right unit law fails at " +
                                    objects[a] + "->" + objects[b]);
      const auto left = chainz::compose(
          comp[a][b][b],
          chainz::compose(chainz::tensor_map(unit[b], chainz::identity_map(h)),
                          chainz::unitor_left_inv(h)));
      if (!chainz::equal_maps(left, chainz::identity_map(h)))
        throw std::invalid_argument("dg-category: left unit law fails at " +
                                    objects[a] + "->" + objects[b]);
    }

  // associativity on left-nested triple tensors
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d) {
          if (hom[c][d].is_zero_complex() || hom[b][c].is_zero_complex() ||
              hom[a][b].is_zero_complex())
            continue;
          const std::vector<ChainComplex> leaves{hom[c][d], hom[b][c], hom[a][b]};
          const auto one =
              chainz::compose(comp[a][b][d],
                              chainz::tensor_map(comp[b][c][d],
                                                 chainz::identity_map(hom[a][b])));
          const auto assoc = chainz::structural_iso(
              leaves,
              TensorTree::make_node(TensorTree::make_node(TensorTree::make_leaf(0),
                                                          TensorTree::make_leaf(1)),
                                    TensorTree::make_leaf(2)),
              TensorTree::make_node(TensorTree::make_leaf(0),
                                    TensorTree::make_node(TensorTree::make_leaf(1),
                                                          TensorTree::make_leaf(2))));
          const auto other = chainz::compose(
              comp[a][c][d],
              chainz::compose(chainz::tensor_map(chainz::identity_map(hom[c][d]),
                                                 comp[a][b][c]),
                              assoc));
          if (!chainz::equal_maps(one, other))
            throw std::invalid_argument("dg-category: associativity fails at " +
                                        objects[a] + "," + objects[b] + "," +
                                        objects[c] + "," + objects[d]);
        }

  if (has_degrees()) {
    if ((long)degree.size() != n)
      throw std::invalid_argument("dg-category: degree table size");
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b)
        if (a != b && degree[a] >= degree[b] && !hom[a][b].is_zero_complex())
          throw std::invalid_argument("dg-category: not direct at " + objects[a] +
                                      "->" + objects[b]);
      if (!chainz::is_isomorphism(unit[a]))
        throw std::invalid_argument("dg-category: direct structure needs unit isos at " +
                                    objects[a]);
    }
  }
}

DgCategory one_object(const std::string& name, ChainComplex end, ChainMap comp,
                      ChainMap unit) {
  DgCategory c;
  c.objects = {name};
  c.hom = {{std::move(end)}};
  c.comp = {{{std::move(comp)}}};
  c.unit = {std::move(unit)};
  return c;
}

DgCategory from_poset(const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq) {
  const long n = (long)names.size();
  DgCategory c;
  c.objects = names;
  c.hom.assign(n, std::vector<ChainComplex>(n));
  c.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      c.hom[a][b] = leq[a][b] ? ChainComplex::unit() : ChainComplex::zero();
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long d = 0; d < n; ++d) {
        ChainMap m(chainz::tensor(c.hom[b][d], c.hom[a][b]), c.hom[a][d]);
        if (leq[a][b] && leq[b][d]) {
          if (!leq[a][d]) throw std::invalid_argument("from_poset: not transitive");
          m.set(0, hocolim::zmat::IntMatrix{{1}});
        }
        c.comp[a][b][d] = std::move(m);
      }
  for (long a = 0; a < n; ++a) {
    if (!leq[a][a]) throw std::invalid_argument("from_poset: not reflexive");
    ChainMap u(ChainComplex::unit(), c.hom[a][a]);
    u.set(0, hocolim::zmat::IntMatrix{{1}});
    c.unit.push_back(std::move(u));
  }
  return c;
}

DgCategory discrete(const std::vector<std::string>& names) {
  std::vector<std::vector<bool>> leq(names.size(),
                                     std::vector<bool>(names.size(), false));
  for (size_t i = 0; i < names.size(); ++i) leq[i][i] = true;
  return from_poset(names, leq);
}

DgCategory arrow_category() {
  auto c = from_poset({"0", "1"}, {{true, true}, {false, true}});
  c.degree = {0, 1};
  return c;
}

DgCategory opposite(const DgCategory& c) {
  const long n = c.size();
  DgCategory o;
  o.objects = c.objects;
  o.hom.assign(n, std::vector<ChainComplex>(n));
  o.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  o.unit = c.unit;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) o.hom[a][b] = c.hom[b][a];
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long d = 0; d < n; ++d)
        o.comp[a][b][d] = chainz::compose(
            c.comp[d][b][a], chainz::braiding(c.hom[d][b], c.hom[b][a]));
  return o;
}

DgCategory product(const DgCategory& a, const DgCategory& b) {
  const long na = a.size(), nb = b.size(), n = na * nb;
  auto idx = [nb](long i, long j) { return i * nb + j; };
  DgCategory p;
  p.objects.resize(n);
  p.hom.assign(n, std::vector<ChainComplex>(n));
  p.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  p.unit.resize(n);
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) {
      p.objects[idx(i, j)] = pair_name(a.objects[i], b.objects[j]);
      for (long i2 = 0; i2 < na; ++i2)
        for (long j2 = 0; j2 < nb; ++j2)
          p.hom[idx(i, j)][idx(i2, j2)] =
              chainz::tensor(a.hom[i][i2], b.hom[j][j2]);
    }
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) {
      const long c = idx(i, j);
      p.unit[c] = chainz::compose(
          chainz::tensor_map(a.unit[i], b.unit[j]),
          chainz::unitor_left_inv(ChainComplex::unit()));
    }
  for (long i0 = 0; i0 < na; ++i0)
    for (long j0 = 0; j0 < nb; ++j0)
      for (long i1 = 0; i1 < na; ++i1)
        for (long j1 = 0; j1 < nb; ++j1)
          for (long i2 = 0; i2 < na; ++i2)
            for (long j2 = 0; j2 < nb; ++j2) {
              const long x = idx(i0, j0), y = idx(i1, j1), z = idx(i2, j2);
              if (p.hom[y][z].is_zero_complex() || p.hom[x][y].is_zero_complex()) {
                p.comp[x][y][z] = chainz::zero_map(
                    chainz::tensor(p.hom[y][z], p.hom[x][y]), p.hom[x][z]);
                continue;
              }
              // (A1⊗B1)⊗(A0⊗B0) -> (A1⊗A0)⊗(B1⊗B0) -> homA ⊗ homB
              const std::vector<ChainComplex> leaves{
                  a.hom[i1][i2], b.hom[j1][j2], a.hom[i0][i1], b.hom[j0][j1]};
              const auto src = TensorTree::make_node(
                  TensorTree::make_node(TensorTree::make_leaf(0),
                                        TensorTree::make_leaf(1)),
                  TensorTree::make_node(TensorTree::make_leaf(2),
                                        TensorTree::make_leaf(3)));
              const auto dst = TensorTree::make_node(
                  TensorTree::make_node(TensorTree::make_leaf(0),
                                        TensorTree::make_leaf(2)),
                  TensorTree::make_node(TensorTree::make_leaf(1),
                                        TensorTree::make_leaf(3)));
              const auto swap = chainz::structural_iso(leaves, src, dst);
              p.comp[x][y][z] = chainz::compose(
                  chainz::tensor_map(a.comp[i0][i1][i2], b.comp[j0][j1][j2]), swap);
            }
  if (a.has_degrees() && b.has_degrees()) {
    p.degree.resize(n);
    for (long i = 0; i < na; ++i)
      for (long j = 0; j < nb; ++j)
        p.degree[idx(i, j)] = a.degree[i] + b.degree[j];
  }
  return p;
}

void DgFunctor::validate() const {
  const long n = source.size();
  if ((long)on_objects.size() != n || (long)on_homs.size() != n)
    throw std::invalid_argument("dg-functor: table sizes");
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const auto& f = on_homs[a][b];
      if (!f.source.same_presentation(source.hom[a][b]) ||
          !f.target.same_presentation(target.hom[on_objects[a]][on_objects[b]]))
        throw std::invalid_argument("dg-functor: hom component endpoints");
      f.validate();
    }
  for (long a = 0; a < n; ++a) {
    if (!chainz::equal_maps(chainz::compose(on_homs[a][a], source.unit[a]),
                            target.unit[on_objects[a]]))
      throw std::invalid_argument("dg-functor: unit not preserved at " +
                                  source.objects[a]);
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        const auto lhs =
            chainz::compose(on_homs[a][c], source.comp[a][b][c]);
        const auto rhs = chainz::compose(
            target.comp[on_objects[a]][on_objects[b]][on_objects[c]],
            chainz::tensor_map(on_homs[b][c], on_homs[a][b]));
        if (!chainz::equal_maps(lhs, rhs))
          throw std::invalid_argument("dg-functor: composition not preserved at " +
                                      source.objects[a] + "," + source.objects[b] +
                                      "," + source.objects[c]);
      }
  }
}

DgFunctor identity_functor(const DgCategory& c) {
  DgFunctor f;
  f.source = c;
  f.target = c;
  f.on_objects.resize(c.size());
  f.on_homs.assign(c.size(), std::vector<ChainMap>(c.size()));
  for (long a = 0; a < c.size(); ++a) {
    f.on_objects[a] = a;
    for (long b = 0; b < c.size(); ++b)
      f.on_homs[a][b] = chainz::identity_map(c.hom[a][b]);
  }
  return f;
}

FullSubcategory full_subcategory(const DgCategory& c, const std::vector<long>& objs) {
  FullSubcategory out;
  const long n = (long)objs.size();
  auto& s = out.cat;
  s.objects.resize(n);
  s.hom.assign(n, std::vector<ChainComplex>(n));
  s.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  s.unit.resize(n);
  if (c.has_degrees()) s.degree.resize(n);
  for (long a = 0; a < n; ++a) {
    s.objects[a] = c.objects[objs[a]];
    s.unit[a] = c.unit[objs[a]];
    if (c.has_degrees()) s.degree[a] = c.degree[objs[a]];
    for (long b = 0; b < n; ++b) {
      s.hom[a][b] = c.hom[objs[a]][objs[b]];
      for (long d = 0; d < n; ++d)
        s.comp[a][b][d] = c.comp[objs[a]][objs[b]][objs[d]];
    }
  }
  out.inclusion.source = s;
  out.inclusion.target = c;
  out.inclusion.on_objects = objs;
  out.inclusion.on_homs.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      out.inclusion.on_homs[a][b] = chainz::identity_map(s.hom[a][b]);
  out.inclusion.validate();
  return out;
}

LocalFlatReport is_locally_flat(const DgCategory& c) {
  LocalFlatReport out;
  for (long a = 0; a < c.size(); ++a)
    for (long b = 0; b < c.size(); ++b) {
      auto rep = chainz::is_flat(c.hom[a][b]);
      if (!rep.flat) {
        out.flat = false;
        out.failures.push_back({a, b, std::move(rep)});
      }
    }
  return out;
}

long DeltaCategory::object_of(const std::vector<long>& seq) const {
  for (size_t i = 0; i < seqs.size(); ++i)
    if (seqs[i] == seq) return (long)i;
  throw std::invalid_argument("delta category: unknown sequence");
}

DeltaCategory delta_category(const DgCategory& c, int max_length) {
  if (c.size() == 0)
    throw std::invalid_argument("delta category of the empty category");
  if (max_length < 0) throw std::invalid_argument("negative truncation");

  DeltaCategory dc;
  // sequences of lengths 1 .. max_length+1, by length then lexicographic
  for (int len = 1; len <= max_length + 1; ++len) {
    std::vector<long> seq(len, 0);
    while (true) {
      dc.seqs.push_back(seq);
      int i = len - 1;
      while (i >= 0 && seq[i] == c.size() - 1) --i;
      if (i < 0) break;
      ++seq[i];
      for (int j = i + 1; j < len; ++j) seq[j] = 0;
    }
  }
  const long n = (long)dc.seqs.size();

  auto& cat = dc.cat;
  cat.objects.resize(n);
  cat.hom.assign(n, std::vector<ChainComplex>(n));
  cat.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  cat.unit.resize(n);
  cat.degree.resize(n);
  dc.summands.assign(n, std::vector<std::vector<DeltaCategory::Summand>>(n));
  dc.hom_sums.assign(n, std::vector<Sum>(n));

  for (long x = 0; x < n; ++x) {
    std::string name;
    for (size_t i = 0; i < dc.seqs[x].size(); ++i)
      name += (i ? "," : "") + c.objects[dc.seqs[x][i]];
    cat.objects[x] = "(" + name + ")";
    cat.degree[x] = (int)dc.seqs[x].size() - 1;
  }

  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      const auto& sa = dc.seqs[x];
      const auto& sb = dc.seqs[y];
      const long k = (long)sa.size() - 1, m = (long)sb.size() - 1;
      std::vector<DeltaCategory::Summand> tops, rest;
      for (const auto& phi : monotone_injections(k, m)) {
        bool ok = true;
        for (long i = 0; i <= k; ++i)
          if (sa[i] != sb[phi[i]]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (phi[k] == m)
          tops.push_back({phi, true});
        else
          rest.push_back({phi, false});
      }
      auto& list = dc.summands[x][y];
      list = tops;
      list.insert(list.end(), rest.begin(), rest.end());
      std::vector<ChainComplex> parts;
      for (const auto& s : list)
        parts.push_back(s.top ? ChainComplex::unit() : c.hom[sa[k]][sb[m]]);
      dc.hom_sums[x][y] = chainz::direct_sum(parts);
      cat.hom[x][y] = dc.hom_sums[x][y].complex;
    }

  for (long x = 0; x < n; ++x) {
    // unit: the inclusion of the identity injection's summand
    const auto& list = dc.summands[x][x];
    long id_pos = -1;
    for (size_t r = 0; r < list.size(); ++r)
      if (list[r].top) id_pos = (long)r;
    if (id_pos < 0) throw std::logic_error("delta category: missing identity summand");
    cat.unit[x] = dc.hom_sums[x][x].inclusions[id_pos];
  }

  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        const auto src = chainz::tensor(cat.hom[y][z], cat.hom[x][y]);
        if (src.is_zero_complex() || dc.summands[y][z].empty() ||
            dc.summands[x][y].empty()) {
          cat.comp[x][y][z] = chainz::zero_map(src, cat.hom[x][z]);
          continue;
        }
        const auto dist =
            chainz::distribute_tensor(dc.hom_sums[y][z], dc.hom_sums[x][y]);
        std::vector<ChainMap> pair_maps;
        for (const auto& phi : dc.summands[y][z])
          for (const auto& psi : dc.summands[x][y]) {
            // composite injection
            std::vector<long> chi(psi.phi.size());
            for (size_t i = 0; i < psi.phi.size(); ++i)
              chi[i] = phi.phi[psi.phi[i]];
            const bool top = phi.top && psi.top;
            long r = -1;
            for (size_t t = 0; t < dc.summands[x][z].size(); ++t)
              if (dc.summands[x][z][t].phi == chi &&
                  dc.summands[x][z][t].top == top)
                r = (long)t;
            if (r < 0) throw std::logic_error("delta category: composite missing");
            const auto& incl = dc.hom_sums[x][z].inclusions[r];
            const long bk = dc.seqs[x].back(), bn = dc.seqs[y].back(),
                       bm = dc.seqs[z].back();
            ChainMap factor;
            if (phi.top && psi.top)
              factor = chainz::unitor_left(ChainComplex::unit());
            else if (!phi.top && psi.top)
              factor = chainz::unitor_right(c.hom[bn][bm]);
            else if (phi.top && !psi.top)
              factor = chainz::unitor_left(c.hom[bk][bn]);
            else
              factor = c.comp[bk][bn][bm];
            pair_maps.push_back(chainz::compose(incl, factor));
          }
        cat.comp[x][y][z] = chainz::compose(
            chainz::map_from_sum(dist.pairs, pair_maps), dist.iso);
      }

  // projection to c: last object of the sequence
  auto& p = dc.projection;
  p.source = cat;
  p.target = c;
  p.on_objects.resize(n);
  p.on_homs.assign(n, std::vector<ChainMap>(n));
  for (long x = 0; x < n; ++x) p.on_objects[x] = dc.seqs[x].back();
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      const long bk = dc.seqs[x].back(), bm = dc.seqs[y].back();
      if (dc.summands[x][y].empty()) {
        p.on_homs[x][y] = chainz::zero_map(cat.hom[x][y], c.hom[bk][bm]);
        continue;
      }
      std::vector<ChainMap> comps;
      for (const auto& s : dc.summands[x][y])
        comps.push_back(s.top ? c.unit[bm]
                              : chainz::identity_map(c.hom[bk][bm]));
      p.on_homs[x][y] = chainz::map_from_sum(dc.hom_sums[x][y], comps);
    }
  return dc;
}

CommaTopCategory comma_top_category(const DeltaCategory& dc, long c) {
  CommaTopCategory out;
  for (long x = 0; x < (long)dc.seqs.size(); ++x)
    if (dc.seqs[x].back() == c) out.objects.push_back(x);
  const long n = (long)out.objects.size();
  out.morphisms.assign(n, std::vector<std::vector<std::vector<long>>>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (const auto& s : dc.summands[out.objects[a]][out.objects[b]])
        if (s.top) out.morphisms[a][b].push_back(s.phi);
  out.initial = -1;
  for (long a = 0; a < n; ++a)
    if (dc.seqs[out.objects[a]].size() == 1) out.initial = a;

  auto& cat = out.cat;
  cat.objects.resize(n);
  cat.hom.assign(n, std::vector<ChainComplex>(n));
  cat.comp.assign(n, std::vector<std::vector<ChainMap>>(n, std::vector<ChainMap>(n)));
  cat.unit.resize(n);
  for (long a = 0; a < n; ++a) {
    cat.objects[a] = dc.cat.objects[out.objects[a]];
    for (long b = 0; b < n; ++b)
      cat.hom[a][b] = ChainComplex::single(
          chainz::FpAbGroup::free_group((long)out.morphisms[a][b].size()), 0);
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long d = 0; d < n; ++d) {
        const long p = (long)out.morphisms[b][d].size();
        const long q = (long)out.morphisms[a][b].size();
        ChainMap m(chainz::tensor(cat.hom[b][d], cat.hom[a][b]), cat.hom[a][d]);
        if (p > 0 && q > 0 && !out.morphisms[a][d].empty()) {
          hocolim::zmat::IntMatrix t((long)out.morphisms[a][d].size(), p * q);
          for (long i = 0; i < p; ++i)
            for (long j = 0; j < q; ++j) {
              const auto& phi = out.morphisms[b][d][i];
              const auto& psi = out.morphisms[a][b][j];
              std::vector<long> chi(psi.size());
              for (size_t u = 0; u < psi.size(); ++u) chi[u] = phi[psi[u]];
              long r = -1;
              for (size_t u = 0; u < out.morphisms[a][d].size(); ++u)
                if (out.morphisms[a][d][u] == chi) r = (long)u;
              if (r < 0) throw std::logic_error("comma category: composite missing");
              t.at(r, i * q + j) = 1;
            }
          m.set(0, std::move(t));
        }
        cat.comp[a][b][d] = std::move(m);
      }
  for (long a = 0; a < n; ++a) {
    ChainMap u(ChainComplex::unit(), cat.hom[a][a]);
    const auto& seq = dc.seqs[out.objects[a]];
    std::vector<long> id_phi(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) id_phi[i] = (long)i;
    hocolim::zmat::IntMatrix col((long)out.morphisms[a][a].size(), 1);
    for (size_t r = 0; r < out.morphisms[a][a].size(); ++r)
      if (out.morphisms[a][a][r] == id_phi) col.at((long)r, 0) = 1;
    u.set(0, std::move(col));
    cat.unit[a] = std::move(u);
  }

  auto& inc = out.inclusion;
  inc.source = cat;
  inc.target = dc.cat;
  inc.on_objects = out.objects;
  inc.on_homs.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const long x = out.objects[a], y = out.objects[b];
      ChainMap f(cat.hom[a][b], dc.cat.hom[x][y]);
      if (!out.morphisms[a][b].empty() && dc.cat.hom[x][y].gens(0) > 0) {
        hocolim::zmat::IntMatrix m(dc.cat.hom[x][y].gens(0),
                                   (long)out.morphisms[a][b].size());
        for (size_t j = 0; j < out.morphisms[a][b].size(); ++j) {
          long r = -1;
          for (size_t t = 0; t < dc.summands[x][y].size(); ++t)
            if (dc.summands[x][y][t].top &&
                dc.summands[x][y][t].phi == out.morphisms[a][b][j])
              r = (long)t;
          if (r < 0) throw std::logic_error("comma category: summand missing");
          const auto col = dc.hom_sums[x][y].inclusions[r].comp(0);
          for (long i = 0; i < m.rows(); ++i) m.at(i, (long)j) = col.at(i, 0);
        }
        f.set(0, std::move(m));
      }
      inc.on_homs[a][b] = std::move(f);
    }
  return out;
}

}  // namespace hocolim::dgcat
