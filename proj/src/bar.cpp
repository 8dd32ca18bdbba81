#include "hocolim/bar.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace hocolim::bar {

using chainz::FpAbGroup;
using chainz::Sum;
using chainz::TensorTree;
using zmat::Int;
using zmat::IntMatrix;

namespace {

ChainMap rebase(const ChainMap& m, ChainComplex src, ChainComplex tgt) {
  ChainMap out(std::move(src), std::move(tgt));
  out.comps = m.comps;
  out.validate();
  return out;
}

long gens_at(const ChainComplex& c, int n) {
  return c.in_support(n) ? c.gens(n) : 0;
}

/// Stored composition map when set, the forced zero map otherwise (valid
/// categories may leave comp unset when the target hom vanishes).
ChainMap comp_of(const DgCategory& s, long a, long b, long c) {
  const ChainComplex src = chainz::tensor(s.hom[b][c], s.hom[a][b]);
  const auto& stored = s.comp[a][b][c];
  if (stored.source.same_presentation(src) &&
      stored.target.same_presentation(s.hom[a][c]))
    return stored;
  return chainz::zero_map(src, s.hom[a][c]);
}

ChainMap action_of(const Diagram& x, long a, long b) {
  const ChainComplex src = chainz::tensor(x.shape.hom[a][b], x.value[a]);
  const auto& stored = x.action[a][b];
  if (stored.source.same_presentation(src) &&
      stored.target.same_presentation(x.value[b]))
    return stored;
  return chainz::zero_map(src, x.value[b]);
}

/// Left-nested tensor of a list of maps, matching tensor_list of the
/// endpoint lists.
ChainMap tensor_list_map(const std::vector<ChainMap>& fs) {
  ChainMap acc = fs.at(0);
  for (std::size_t j = 1; j < fs.size(); ++j)
    acc = chainz::tensor_map(acc, fs[j]);
  return acc;
}

/// tensor_list(leaves) -> tensor_list(leaves with from_unit.target inserted
/// at pos), inserting the image of the unit generator. The inserted factor
/// travels through even degree zero, so the move is signless.
ChainMap insert_factor(const std::vector<ChainComplex>& leaves,
                       std::size_t pos, const ChainMap& from_unit) {
  const long m = (long)leaves.size();
  std::vector<ChainComplex> out_leaves;
  for (std::size_t j = 0; j < pos; ++j) out_leaves.push_back(leaves[j]);
  out_leaves.push_back(from_unit.target);
  for (std::size_t j = pos; j < leaves.size(); ++j)
    out_leaves.push_back(leaves[j]);
  const ChainComplex src = chainz::tensor_list(leaves);
  const ChainComplex tgt = chainz::tensor_list(out_leaves);
  if (src.is_zero_complex()) return chainz::zero_map(src, tgt);

  std::vector<ChainComplex> lv = leaves;
  lv.push_back(ChainComplex::unit());
  std::vector<int> base((std::size_t)m);
  std::iota(base.begin(), base.end(), 0);
  const TensorTree with_unit = TensorTree::make_node(
      chainz::left_nested_tree(base), TensorTree::make_leaf((int)m));
  std::vector<int> order;
  for (std::size_t j = 0; j < pos; ++j) order.push_back((int)j);
  order.push_back((int)m);
  for (long j = (long)pos; j < m; ++j) order.push_back((int)j);
  const ChainMap iso =
      chainz::structural_iso(lv, with_unit, chainz::left_nested_tree(order));

  std::vector<ChainMap> fs;
  for (int id : order)
    fs.push_back(id == (int)m ? from_unit : chainz::identity_map(lv[id]));
  const ChainMap apply = tensor_list_map(fs);

  const ChainMap step1 = rebase(chainz::unitor_right_inv(src), src, iso.source);
  const ChainMap step2 = rebase(apply, iso.target, tgt);
  return rebase(chainz::compose(step2, chainz::compose(iso, step1)), src, tgt);
}

long tuple_index(const std::vector<long>& tup, long k) {
  long idx = 0, w = 1;
  for (long d : tup) {
    idx += d * w;
    w *= k;
  }
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// The bar complex at one object

BarComplex bar_complex(const Diagram& x, long c, int truncation) {
  if (truncation < 0)
    throw std::invalid_argument("bar: negative truncation");
  const DgCategory& s = x.shape;
  const long k = s.size();
  BarComplex out;
  out.object = c;
  out.truncation = truncation;

  for (int n = 0; n <= truncation; ++n) {
    BarLevel lv;
    long count = 1;
    for (int j = 0; j <= n; ++j) count *= k;
    std::vector<ChainComplex> parts;
    for (long t = 0; t < count; ++t) {
      std::vector<long> tup((std::size_t)n + 1);
      long r = t;
      for (int j = 0; j <= n; ++j) {
        tup[(std::size_t)j] = r % k;
        r /= k;
      }
      std::vector<ChainComplex> leaves;
      for (int j = 0; j <= n; ++j) {
        const long srco = tup[(std::size_t)(n - j)];
        const long dsto = (j == 0) ? c : tup[(std::size_t)(n - j + 1)];
        leaves.push_back(s.hom[srco][dsto]);
      }
      leaves.push_back(x.value[tup[0]]);
      parts.push_back(chainz::tensor_list(leaves));
      lv.tuples.push_back(std::move(tup));
      lv.leaves.push_back(std::move(leaves));
    }
    lv.sum = chainz::direct_sum(parts);
    out.levels.push_back(std::move(lv));
  }

  // Faces d_i fuse the adjacent factors (i, i+1); the last one acts on the
  // value through the diagram action.
  out.faces.resize((std::size_t)truncation + 1);
  for (int n = 1; n <= truncation; ++n) {
    const auto& lv = out.levels[(std::size_t)n];
    const auto& prev = out.levels[(std::size_t)n - 1];
    for (int i = 0; i <= n; ++i) {
      std::vector<ChainMap> legs;
      for (std::size_t t = 0; t < lv.tuples.size(); ++t) {
        const auto& tup = lv.tuples[t];
        const ChainComplex& term = lv.sum.inclusions[t].source;
        std::vector<long> drop = tup;
        ChainMap binop;
        if (i < n) {
          const long dsto = (i == 0) ? c : tup[(std::size_t)(n - i + 1)];
          binop = comp_of(s, tup[(std::size_t)(n - i - 1)],
                          tup[(std::size_t)(n - i)], dsto);
          drop.erase(drop.begin() + (n - i));
        } else {
          binop = action_of(x, tup[0], tup[1]);
          drop.erase(drop.begin());
        }
        if (term.is_zero_complex()) {
          legs.push_back(chainz::zero_map(term, prev.sum.complex));
          continue;
        }
        const long j = tuple_index(drop, k);
        const ChainMap fuse = chainz::compose_adjacent(lv.leaves[t], i, binop);
        legs.push_back(chainz::compose(
            prev.sum.inclusions[(std::size_t)j],
            rebase(fuse, term, prev.sum.inclusions[(std::size_t)j].source)));
      }
      out.faces[(std::size_t)n].push_back(chainz::map_from_sum(lv.sum, legs));
    }
  }

  // Degeneracies s_i insert the unit of c_{n-i} after factor i.
  out.degeneracies.resize((std::size_t)truncation + 1);
  for (int n = 0; n + 1 <= truncation; ++n) {
    const auto& lv = out.levels[(std::size_t)n];
    const auto& next = out.levels[(std::size_t)n + 1];
    for (int i = 0; i <= n; ++i) {
      std::vector<ChainMap> legs;
      for (std::size_t t = 0; t < lv.tuples.size(); ++t) {
        const auto& tup = lv.tuples[t];
        const ChainComplex& term = lv.sum.inclusions[t].source;
        std::vector<long> ins = tup;
        ins.insert(ins.begin() + (n - i), tup[(std::size_t)(n - i)]);
        const long j = tuple_index(ins, k);
        const ChainMap put = insert_factor(lv.leaves[t], (std::size_t)i + 1,
                                           s.unit[tup[(std::size_t)(n - i)]]);
        legs.push_back(chainz::compose(
            next.sum.inclusions[(std::size_t)j],
            rebase(put, term, next.sum.inclusions[(std::size_t)j].source)));
      }
      out.degeneracies[(std::size_t)n].push_back(
          chainz::map_from_sum(lv.sum, legs));
    }
  }

  // Moore total complex: level n shifted by n (so its internal differential
  // carries (-1)^n) plus the alternating face sum one block down.
  std::vector<ChainComplex> parts;
  for (int n = 0; n <= truncation; ++n)
    parts.push_back(chainz::shift(out.levels[(std::size_t)n].sum.complex, n));
  out.blocks = chainz::direct_sum(parts);
  ChainComplex tot = out.blocks.complex;
  for (int t = tot.lo + 1; t <= tot.hi(); ++t) {
    IntMatrix& d = tot.diffs[(std::size_t)(t - tot.lo - 1)];
    for (int n = 1; n <= truncation; ++n) {
      const IntMatrix f = face_differential(out, n).comp(t - n);
      if (f.rows() == 0 || f.cols() == 0) continue;
      long roff = 0, coff = 0;
      for (int mm = 0; mm < n - 1; ++mm)
        roff += gens_at(out.levels[(std::size_t)mm].sum.complex, t - 1 - mm);
      for (int mm = 0; mm < n; ++mm)
        coff += gens_at(out.levels[(std::size_t)mm].sum.complex, t - mm);
      for (long i = 0; i < f.rows(); ++i)
        for (long j = 0; j < f.cols(); ++j)
          d.at(roff + i, coff + j) = f.at(i, j);
    }
  }
  tot.validate();
  out.total = std::move(tot);

  // Augmentation: the action on level 0, zero on the higher blocks.
  std::vector<ChainMap> legs0;
  const auto& lv0 = out.levels[0];
  for (std::size_t t = 0; t < lv0.tuples.size(); ++t) {
    const ChainComplex& term = lv0.sum.inclusions[t].source;
    legs0.push_back(
        rebase(action_of(x, lv0.tuples[t][0], c), term, x.value[c]));
  }
  const ChainMap aug0 = chainz::map_from_sum(lv0.sum, legs0);
  std::vector<ChainMap> blegs;
  for (int n = 0; n <= truncation; ++n) {
    const ChainComplex& part = out.blocks.inclusions[(std::size_t)n].source;
    blegs.push_back(n == 0 ? rebase(aug0, part, x.value[c])
                           : chainz::zero_map(part, x.value[c]));
  }
  out.augmentation =
      rebase(chainz::map_from_sum(out.blocks, blegs), out.total, x.value[c]);
  return out;
}

ChainMap face_differential(const BarComplex& b, int n) {
  const auto& fs = b.faces.at((std::size_t)n);
  ChainMap del = fs.at(0);
  for (std::size_t i = 1; i < fs.size(); ++i)
    del = chainz::add_maps(
        del, chainz::scale_map(fs[i], (i % 2 == 0) ? Int(1) : Int(-1)));
  return del;
}

bool simplicial_identities(const BarComplex& b) {
  const int N = b.truncation;
  for (int n = 2; n <= N; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!chainz::equal_maps(
                chainz::compose(b.faces[(std::size_t)n - 1][(std::size_t)i],
                                b.faces[(std::size_t)n][(std::size_t)j]),
                chainz::compose(b.faces[(std::size_t)n - 1][(std::size_t)j - 1],
                                b.faces[(std::size_t)n][(std::size_t)i])))
          return false;
  for (int n = 0; n + 1 <= N; ++n) {
    const auto& sg = b.degeneracies[(std::size_t)n];
    const auto& dn1 = b.faces[(std::size_t)n + 1];
    const ChainMap id = chainz::identity_map(b.levels[(std::size_t)n].sum.complex);
    for (int j = 0; j <= n; ++j) {
      if (!chainz::equal_maps(chainz::compose(dn1[(std::size_t)j], sg[(std::size_t)j]), id))
        return false;
      if (!chainz::equal_maps(chainz::compose(dn1[(std::size_t)j + 1], sg[(std::size_t)j]), id))
        return false;
      for (int i = 0; i <= n + 1; ++i) {
        if (i == j || i == j + 1 || n < 1) continue;
        const ChainMap lhs = chainz::compose(dn1[(std::size_t)i], sg[(std::size_t)j]);
        const ChainMap rhs =
            (i < j) ? chainz::compose(b.degeneracies[(std::size_t)n - 1][(std::size_t)j - 1],
                                      b.faces[(std::size_t)n][(std::size_t)i])
                    : chainz::compose(b.degeneracies[(std::size_t)n - 1][(std::size_t)j],
                                      b.faces[(std::size_t)n][(std::size_t)i - 1]);
        if (!chainz::equal_maps(lhs, rhs)) return false;
      }
    }
    if (n + 2 <= N)
      for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          if (!chainz::equal_maps(
                  chainz::compose(b.degeneracies[(std::size_t)n + 1][(std::size_t)j + 1],
                                  b.degeneracies[(std::size_t)n][(std::size_t)i]),
                  chainz::compose(b.degeneracies[(std::size_t)n + 1][(std::size_t)i],
                                  b.degeneracies[(std::size_t)n][(std::size_t)j])))
            return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The bar replacement diagram

namespace {

/// Action of the replacement: left composition on the outermost hom factor,
/// with the Koszul twist for moving the acting element past the block shift.
ChainMap bar_action(const Diagram& x, const std::vector<BarComplex>& data,
                    long u, long v) {
  const DgCategory& s = x.shape;
  const ChainComplex& hom = s.hom[u][v];
  const ChainComplex src = chainz::tensor(hom, data[(std::size_t)u].total);
  if (src.is_zero_complex())
    return chainz::zero_map(src, data[(std::size_t)v].total);
  const int N = data[(std::size_t)u].truncation;
  const Sum homsum = chainz::direct_sum({hom});
  const auto dist =
      chainz::distribute_tensor(homsum, data[(std::size_t)u].blocks);

  std::vector<ChainMap> legs;
  for (int n = 0; n <= N; ++n) {
    const auto& lva = data[(std::size_t)u].levels[(std::size_t)n];
    const auto& lvb = data[(std::size_t)v].levels[(std::size_t)n];

    // Level map: fuse hom(u,v) with the outer factor hom(c_n, u).
    const auto d2 = chainz::distribute_tensor(homsum, lva.sum);
    std::vector<ChainMap> tlegs;
    for (std::size_t t = 0; t < lva.tuples.size(); ++t) {
      const ChainComplex& pair = d2.pairs.inclusions[t].source;
      const ChainComplex& term = lva.sum.inclusions[t].source;
      if (pair.is_zero_complex() || term.is_zero_complex()) {
        tlegs.push_back(chainz::zero_map(pair, lvb.sum.complex));
        continue;
      }
      std::vector<ChainComplex> lv2;
      lv2.push_back(hom);
      for (const auto& l : lva.leaves[t]) lv2.push_back(l);
      const long m = (long)lv2.size();
      std::vector<int> rest((std::size_t)m - 1);
      std::iota(rest.begin(), rest.end(), 1);
      std::vector<int> flat((std::size_t)m);
      std::iota(flat.begin(), flat.end(), 0);
      const ChainMap iso = chainz::structural_iso(
          lv2,
          TensorTree::make_node(TensorTree::make_leaf(0),
                                chainz::left_nested_tree(rest)),
          chainz::left_nested_tree(flat));
      const ChainMap fuse =
          chainz::compose_adjacent(lv2, 0, comp_of(s, lva.tuples[t][(std::size_t)n], u, v));
      const auto& incl = lvb.sum.inclusions[t];
      tlegs.push_back(chainz::compose(
          incl, rebase(chainz::compose(fuse, rebase(iso, pair, iso.source)),
                       pair, incl.source)));
    }
    const ChainMap an =
        rebase(chainz::compose(chainz::map_from_sum(d2.pairs, tlegs), d2.iso),
               chainz::tensor(hom, lva.sum.complex), lvb.sum.complex);

    // Reindex the level map between the shifted blocks.
    const ChainComplex ssrc = chainz::shift(an.source, n);
    const ChainComplex stgt =
        chainz::shift(lvb.sum.complex, n);
    ChainMap ansh(ssrc, stgt);
    for (int t = ssrc.lo; t <= ssrc.hi(); ++t)
      if (gens_at(ssrc, t) > 0 && gens_at(stgt, t) > 0)
        ansh.set(t, an.comp(t - n));
    ansh.validate();

    // Move hom past the shift: braiding against Z placed in degree n gives
    // the (-1)^{n·p} twist.
    const ChainComplex zn = chainz::shift(ChainComplex::unit(), n);
    const ChainMap chi = chainz::structural_iso(
        {hom, zn, lva.sum.complex},
        TensorTree::make_node(
            TensorTree::make_leaf(0),
            TensorTree::make_node(TensorTree::make_leaf(1),
                                  TensorTree::make_leaf(2))),
        TensorTree::make_node(
            TensorTree::make_leaf(1),
            TensorTree::make_node(TensorTree::make_leaf(0),
                                  TensorTree::make_leaf(2))));
    const ChainComplex& pairn = dist.pairs.inclusions[(std::size_t)n].source;
    const auto& inclb = data[(std::size_t)v].blocks.inclusions[(std::size_t)n];
    legs.push_back(chainz::compose(
        inclb, rebase(chainz::compose(ansh, rebase(chi, pairn, ssrc)), pairn,
                      inclb.source)));
  }
  const ChainMap act =
      chainz::compose(chainz::map_from_sum(dist.pairs, legs), dist.iso);
  return rebase(act, src, data[(std::size_t)v].total);
}

}  // namespace

BarReplacement bar_replacement(const Diagram& x, int truncation) {
  const DgCategory& s = x.shape;
  for (long a = 0; a < s.size(); ++a)
    for (long b = 0; b < s.size(); ++b) {
      const auto& h = s.hom[(std::size_t)a][(std::size_t)b];
      for (int n = h.lo; n < 0 && n <= h.hi(); ++n)
        if (h.gens(n) > 0)
          throw std::invalid_argument(
              "bar: hom complexes must be concentrated in degrees >= 0");
    }

  BarReplacement out;
  out.truncation = truncation;
  for (long c = 0; c < s.size(); ++c)
    out.data.push_back(bar_complex(x, c, truncation));

  int vlo = 0;
  for (const auto& v : x.value)
    for (int n = v.lo; n < 0 && n <= v.hi(); ++n)
      if (v.gens(n) > 0) vlo = std::min(vlo, n);
  out.safe_degree = truncation - 2 + vlo;

  Diagram b;
  b.shape = s;
  for (long c = 0; c < s.size(); ++c)
    b.value.push_back(out.data[(std::size_t)c].total);
  b.action.resize((std::size_t)s.size());
  for (long u = 0; u < s.size(); ++u)
    for (long v = 0; v < s.size(); ++v)
      b.action[(std::size_t)u].push_back(bar_action(x, out.data, u, v));
  b.validate();
  out.b = std::move(b);

  std::vector<ChainMap> comps;
  for (long c = 0; c < s.size(); ++c)
    comps.push_back(out.data[(std::size_t)c].augmentation);
  out.eps = Transformation{out.b, x, std::move(comps)};
  out.eps.validate();
  return out;
}

Transformation bar_map(const BarReplacement& src, const BarReplacement& dst,
                       const Transformation& f) {
  if (src.truncation != dst.truncation)
    throw std::invalid_argument("bar_map: truncations differ");
  const DgCategory& s = f.source.shape;
  const int N = src.truncation;
  std::vector<ChainMap> comps;
  for (long c = 0; c < s.size(); ++c) {
    const BarComplex& a = src.data[(std::size_t)c];
    const BarComplex& b = dst.data[(std::size_t)c];
    std::vector<ChainMap> blegs;
    for (int n = 0; n <= N; ++n) {
      const auto& lva = a.levels[(std::size_t)n];
      const auto& lvb = b.levels[(std::size_t)n];
      std::vector<ChainMap> legs;
      for (std::size_t t = 0; t < lva.tuples.size(); ++t) {
        const ChainComplex& term = lva.sum.inclusions[t].source;
        if (term.is_zero_complex()) {
          legs.push_back(chainz::zero_map(term, lvb.sum.complex));
          continue;
        }
        std::vector<ChainMap> fs;
        for (std::size_t j = 0; j + 1 < lva.leaves[t].size(); ++j)
          fs.push_back(chainz::identity_map(lva.leaves[t][j]));
        fs.push_back(f.components[(std::size_t)lva.tuples[t][0]]);
        const auto& incl = lvb.sum.inclusions[t];
        legs.push_back(chainz::compose(
            incl, rebase(tensor_list_map(fs), term, incl.source)));
      }
      const ChainMap ln = chainz::map_from_sum(lva.sum, legs);
      const ChainComplex& ssrc = a.blocks.inclusions[(std::size_t)n].source;
      const ChainComplex& stgt = b.blocks.inclusions[(std::size_t)n].source;
      ChainMap lsh(ssrc, stgt);
      for (int t = ssrc.lo; t <= ssrc.hi(); ++t)
        if (gens_at(ssrc, t) > 0 && gens_at(stgt, t) > 0)
          lsh.set(t, ln.comp(t - n));
      lsh.validate();
      blegs.push_back(
          chainz::compose(b.blocks.inclusions[(std::size_t)n], lsh));
    }
    comps.push_back(
        rebase(chainz::map_from_sum(a.blocks, blegs), a.total, b.total));
  }
  Transformation out{src.b, dst.b, std::move(comps)};
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Reedy latching of the bar bimodule

namespace {

diagram::Cube one_cube(const DgCategory& s, long a, long b) {
  diagram::Cube q;
  q.size = 1;
  const ChainComplex src =
      (a == b) ? ChainComplex::unit() : ChainComplex::zero();
  const ChainComplex& tgt = s.hom[(std::size_t)a][(std::size_t)b];
  q.value = {src, tgt};
  q.edge = {{a == b ? s.unit[(std::size_t)a] : chainz::zero_map(src, tgt)},
            {ChainMap()}};
  q.validate();
  return q;
}

}  // namespace

BarLatchingReport bar_reedy_latching_check(const DgCategory& c, int n) {
  if (n < 0)
    throw std::invalid_argument("bar latching: negative simplicial degree");
  BarLatchingReport rep;
  const auto lf = dgcat::is_locally_flat(c);
  if (!lf.flat) {
    rep.skipped = true;
    rep.detail = "shape hom complexes are not degreewise free";
    return rep;
  }
  rep.bimodule_ok = true;
  rep.representable_ok = true;
  const long k = c.size();
  long count = 1;
  for (int j = 0; j <= n; ++j) count *= k;
  for (long t = 0; t < count; ++t) {
    std::vector<long> tup((std::size_t)n + 1);
    long r = t;
    for (int j = 0; j <= n; ++j) {
      tup[(std::size_t)j] = r % k;
      r /= k;
    }
    // Inner cube X_n ⊗ … ⊗ X_1 (empty when n = 0).
    auto inner = [&]() {
      diagram::Cube cb = one_cube(c, tup[(std::size_t)n - 1], tup[(std::size_t)n]);
      for (int i = n - 1; i >= 1; --i)
        cb = diagram::cube_tensor(cb, one_cube(c, tup[(std::size_t)i - 1], tup[(std::size_t)i]));
      return cb;
    };
    const ChainMap corner =
        (n == 0) ? chainz::zero_map(ChainComplex::zero(), ChainComplex::unit())
                 : diagram::pcm(inner()).corner;
    for (long d = 0; d < k; ++d)
      for (long e = 0; e < k; ++e) {
        const ChainMap m = chainz::tensor_map(
            chainz::identity_map(c.hom[tup[(std::size_t)n]][(std::size_t)e]),
            chainz::tensor_map(
                corner, chainz::identity_map(c.hom[(std::size_t)d][tup[0]])));
        if (!chainz::is_cofibration(m)) {
          rep.bimodule_ok = false;
          rep.detail += "bimodule latching fails at tuple " +
                        std::to_string(t) + " anchors (" + std::to_string(d) +
                        ", " + std::to_string(e) + ")\n";
        }
      }
    for (long cc = 0; cc < k; ++cc) {
      const diagram::Cube x0 = one_cube(c, cc, tup[0]);
      const diagram::Cube full =
          (n == 0) ? x0 : diagram::cube_tensor(inner(), x0);
      const ChainMap corner2 = diagram::pcm(full).corner;
      for (long e = 0; e < k; ++e) {
        const ChainMap m = chainz::tensor_map(
            chainz::identity_map(c.hom[tup[(std::size_t)n]][(std::size_t)e]),
            corner2);
        if (!chainz::is_cofibration(m)) {
          rep.representable_ok = false;
          rep.detail += "representable latching fails at tuple " +
                        std::to_string(t) + " base " + std::to_string(cc) +
                        " anchor " + std::to_string(e) + "\n";
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Extra-degeneracy contraction on bar resolutions of representables

ContractionReport contraction_check(const DgCategory& shape, long c,
                                    const ChainComplex& m, int truncation) {
  if (truncation < 1)
    throw std::invalid_argument("contraction: truncation too small");
  const Diagram x =
      diagram::diagram_tensor(diagram::representable(shape, c), m);
  const BarReplacement br = bar_replacement(x, truncation);
  ContractionReport rep;
  rep.safe_degree = br.safe_degree;
  rep.section_exact = true;
  rep.homotopy_exact = true;
  const long k = shape.size();
  for (long e = 0; e < k; ++e) {
    const BarComplex& bc = br.data[(std::size_t)e];
    // Section: insert the unit of e, landing in the tuple (e) at level 0.
    const std::vector<ChainComplex> single = {x.value[(std::size_t)e]};
    const auto& incl0 = bc.levels[0].sum.inclusions[(std::size_t)e];
    const ChainMap s0 = chainz::compose(
        incl0, rebase(insert_factor(single, 0, shape.unit[(std::size_t)e]),
                      x.value[(std::size_t)e], incl0.source));
    const auto& block0 = bc.blocks.inclusions[0];
    const ChainMap sect = rebase(
        chainz::compose(block0,
                        rebase(s0, x.value[(std::size_t)e], block0.source)),
        x.value[(std::size_t)e], bc.total);
    if (!chainz::equal_maps(chainz::compose(bc.augmentation, sect),
                            chainz::identity_map(x.value[(std::size_t)e])))
      rep.section_exact = false;

    // Homotopy: insert the unit of e at the front of every level.
    std::vector<ChainMap> h;
    for (int n = 0; n < truncation; ++n) {
      const auto& lv = bc.levels[(std::size_t)n];
      const auto& next = bc.levels[(std::size_t)n + 1];
      std::vector<ChainMap> legs;
      for (std::size_t t = 0; t < lv.tuples.size(); ++t) {
        std::vector<long> ext = lv.tuples[t];
        ext.push_back(e);
        const auto& incl = next.sum.inclusions[(std::size_t)tuple_index(ext, k)];
        legs.push_back(chainz::compose(
            incl,
            rebase(insert_factor(lv.leaves[t], 0, shape.unit[(std::size_t)e]),
                   lv.sum.inclusions[t].source, incl.source)));
      }
      h.push_back(chainz::map_from_sum(lv.sum, legs));
    }
    // Moore-level augmentation out of level 0.
    const ChainMap aug0 = rebase(
        chainz::compose(bc.augmentation,
                        rebase(block0, block0.source, bc.total)),
        bc.levels[0].sum.complex, x.value[(std::size_t)e]);
    const ChainMap lhs0 = chainz::compose(face_differential(bc, 1), h[0]);
    const ChainMap rhs0 = chainz::sub_maps(
        chainz::identity_map(bc.levels[0].sum.complex),
        chainz::compose(s0, aug0));
    if (!chainz::equal_maps(lhs0, rhs0)) rep.homotopy_exact = false;
    for (int n = 1; n < truncation; ++n) {
      const ChainMap lhs = chainz::add_maps(
          chainz::compose(face_differential(bc, n + 1), h[(std::size_t)n]),
          chainz::compose(h[(std::size_t)n - 1], face_differential(bc, n)));
      if (!chainz::equal_maps(
              lhs, chainz::identity_map(bc.levels[(std::size_t)n].sum.complex)))
        rep.homotopy_exact = false;
    }
  }
  rep.detail = "homotopy identity certified on simplicial levels 0.." +
               std::to_string(truncation - 1) +
               "; the top truncated level is outside the safe range";
  return rep;
}

// ---------------------------------------------------------------------------
// The Z/2 obstruction

bool two_id_forced_zero(const Diagram& x) {
  for (long t = 0; t < x.shape.size(); ++t) {
    const ChainMap two_unit =
        chainz::scale_map(x.shape.unit[(std::size_t)t], 2);
    if (!chainz::is_zero_map(two_unit)) return false;
    const ChainComplex& v = x.value[(std::size_t)t];
    const ChainMap composite = chainz::compose(
        action_of(x, t, t),
        chainz::compose(
            chainz::tensor_map(two_unit, chainz::identity_map(v)),
            chainz::unitor_left_inv(v)));
    // By unitality this composite is 2·id on the value; its first factor
    // vanishes, so 2·id must vanish.
    if (!chainz::equal_maps(composite,
                            chainz::scale_map(chainz::identity_map(v), 2)))
      return false;
    if (!chainz::is_zero_map(composite)) return false;
  }
  return true;
}

CounterexampleReport counterexample_z2() {
  const ChainComplex z2 = ChainComplex::single(FpAbGroup::cyclic(2), 0);
  ChainMap comp(chainz::tensor(z2, z2), z2);
  comp.set(0, IntMatrix{{1}});
  comp.validate();
  ChainMap unit(ChainComplex::unit(), z2);
  unit.set(0, IntMatrix{{1}});
  unit.validate();
  const DgCategory c = dgcat::one_object("end_z2", z2, comp, unit);

  CounterexampleReport r;
  r.unit_two_zero = chainz::is_zero_map(chainz::scale_map(c.unit[0], 2));
  const Diagram rep = diagram::representable(c, 0);
  r.forced_on_values = two_id_forced_zero(rep);

  const std::vector<ChainComplex> battery = {
      ChainComplex::unit(),
      ChainComplex::free_complex(0, {2, 1}, {IntMatrix{{0}, {2}}}),
      chainz::shift(ChainComplex::unit(), 3)};
  r.free_values_faithful = true;
  for (const auto& p : battery)
    if (chainz::is_zero_map(chainz::scale_map(chainz::identity_map(p), 2)))
      r.free_values_faithful = false;

  const auto lf = dgcat::is_locally_flat(c);
  r.locally_flat = lf.flat;
  if (!lf.flat && !lf.failures.empty())
    r.falsifier = lf.failures[0].report.detail;

  r.no_replacement = r.unit_two_zero && r.forced_on_values &&
                     r.free_values_faithful &&
                     !chainz::homology(rep.value[0]).is_trivial();
  r.detail =
      "unitality forces 2·id = 0 on every value of a diagram over the "
      "one-object shape with endomorphisms Z/2, while 2·id is nonzero on "
      "every nonzero degreewise-free complex; hence the only pointwise "
      "cofibrant diagram mapping to the representable is zero, and zero is "
      "not weakly equivalent to a value with homology Z/2";
  return r;
}

// ---------------------------------------------------------------------------
// Pointwise pushouts of diagrams and colimit witnesses

namespace {

/// Generator permutation tensor(hom, P) -> S for a pushout P of f, g and the
/// pushout S of the tensored maps: both list the generators of
/// tensor(hom, B) and tensor(hom, C), in different orders.
ChainMap tensor_pushout_iso(const ChainComplex& hom, const ChainComplex& b,
                            const ChainComplex& c, const ChainComplex& p,
                            const ChainComplex& s_complex) {
  const ChainComplex src = chainz::tensor(hom, p);
  ChainMap phi(src, s_complex);
  auto offset_in = [&](const ChainComplex& w, int pdeg, int t) {
    long off = 0;
    for (int pp = hom.lo; pp < pdeg; ++pp)
      off += gens_at(hom, pp) * gens_at(w, t - pp);
    return off;
  };
  auto total_gens = [&](const ChainComplex& w, int t) {
    long g = 0;
    for (int pp = hom.lo; pp <= hom.hi(); ++pp)
      g += gens_at(hom, pp) * gens_at(w, t - pp);
    return g;
  };
  for (int t = src.lo; t <= src.hi(); ++t) {
    if (gens_at(src, t) == 0) continue;
    IntMatrix mt(gens_at(s_complex, t), gens_at(src, t));
    long col = 0;
    for (int pdeg = hom.lo; pdeg <= hom.hi(); ++pdeg) {
      const int q = t - pdeg;
      const long gh = gens_at(hom, pdeg), gp = gens_at(p, q);
      const long gb = gens_at(b, q), gc = gens_at(c, q);
      if (gh == 0 || gp == 0) continue;
      const long boff = offset_in(b, pdeg, t);
      const long coff = total_gens(b, t) + offset_in(c, pdeg, t);
      for (long i = 0; i < gh; ++i)
        for (long j = 0; j < gp; ++j, ++col)
          mt.at(j < gb ? boff + i * gb + j : coff + i * gc + (j - gb), col) = 1;
    }
    phi.set(t, std::move(mt));
  }
  phi.validate();
  return phi;
}

void check_same_shape(const Transformation& f, const Transformation& g) {
  if (f.source.shape.size() != g.source.shape.size())
    throw std::invalid_argument("diagram pushout: shapes differ");
}

}  // namespace

PushoutDiagram pushout_diagram(const Transformation& f,
                               const Transformation& g) {
  check_same_shape(f, g);
  const DgCategory& s = f.source.shape;
  const long k = s.size();
  std::vector<chainz::Pushout> po;
  for (long t = 0; t < k; ++t)
    po.push_back(chainz::pushout(f.components[(std::size_t)t],
                                 g.components[(std::size_t)t]));

  Diagram d;
  d.shape = s;
  for (long t = 0; t < k; ++t) d.value.push_back(po[(std::size_t)t].complex);
  d.action.resize((std::size_t)k);
  for (long u = 0; u < k; ++u)
    for (long v = 0; v < k; ++v) {
      const ChainComplex& hom = s.hom[(std::size_t)u][(std::size_t)v];
      const ChainComplex src = chainz::tensor(hom, po[(std::size_t)u].complex);
      if (src.is_zero_complex()) {
        d.action[(std::size_t)u].push_back(
            chainz::zero_map(src, po[(std::size_t)v].complex));
        continue;
      }
      const ChainMap idh = chainz::identity_map(hom);
      const auto sq = chainz::pushout(
          chainz::tensor_map(idh, f.components[(std::size_t)u]),
          chainz::tensor_map(idh, g.components[(std::size_t)u]));
      const ChainMap phi = tensor_pushout_iso(
          hom, f.target.value[(std::size_t)u], g.target.value[(std::size_t)u],
          po[(std::size_t)u].complex, sq.complex);
      const ChainMap ind = chainz::pushout_induced(
          sq,
          chainz::compose(po[(std::size_t)v].from_right,
                          action_of(f.target, u, v)),
          chainz::compose(po[(std::size_t)v].from_bottom,
                          action_of(g.target, u, v)));
      d.action[(std::size_t)u].push_back(
          rebase(chainz::compose(ind, phi), src, po[(std::size_t)v].complex));
    }
  d.validate();

  PushoutDiagram out;
  std::vector<ChainMap> right, bottom;
  for (long t = 0; t < k; ++t) {
    right.push_back(po[(std::size_t)t].from_right);
    bottom.push_back(po[(std::size_t)t].from_bottom);
  }
  out.from_right = Transformation{f.target, d, std::move(right)};
  out.from_bottom = Transformation{g.target, d, std::move(bottom)};
  out.from_right.validate();
  out.from_bottom.validate();
  out.diagram = std::move(d);
  out.from_right.target = out.diagram;
  out.from_bottom.target = out.diagram;
  return out;
}

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool pointwise_cofibrant(const Diagram& x) {
  for (const auto& v : x.value)
    if (!chainz::is_cofibrant(v)) return false;
  return true;
}

bool squares_commute(const Transformation& top, const Transformation& bottom,
                     const Transformation& left, const Transformation& right) {
  // right ∘ top == bottom ∘ left, componentwise
  for (std::size_t t = 0; t < top.components.size(); ++t)
    if (!chainz::equal_maps(
            chainz::compose(right.components[t], top.components[t]),
            chainz::compose(bottom.components[t], left.components[t])))
      return false;
  return true;
}

}  // namespace

Transformation we_generation_witness(ColimitStep step,
                                     const ColimitWitnessData& f) {
  if (step == ColimitStep::span) {
    require(f.components.size() == 3,
            "span witness: need components on the three corners");
    const auto& fa = f.components[0];
    const auto& fb = f.components[1];
    const auto& fc = f.components[2];
    require(diagram::is_pointwise_cofibration(f.span_src.left) &&
                diagram::is_pointwise_cofibration(f.span_dst.left),
            "span witness: the distinguished legs must be pointwise "
            "cofibrations");
    for (const Diagram* x :
         {&f.span_src.left.source, &f.span_src.left.target,
          &f.span_src.right.target, &f.span_dst.left.source,
          &f.span_dst.left.target, &f.span_dst.right.target})
      require(pointwise_cofibrant(*x),
              "span witness: all corners must be pointwise cofibrant");
    require(diagram::is_pointwise_we(fa) && diagram::is_pointwise_we(fb) &&
                diagram::is_pointwise_we(fc),
            "span witness: components must be pointwise weak equivalences");
    require(squares_commute(fa, fb, f.span_src.left, f.span_dst.left) &&
                squares_commute(fa, fc, f.span_src.right, f.span_dst.right),
            "span witness: the component squares must commute");

    const auto p0 = pushout_diagram(f.span_src.left, f.span_src.right);
    const auto p1 = pushout_diagram(f.span_dst.left, f.span_dst.right);
    std::vector<ChainMap> comps;
    for (long t = 0; t < f.span_src.left.source.shape.size(); ++t) {
      const auto corner = chainz::pushout(
          f.span_src.left.components[(std::size_t)t],
          f.span_src.right.components[(std::size_t)t]);
      comps.push_back(rebase(
          chainz::pushout_induced(
              corner,
              chainz::compose(p1.from_right.components[(std::size_t)t],
                              fb.components[(std::size_t)t]),
              chainz::compose(p1.from_bottom.components[(std::size_t)t],
                              fc.components[(std::size_t)t])),
          p0.diagram.value[(std::size_t)t], p1.diagram.value[(std::size_t)t]));
    }
    Transformation ind{p0.diagram, p1.diagram, std::move(comps)};
    ind.validate();
    if (!diagram::is_pointwise_we(ind))
      throw std::runtime_error(
          "span witness: induced pushout map is not a pointwise weak "
          "equivalence");
    return ind;
  }

  const std::size_t k = f.chain_src.size();
  require(f.chain_dst.size() == k && f.components.size() == k + 1,
          "chain witness: mismatched chain lengths");
  for (std::size_t i = 0; i < k; ++i) {
    require(diagram::is_pointwise_cofibration(f.chain_src[i]) &&
                diagram::is_pointwise_cofibration(f.chain_dst[i]),
            "chain witness: steps must be pointwise cofibrations");
    require(pointwise_cofibrant(f.chain_src[i].source) &&
                pointwise_cofibrant(f.chain_dst[i].source),
            "chain witness: chain objects must be pointwise cofibrant");
    require(squares_commute(f.components[i], f.components[i + 1],
                            f.chain_src[i], f.chain_dst[i]),
            "chain witness: component squares must commute");
  }
  for (const auto& fi : f.components)
    require(diagram::is_pointwise_we(fi),
            "chain witness: components must be pointwise weak equivalences");
  require(pointwise_cofibrant(f.components.back().source) &&
              pointwise_cofibrant(f.components.back().target),
          "chain witness: chain objects must be pointwise cofibrant");
  // The colimit of a finite chain is its last object; the induced map is
  // the last component.
  const Transformation& ind = f.components.back();
  if (!diagram::is_pointwise_we(ind))
    throw std::runtime_error(
        "chain witness: induced colimit map is not a pointwise weak "
        "equivalence");
  return ind;
}

}  // namespace hocolim::bar
