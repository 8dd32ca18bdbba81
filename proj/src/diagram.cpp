#include "hocolim/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocolim::diagram {

using chainz::FpAbGroup;
using chainz::Sum;
using chainz::TensorTree;
using zmat::IntMatrix;

namespace {

/// Same generator matrices viewed against different presentations.
ChainMap rebase(const ChainMap& m, ChainComplex src, ChainComplex tgt) {
  ChainMap out(std::move(src), std::move(tgt));
  out.comps = m.comps;
  out.validate();
  return out;
}

/// (a ⊗ b) ⊗ c -> a ⊗ (b ⊗ c)
ChainMap associator(const ChainComplex& a, const ChainComplex& b,
                    const ChainComplex& c) {
  const std::vector<ChainComplex> leaves{a, b, c};
  return chainz::structural_iso(
      leaves,
      TensorTree::make_node(TensorTree::make_node(TensorTree::make_leaf(0),
                                                  TensorTree::make_leaf(1)),
                            TensorTree::make_leaf(2)),
      TensorTree::make_node(TensorTree::make_leaf(0),
                            TensorTree::make_node(TensorTree::make_leaf(1),
                                                  TensorTree::make_leaf(2))));
}

ChainMap associator_inv(const ChainComplex& a, const ChainComplex& b,
                        const ChainComplex& c) {
  const std::vector<ChainComplex> leaves{a, b, c};
  return chainz::structural_iso(
      leaves,
      TensorTree::make_node(TensorTree::make_leaf(0),
                            TensorTree::make_node(TensorTree::make_leaf(1),
                                                  TensorTree::make_leaf(2))),
      TensorTree::make_node(TensorTree::make_node(TensorTree::make_leaf(0),
                                                  TensorTree::make_leaf(1)),
                            TensorTree::make_leaf(2)));
}

void check_weight_shape(const Diagram& w, const Diagram& x) {
  if (w.shape.size() != x.shape.size())
    throw std::invalid_argument("weight and diagram shapes differ in size");
  for (long a = 0; a < w.shape.size(); ++a)
    for (long b = 0; b < w.shape.size(); ++b)
      if (!w.shape.hom[a][b].same_presentation(x.shape.hom[b][a]))
        throw std::invalid_argument("weight shape is not the opposite shape");
}

}  // namespace

void Diagram::validate() const {
  const long n = shape.size();
  if ((long)value.size() != n || (long)action.size() != n)
    throw std::invalid_argument("diagram: table sizes");
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const auto& m = action[a][b];
      if (!m.source.same_presentation(chainz::tensor(shape.hom[a][b], value[a])) ||
          !m.target.same_presentation(value[b]))
        throw std::invalid_argument("diagram: action endpoints at " +
                                    shape.objects[a] + "->" + shape.objects[b]);
      m.validate();
    }
  for (long c = 0; c < n; ++c) {
    if (value[c].is_zero_complex()) continue;
    const auto u = chainz::compose(
        action[c][c],
        chainz::compose(chainz::tensor_map(shape.unit[c],
                                           chainz::identity_map(value[c])),
                        chainz::unitor_left_inv(value[c])));
    if (!chainz::equal_maps(u, chainz::identity_map(value[c])))
      throw std::invalid_argument("diagram: unit acts nontrivially at " +
                                  shape.objects[c]);
  }
  for (long a = 0; a < n; ++a) {
    if (value[a].is_zero_complex()) continue;
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        if (shape.hom[a][b].is_zero_complex() ||
            shape.hom[b][c].is_zero_complex())
          continue;
        const auto lhs = chainz::compose(
            action[a][c],
            chainz::tensor_map(shape.comp[a][b][c],
                               chainz::identity_map(value[a])));
        const auto rhs = chainz::compose(
            action[b][c],
            chainz::compose(
                chainz::tensor_map(chainz::identity_map(shape.hom[b][c]),
                                   action[a][b]),
                associator(shape.hom[b][c], shape.hom[a][b], value[a])));
        if (!chainz::equal_maps(lhs, rhs))
          throw std::invalid_argument("diagram: action not associative at " +
                                      shape.objects[a] + "," + shape.objects[b] +
                                      "," + shape.objects[c]);
      }
  }
}

void Transformation::validate() const {
  const long n = source.shape.size();
  if (target.shape.size() != n || (long)components.size() != n)
    throw std::invalid_argument("transformation: table sizes");
  for (long c = 0; c < n; ++c) {
    if (!components[c].source.same_presentation(source.value[c]) ||
        !components[c].target.same_presentation(target.value[c]))
      throw std::invalid_argument("transformation: component endpoints at " +
                                  source.shape.objects[c]);
    components[c].validate();
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const auto lhs = chainz::compose(components[b], source.action[a][b]);
      const auto rhs = chainz::compose(
          target.action[a][b],
          chainz::tensor_map(chainz::identity_map(source.shape.hom[a][b]),
                             components[a]));
      if (!chainz::equal_maps(lhs, rhs))
        throw std::invalid_argument("transformation: naturality fails at " +
                                    source.shape.objects[a] + "->" +
                                    source.shape.objects[b]);
    }
}

Transformation identity_transformation(const Diagram& x) {
  Transformation t;
  t.source = x;
  t.target = x;
  for (const auto& v : x.value) t.components.push_back(chainz::identity_map(v));
  return t;
}

Transformation compose(const Transformation& g, const Transformation& f) {
  Transformation t;
  t.source = f.source;
  t.target = g.target;
  for (size_t c = 0; c < f.components.size(); ++c)
    t.components.push_back(chainz::compose(g.components[c], f.components[c]));
  return t;
}

Diagram representable(const DgCategory& c, long c0) {
  Diagram x;
  x.shape = c;
  x.value.resize(c.size());
  x.action.assign(c.size(), std::vector<ChainMap>(c.size()));
  for (long a = 0; a < c.size(); ++a) {
    x.value[a] = c.hom[c0][a];
    for (long b = 0; b < c.size(); ++b) x.action[a][b] = c.comp[c0][a][b];
  }
  return x;
}

Diagram constant_diagram(const DgCategory& c, ChainComplex m) {
  Diagram x;
  x.shape = c;
  x.value.assign(c.size(), m);
  x.action.assign(c.size(), std::vector<ChainMap>(c.size()));
  for (long a = 0; a < c.size(); ++a)
    for (long b = 0; b < c.size(); ++b) {
      const auto& h = c.hom[a][b];
      for (int n = h.lo; n <= h.hi(); ++n)
        if ((n != 0 && h.gens(n) > 0) || h.group(n).rels.cols() > 0)
          throw std::invalid_argument(
              "constant diagram needs free degree-0 homs");
      ChainMap act(chainz::tensor(h, m), m);
      const long r = h.in_support(0) ? h.gens(0) : 0;
      if (r > 0)
        for (int n = m.lo; n <= m.hi(); ++n) {
          const long g = m.gens(n);
          if (g == 0) continue;
          IntMatrix mm(g, r * g);
          for (long i = 0; i < r; ++i)
            for (long j = 0; j < g; ++j) mm.at(j, i * g + j) = 1;
          act.set(n, std::move(mm));
        }
      x.action[a][b] = std::move(act);
    }
  return x;
}

Diagram diagram_tensor(const Diagram& x, const ChainComplex& m) {
  Diagram y;
  y.shape = x.shape;
  y.value.resize(x.shape.size());
  y.action.assign(x.shape.size(), std::vector<ChainMap>(x.shape.size()));
  const auto idm = chainz::identity_map(m);
  for (long a = 0; a < x.shape.size(); ++a)
    y.value[a] = chainz::tensor(x.value[a], m);
  for (long a = 0; a < x.shape.size(); ++a)
    for (long b = 0; b < x.shape.size(); ++b)
      y.action[a][b] = chainz::compose(
          chainz::tensor_map(x.action[a][b], idm),
          associator_inv(x.shape.hom[a][b], x.value[a], m));
  return y;
}

Transformation diagram_tensor_map(const Diagram& x, const ChainMap& k) {
  Transformation t;
  t.source = diagram_tensor(x, k.source);
  t.target = diagram_tensor(x, k.target);
  for (const auto& v : x.value)
    t.components.push_back(chainz::tensor_map(chainz::identity_map(v), k));
  return t;
}

Diagram restrict(const DgFunctor& f, const Diagram& y) {
  Diagram x;
  x.shape = f.source;
  x.value.resize(f.source.size());
  x.action.assign(f.source.size(), std::vector<ChainMap>(f.source.size()));
  for (long a = 0; a < f.source.size(); ++a)
    x.value[a] = y.value[f.on_objects[a]];
  for (long a = 0; a < f.source.size(); ++a)
    for (long b = 0; b < f.source.size(); ++b)
      x.action[a][b] = chainz::compose(
          y.action[f.on_objects[a]][f.on_objects[b]],
          chainz::tensor_map(f.on_homs[a][b],
                             chainz::identity_map(x.value[a])));
  return x;
}

Coend coend(const DgCategory& base, const Diagram& f) {
  const long n = base.size();
  if (f.shape.size() != n * n)
    throw std::invalid_argument("coend: diagram is not over the product shape");
  auto idx = [n](long a, long b) { return a * n + b; };

  Coend out;
  std::vector<ChainComplex> diag_parts;
  for (long c = 0; c < n; ++c) diag_parts.push_back(f.value[idx(c, c)]);
  out.diagonal = chainz::direct_sum(diag_parts);

  std::vector<ChainComplex> pair_parts;
  std::vector<ChainMap> diffs;
  for (long c0 = 0; c0 < n; ++c0)
    for (long c1 = 0; c1 < n; ++c1) {
      const auto& h = base.hom[c0][c1];
      const auto& fv = f.value[idx(c1, c0)];
      pair_parts.push_back(chainz::tensor(h, fv));
      const auto idf = chainz::identity_map(fv);
      // act the morphism covariantly: (c1,c0) -> (c1,c1)
      const auto jl = chainz::compose(
          chainz::tensor_map(base.unit[c1], chainz::identity_map(h)),
          chainz::unitor_left_inv(h));
      const auto lambda = chainz::compose(f.action[idx(c1, c0)][idx(c1, c1)],
                                          chainz::tensor_map(jl, idf));
      // act it contravariantly: (c1,c0) -> (c0,c0)
      const auto jr = chainz::compose(
          chainz::tensor_map(chainz::identity_map(h), base.unit[c0]),
          chainz::unitor_right_inv(h));
      const auto rho = chainz::compose(f.action[idx(c1, c0)][idx(c0, c0)],
                                       chainz::tensor_map(jr, idf));
      diffs.push_back(
          chainz::sub_maps(chainz::compose(out.diagonal.inclusions[c1], lambda),
                           chainz::compose(out.diagonal.inclusions[c0], rho)));
    }
  const auto pair_sum = chainz::direct_sum(pair_parts);
  const auto rel = chainz::map_from_sum(pair_sum, diffs);
  auto coker = chainz::cokernel(rel);
  out.complex = std::move(coker.complex);
  out.projection = std::move(coker.projection);
  return out;
}

ChainMap coend_map(const Coend& src, const Coend& dst, const Transformation& t) {
  const long n = (long)src.diagonal.inclusions.size();
  std::vector<ChainMap> legs;
  for (long c = 0; c < n; ++c)
    legs.push_back(chainz::compose(dst.diagonal.inclusions[c],
                                   t.components[c * n + c]));
  const auto h = chainz::map_from_sum(src.diagonal, legs);
  return rebase(h, src.complex, dst.complex);
}

Diagram external_tensor(const Diagram& w, const Diagram& x) {
  check_weight_shape(w, x);
  const long n = x.shape.size();
  auto idx = [n](long a, long b) { return a * n + b; };
  Diagram f;
  f.shape = dgcat::product(w.shape, x.shape);
  f.value.resize(n * n);
  f.action.assign(n * n, std::vector<ChainMap>(n * n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      f.value[idx(a, b)] = chainz::tensor(w.value[a], x.value[b]);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long a2 = 0; a2 < n; ++a2)
        for (long b2 = 0; b2 < n; ++b2) {
          const std::vector<ChainComplex> leaves{
              w.shape.hom[a][a2], x.shape.hom[b][b2], w.value[a], x.value[b]};
          const auto swap = chainz::structural_iso(
              leaves,
              TensorTree::make_node(
                  TensorTree::make_node(TensorTree::make_leaf(0),
                                        TensorTree::make_leaf(1)),
                  TensorTree::make_node(TensorTree::make_leaf(2),
                                        TensorTree::make_leaf(3))),
              TensorTree::make_node(
                  TensorTree::make_node(TensorTree::make_leaf(0),
                                        TensorTree::make_leaf(2)),
                  TensorTree::make_node(TensorTree::make_leaf(1),
                                        TensorTree::make_leaf(3))));
          f.action[idx(a, b)][idx(a2, b2)] = chainz::compose(
              chainz::tensor_map(w.action[a][a2], x.action[b][b2]), swap);
        }
  return f;
}

Coend weighted_colimit(const Diagram& w, const Diagram& x) {
  return coend(x.shape, external_tensor(w, x));
}

ChainMap weighted_colimit_map(const Coend& src, const Coend& dst,
                              const Transformation& on_weights,
                              const Transformation& on_diagrams) {
  const long n = (long)src.diagonal.inclusions.size();
  std::vector<ChainMap> legs;
  for (long c = 0; c < n; ++c)
    legs.push_back(chainz::compose(
        dst.diagonal.inclusions[c],
        chainz::tensor_map(on_weights.components[c],
                           on_diagrams.components[c])));
  const auto h = chainz::map_from_sum(src.diagonal, legs);
  return rebase(h, src.complex, dst.complex);
}

LeftKan left_kan(const DgFunctor& f, const Diagram& x) {
  const auto& c = f.source;
  const auto& d = f.target;
  const auto opp = dgcat::opposite(c);
  LeftKan lk;
  lk.diagram.shape = d;
  lk.diagram.value.resize(d.size());
  lk.diagram.action.assign(d.size(), std::vector<ChainMap>(d.size()));

  for (long t = 0; t < d.size(); ++t) {
    Diagram w;
    w.shape = opp;
    w.value.resize(c.size());
    w.action.assign(c.size(), std::vector<ChainMap>(c.size()));
    for (long a = 0; a < c.size(); ++a)
      w.value[a] = d.hom[f.on_objects[a]][t];
    for (long a = 0; a < c.size(); ++a)
      for (long b = 0; b < c.size(); ++b)
        w.action[a][b] = chainz::compose(
            d.comp[f.on_objects[b]][f.on_objects[a]][t],
            chainz::compose(
                chainz::tensor_map(chainz::identity_map(w.value[a]),
                                   f.on_homs[b][a]),
                chainz::braiding(c.hom[b][a], w.value[a])));
    lk.coends.push_back(weighted_colimit(w, x));
    lk.diagram.value[t] = lk.coends.back().complex;
    lk.weights.push_back(std::move(w));
  }

  for (long t = 0; t < d.size(); ++t)
    for (long u = 0; u < d.size(); ++u) {
      const auto& h = d.hom[t][u];
      const auto dist = chainz::distribute_tensor(
          chainz::direct_sum({h}), lk.coends[t].diagonal);
      std::vector<ChainMap> legs;
      for (long a = 0; a < c.size(); ++a) {
        const long fa = f.on_objects[a];
        const auto move = chainz::compose(
            chainz::tensor_map(d.comp[fa][t][u],
                               chainz::identity_map(x.value[a])),
            associator_inv(h, d.hom[fa][t], x.value[a]));
        legs.push_back(chainz::compose(
            lk.coends[u].projection,
            chainz::compose(lk.coends[u].diagonal.inclusions[a], move)));
      }
      const auto g =
          chainz::compose(chainz::map_from_sum(dist.pairs, legs), dist.iso);
      lk.diagram.action[t][u] =
          rebase(g, chainz::tensor(h, lk.diagram.value[t]),
                 lk.diagram.value[u]);
    }
  return lk;
}

Transformation kan_unit(const DgFunctor& f, const Diagram& x,
                        const LeftKan& lk) {
  Transformation t;
  t.source = x;
  t.target = restrict(f, lk.diagram);
  for (long a = 0; a < f.source.size(); ++a) {
    const long fa = f.on_objects[a];
    const auto into = chainz::compose(
        chainz::tensor_map(f.target.unit[fa], chainz::identity_map(x.value[a])),
        chainz::unitor_left_inv(x.value[a]));
    t.components.push_back(chainz::compose(
        lk.coends[fa].projection,
        chainz::compose(lk.coends[fa].diagonal.inclusions[a], into)));
  }
  return t;
}

Transformation kan_counit(const DgFunctor& f, const Diagram& y) {
  const auto res = restrict(f, y);
  const auto lk = left_kan(f, res);
  Transformation t;
  t.source = lk.diagram;
  t.target = y;
  for (long d = 0; d < f.target.size(); ++d) {
    std::vector<ChainMap> legs;
    for (long a = 0; a < f.source.size(); ++a)
      legs.push_back(y.action[f.on_objects[a]][d]);
    const auto h = chainz::map_from_sum(lk.coends[d].diagonal, legs);
    t.components.push_back(rebase(h, lk.diagram.value[d], y.value[d]));
  }
  return t;
}

DgFunctor opposite_functor(const DgFunctor& f) {
  DgFunctor o;
  o.source = dgcat::opposite(f.source);
  o.target = dgcat::opposite(f.target);
  o.on_objects = f.on_objects;
  o.on_homs.assign(f.source.size(), std::vector<ChainMap>(f.source.size()));
  for (long a = 0; a < f.source.size(); ++a)
    for (long b = 0; b < f.source.size(); ++b)
      o.on_homs[a][b] = f.on_homs[b][a];
  return o;
}

DgFunctor product_functor(const DgFunctor& f, const DgFunctor& g) {
  DgFunctor p;
  p.source = dgcat::product(f.source, g.source);
  p.target = dgcat::product(f.target, g.target);
  const long nb = g.source.size(), mb = g.target.size();
  const long n = f.source.size() * nb;
  p.on_objects.resize(n);
  p.on_homs.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < f.source.size(); ++a)
    for (long b = 0; b < nb; ++b)
      p.on_objects[a * nb + b] = f.on_objects[a] * mb + g.on_objects[b];
  for (long a = 0; a < f.source.size(); ++a)
    for (long b = 0; b < nb; ++b)
      for (long a2 = 0; a2 < f.source.size(); ++a2)
        for (long b2 = 0; b2 < nb; ++b2)
          p.on_homs[a * nb + b][a2 * nb + b2] =
              chainz::tensor_map(f.on_homs[a][a2], g.on_homs[b][b2]);
  return p;
}

CoendExchange coend_exchange(const DgFunctor& alpha, const Diagram& f) {
  const auto& c = alpha.source;
  const auto& d = alpha.target;
  const long nc = c.size(), nd = d.size();

  const auto restrictor = product_functor(
      dgcat::identity_functor(dgcat::opposite(c)), alpha);
  const auto fl = restrict(restrictor, f);
  const auto lhs = coend(c, fl);

  const auto extender =
      product_functor(opposite_functor(alpha), dgcat::identity_functor(d));
  const auto lk = left_kan(extender, f);
  const auto rhs = coend(d, lk.diagram);

  CoendExchange out;
  out.restricted = lhs.complex;
  out.extended = rhs.complex;

  std::vector<ChainMap> legs;
  const auto& pd = lk.diagram.shape;  // product of opposite(d) and d
  for (long x = 0; x < nc; ++x) {
    const long ax = alpha.on_objects[x];
    const long e = ax * nd + ax;          // diagonal object (αx, αx)
    const long blk = x * nd + ax;         // source block (x, αx)
    const auto& fv = f.value[blk];
    const auto into = chainz::compose(
        chainz::tensor_map(pd.unit[e], chainz::identity_map(fv)),
        chainz::unitor_left_inv(fv));
    auto leg = chainz::compose(
        lk.coends[e].projection,
        chainz::compose(lk.coends[e].diagonal.inclusions[blk], into));
    leg = chainz::compose(
        rhs.projection, chainz::compose(rhs.diagonal.inclusions[ax], leg));
    legs.push_back(std::move(leg));
  }
  const auto h = chainz::map_from_sum(lhs.diagonal, legs);
  out.comparison = rebase(h, lhs.complex, rhs.complex);
  return out;
}

AttachResult attach_cell(const Diagram& x, long obj, const ChainMap& k,
                         const Transformation& attach) {
  if (!chainz::is_cofibration(k))
    throw std::invalid_argument("attach_cell: k is not a cofibration");
  const auto rep = representable(x.shape, obj);
  const auto cellk = diagram_tensor_map(rep, k);
  const long n = x.shape.size();

  std::vector<chainz::Pushout> po;
  for (long v = 0; v < n; ++v)
    po.push_back(chainz::pushout(cellk.components[v], attach.components[v]));

  AttachResult out;
  out.diagram.shape = x.shape;
  out.diagram.value.resize(n);
  out.diagram.action.assign(n, std::vector<ChainMap>(n));
  for (long v = 0; v < n; ++v) out.diagram.value[v] = po[v].complex;

  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const auto& h = x.shape.hom[a][b];
      const auto sum_a =
          chainz::direct_sum({cellk.target.value[a], x.value[a]});
      const auto dist =
          chainz::distribute_tensor(chainz::direct_sum({h}), sum_a);
      const std::vector<ChainMap> legs{
          chainz::compose(po[b].from_right, cellk.target.action[a][b]),
          chainz::compose(po[b].from_bottom, x.action[a][b])};
      const auto g =
          chainz::compose(chainz::map_from_sum(dist.pairs, legs), dist.iso);
      out.diagram.action[a][b] =
          rebase(g, chainz::tensor(h, po[a].complex), po[b].complex);
    }

  out.inclusion.source = x;
  out.inclusion.target = out.diagram;
  out.cell.source = cellk.target;
  out.cell.target = out.diagram;
  for (long v = 0; v < n; ++v) {
    out.inclusion.components.push_back(po[v].from_bottom);
    out.cell.components.push_back(po[v].from_right);
  }
  return out;
}

Replay replay(const CellPresentation& cp) {
  Replay r{cp.base, identity_transformation(cp.base)};
  for (const auto& att : cp.attachments) {
    auto ar = attach_cell(r.diagram, att.obj, att.k, att.attach);
    r.inclusion = compose(ar.inclusion, r.inclusion);
    r.diagram = std::move(ar.diagram);
  }
  return r;
}

bool is_pointwise_we(const Transformation& f) {
  for (const auto& c : f.components)
    if (!chainz::is_weak_equivalence(c)) return false;
  return true;
}

bool is_pointwise_cofibration(const Transformation& f) {
  for (const auto& c : f.components)
    if (!chainz::is_cofibration(c)) return false;
  return true;
}

void Cube::validate() const {
  const long total = 1L << size;
  if ((long)value.size() != total || (long)edge.size() != total)
    throw std::invalid_argument("cube: table sizes");
  for (long mask = 0; mask < total; ++mask)
    for (int i = 0; i < size; ++i) {
      if (mask & (1L << i)) continue;
      const auto& e = edge[mask][i];
      if (!e.source.same_presentation(value[mask]) ||
          !e.target.same_presentation(value[mask | (1L << i)]))
        throw std::invalid_argument("cube: edge endpoints");
      e.validate();
      for (int j = i + 1; j < size; ++j) {
        if (mask & (1L << j)) continue;
        const auto one =
            chainz::compose(edge[mask | (1L << i)][j], edge[mask][i]);
        const auto two =
            chainz::compose(edge[mask | (1L << j)][i], edge[mask][j]);
        if (!chainz::equal_maps(one, two))
          throw std::invalid_argument("cube: faces do not commute");
      }
    }
}

ChainMap Cube::map(long from, long to) const {
  if ((from & to) != from)
    throw std::invalid_argument("cube: not a subset inclusion");
  auto m = chainz::identity_map(value[from]);
  long cur = from;
  for (int i = 0; i < size; ++i)
    if ((to & (1L << i)) && !(cur & (1L << i))) {
      m = chainz::compose(edge[cur][i], m);
      cur |= 1L << i;
    }
  return m;
}

Pcm pcm(const Cube& x) {
  const long full = (1L << x.size) - 1;
  Pcm out;
  std::vector<ChainComplex> parts;
  for (long mask = 0; mask < full; ++mask) parts.push_back(x.value[mask]);
  out.proper = chainz::direct_sum(parts);

  std::vector<ChainComplex> edge_parts;
  std::vector<ChainMap> diffs;
  for (long mask = 0; mask < full; ++mask)
    for (int i = 0; i < x.size; ++i) {
      if (mask & (1L << i)) continue;
      const long next = mask | (1L << i);
      if (next == full) continue;
      edge_parts.push_back(x.value[mask]);
      diffs.push_back(chainz::sub_maps(
          chainz::compose(out.proper.inclusions[next], x.edge[mask][i]),
          out.proper.inclusions[mask]));
    }
  if (edge_parts.empty()) {
    out.colim = out.proper.complex;
    out.projection = chainz::identity_map(out.colim);
  } else {
    const auto s = chainz::direct_sum(edge_parts);
    auto coker = chainz::cokernel(chainz::map_from_sum(s, diffs));
    out.colim = std::move(coker.complex);
    out.projection = std::move(coker.projection);
  }

  std::vector<ChainMap> legs;
  for (long mask = 0; mask < full; ++mask) legs.push_back(x.map(mask, full));
  if (parts.empty()) {
    out.corner = chainz::zero_map(out.colim, x.value[full]);
  } else {
    const auto h = chainz::map_from_sum(out.proper, legs);
    out.corner = rebase(h, out.colim, x.value[full]);
  }
  return out;
}

Cube cube_tensor(const Cube& x, const Cube& y) {
  Cube z;
  z.size = x.size + y.size;
  const long total = 1L << z.size;
  const long lowmask = (1L << x.size) - 1;
  z.value.resize(total);
  z.edge.assign(total, std::vector<ChainMap>(z.size));
  for (long mask = 0; mask < total; ++mask) {
    const long mx = mask & lowmask, my = mask >> x.size;
    z.value[mask] = chainz::tensor(x.value[mx], y.value[my]);
    for (int i = 0; i < z.size; ++i) {
      if (mask & (1L << i)) continue;
      if (i < x.size)
        z.edge[mask][i] = chainz::tensor_map(
            x.edge[mx][i], chainz::identity_map(y.value[my]));
      else
        z.edge[mask][i] = chainz::tensor_map(
            chainz::identity_map(x.value[mx]), y.edge[my][i - x.size]);
    }
  }
  return z;
}

bool pcm_composition_check(const Cube& x, const Cube& y) {
  const auto pxy = pcm(cube_tensor(x, y));
  const auto px = pcm(x);
  const auto py = pcm(y);
  const long fullx = (1L << x.size) - 1, fully = (1L << y.size) - 1;
  const auto& bx = x.value[fullx];
  const auto& by = y.value[fully];

  const auto po = chainz::pushout(
      chainz::tensor_map(px.corner, chainz::identity_map(py.colim)),
      chainz::tensor_map(chainz::identity_map(px.colim), py.corner));
  const auto corner2 = chainz::pushout_induced(
      po, chainz::tensor_map(chainz::identity_map(bx), py.corner),
      chainz::tensor_map(px.corner, chainz::identity_map(by)));

  auto incl_x = [&](long t) {
    return chainz::compose(px.projection, px.proper.inclusions[t]);
  };
  auto incl_y = [&](long t) {
    return chainz::compose(py.projection, py.proper.inclusions[t]);
  };

  std::vector<ChainMap> legs;
  const long full = (1L << (x.size + y.size)) - 1;
  for (long mask = 0; mask < full; ++mask) {
    const long tx = mask & fullx, ty = mask >> x.size;
    ChainMap leg;
    if (ty == fully)
      leg = chainz::compose(
          po.from_bottom,
          chainz::tensor_map(incl_x(tx), chainz::identity_map(by)));
    else if (tx == fullx)
      leg = chainz::compose(
          po.from_right,
          chainz::tensor_map(chainz::identity_map(bx), incl_y(ty)));
    else
      leg = chainz::compose(
          po.from_bottom,
          chainz::tensor_map(incl_x(tx), chainz::compose(py.corner, incl_y(ty))));
    legs.push_back(std::move(leg));
  }
  const auto h = chainz::map_from_sum(pxy.proper, legs);
  const auto u = rebase(h, pxy.colim, po.complex);
  return chainz::is_isomorphism(u) &&
         chainz::equal_maps(pxy.corner, chainz::compose(corner2, u));
}

LeftClosedReport coend_left_closed_check(const Transformation& v,
                                         const Transformation& i) {
  LeftClosedReport rep;
  if (!is_pointwise_cofibration(v)) {
    rep.detail = "weight map is not a pointwise cofibration";
    return rep;
  }
  if (!is_pointwise_cofibration(i)) {
    rep.detail = "diagram map is not a pointwise cofibration";
    return rep;
  }
  const auto vx = weighted_colimit(v.source, i.source);
  const auto vy = weighted_colimit(v.source, i.target);
  const auto wx = weighted_colimit(v.target, i.source);
  const auto wy = weighted_colimit(v.target, i.target);

  const auto idv = identity_transformation(v.source);
  const auto idw = identity_transformation(v.target);
  const auto idx = identity_transformation(i.source);
  const auto idy = identity_transformation(i.target);

  const auto top = weighted_colimit_map(vx, vy, idv, i);
  const auto left = weighted_colimit_map(vx, wx, v, idx);
  const auto right = weighted_colimit_map(vy, wy, v, idy);
  const auto bottom = weighted_colimit_map(wx, wy, idw, i);

  const auto po = chainz::pushout(top, left);
  const auto corner = chainz::pushout_induced(po, right, bottom);

  rep.left_vertical = chainz::is_cofibration(left);
  rep.right_vertical = chainz::is_cofibration(right);
  rep.corner = chainz::is_cofibration(corner);
  rep.ok = rep.left_vertical && rep.right_vertical && rep.corner;
  std::string det;
  det += "coker(left): " + chainz::cokernel_invariants_string(left) + "; ";
  det += "coker(right): " + chainz::cokernel_invariants_string(right) + "; ";
  det += "coker(corner): " + chainz::cokernel_invariants_string(corner);
  rep.detail = det;
  return rep;
}

}  // namespace hocolim::diagram
