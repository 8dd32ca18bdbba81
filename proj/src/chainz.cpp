#include "hocolim/chainz.hpp"

#include "hocolim/linsys.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace hocolim::chainz {

namespace {

const FpAbGroup kTrivialGroup{};

int support_lo(const ChainMap& f) {
  return std::min(f.source.lo, f.target.lo);
}
int support_hi(const ChainMap& f) {
  return std::max(f.source.hi(), f.target.hi());
}

Int smallest_prime_factor(const Int& n) {
  Int t = abs(n);
  for (Int p = 2; p * p <= t; ++p)
    if (t % p == 0) return p;
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// FpAbGroup

FpAbGroup::FpAbGroup(long g, IntMatrix r) : gens(g), rels(std::move(r)) {
  if (rels.rows() != gens)
    throw std::invalid_argument("relation matrix must have one row per generator");
}

FpAbGroup FpAbGroup::free_group(long n) { return FpAbGroup(n, IntMatrix(n, 0)); }

FpAbGroup FpAbGroup::cyclic(const Int& n) {
  IntMatrix r(1, 1);
  r.at(0, 0) = n;
  return FpAbGroup(1, std::move(r));
}

GroupInvariants FpAbGroup::invariants() const {
  auto snf = zmat::smith_normal_form(rels);
  GroupInvariants inv;
  long nonzero = 0;
  for (const auto& d : snf.d)
    if (d != 0) {
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d);
    }
  inv.rank = gens - nonzero;
  return inv;
}

bool FpAbGroup::contains(const IntMatrix& m) const {
  if (m.rows() != gens)
    throw std::invalid_argument("column dimension mismatch in FpAbGroup::contains");
  if (gens == 0 || m.is_zero()) return true;
  if (rels.cols() == 0) return false;
  return zmat::in_lattice(rels, m);
}

std::string GroupInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// ChainComplex

bool ChainComplex::is_zero_complex() const {
  for (const auto& g : groups)
    if (g.gens > 0) return false;
  return true;
}

const FpAbGroup& ChainComplex::group(int n) const {
  if (!in_support(n)) return kTrivialGroup;
  return groups[n - lo];
}

IntMatrix ChainComplex::diff(int n) const {
  if (n > lo && n <= hi()) return diffs[n - lo - 1];
  return IntMatrix(gens(n - 1), gens(n));
}

void ChainComplex::validate() const {
  if (groups.size() > 1 && diffs.size() + 1 != groups.size())
    throw std::invalid_argument("differential count does not match support");
  for (int n = lo; n <= hi(); ++n) {
    const auto& g = group(n);
    if (g.rels.rows() != g.gens)
      throw std::invalid_argument("bad relation matrix in degree " + std::to_string(n));
    if (n > lo) {
      const auto d = diff(n);
      if (d.rows() != gens(n - 1) || d.cols() != gens(n))
        throw std::invalid_argument("differential shape mismatch in degree " +
                                    std::to_string(n));
      if (g.rels.cols() > 0 && !group(n - 1).contains(d * g.rels))
        throw std::invalid_argument("differential not well-defined in degree " +
                                    std::to_string(n));
    }
    if (n > lo + 1 && !group(n - 2).contains(diff(n - 1) * diff(n)))
      throw std::invalid_argument("d∘d nonzero in degree " + std::to_string(n));
  }
}

void ChainComplex::trim() {
  while (!groups.empty() && groups.back().gens == 0) {
    groups.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  while (!groups.empty() && groups.front().gens == 0) {
    groups.erase(groups.begin());
    if (!diffs.empty()) diffs.erase(diffs.begin());
    ++lo;
  }
  if (groups.empty()) {
    lo = 0;
    diffs.clear();
  }
}

bool ChainComplex::same_presentation(const ChainComplex& o) const {
  ChainComplex a = *this, b = o;
  a.trim();
  b.trim();
  if (a.lo != b.lo || a.groups.size() != b.groups.size()) return false;
  for (size_t i = 0; i < a.groups.size(); ++i)
    if (a.groups[i].gens != b.groups[i].gens || a.groups[i].rels != b.groups[i].rels)
      return false;
  for (size_t i = 0; i < a.diffs.size(); ++i)
    if (a.diffs[i] != b.diffs[i]) return false;
  return true;
}

ChainComplex ChainComplex::zero() { return ChainComplex{}; }

ChainComplex ChainComplex::unit() { return single(FpAbGroup::free_group(1), 0); }

ChainComplex ChainComplex::single(FpAbGroup g, int degree) {
  ChainComplex c;
  c.lo = degree;
  c.groups.push_back(std::move(g));
  c.trim();
  return c;
}

ChainComplex ChainComplex::free_complex(int lo, std::vector<long> ranks,
                                        std::vector<IntMatrix> diffs) {
  ChainComplex c;
  c.lo = lo;
  for (long r : ranks) c.groups.push_back(FpAbGroup::free_group(r));
  c.diffs = std::move(diffs);
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// ChainMap

IntMatrix ChainMap::comp(int n) const {
  auto it = comps.find(n);
  if (it != comps.end()) return it->second;
  return IntMatrix(target.gens(n), source.gens(n));
}

void ChainMap::set(int n, IntMatrix m) {
  if (m.rows() != target.gens(n) || m.cols() != source.gens(n))
    throw std::invalid_argument("chain map component shape mismatch in degree " +
                                std::to_string(n));
  if (m.is_zero())
    comps.erase(n);
  else
    comps[n] = std::move(m);
}

void ChainMap::validate() const {
  for (int n = support_lo(*this); n <= support_hi(*this); ++n) {
    const auto f = comp(n);
    if (f.rows() != target.gens(n) || f.cols() != source.gens(n))
      throw std::invalid_argument("chain map component shape mismatch in degree " +
                                  std::to_string(n));
    const auto& rs = source.group(n).rels;
    if (rs.cols() > 0 && !target.group(n).contains(f * rs))
      throw std::invalid_argument("chain map not well-defined in degree " +
                                  std::to_string(n));
    const auto lhs = target.diff(n) * f - comp(n - 1) * source.diff(n);
    if (!target.group(n - 1).contains(lhs))
      throw std::invalid_argument("chain map does not commute with d in degree " +
                                  std::to_string(n));
  }
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap f(c, c);
  for (int n = c.lo; n <= c.hi(); ++n) f.set(n, IntMatrix::identity(c.gens(n)));
  return f;
}

ChainMap zero_map(ChainComplex src, ChainComplex tgt) {
  return ChainMap(std::move(src), std::move(tgt));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!f.target.same_presentation(g.source))
    throw std::invalid_argument("compose: inner objects differ");
  ChainMap h(f.source, g.target);
  for (int n = support_lo(h); n <= support_hi(h); ++n) {
    if (h.source.gens(n) == 0 || h.target.gens(n) == 0) continue;
    h.set(n, g.comp(n) * f.comp(n));
  }
  return h;
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g) {
  ChainMap h(f.source, f.target);
  for (int n = support_lo(h); n <= support_hi(h); ++n)
    h.set(n, f.comp(n) + g.comp(n));
  return h;
}

ChainMap sub_maps(const ChainMap& f, const ChainMap& g) {
  return add_maps(f, scale_map(g, -1));
}

ChainMap scale_map(const ChainMap& f, const Int& k) {
  ChainMap h(f.source, f.target);
  for (const auto& [n, m] : f.comps) h.set(n, k * m);
  return h;
}

bool equal_maps(const ChainMap& f, const ChainMap& g) {
  if (!f.source.same_presentation(g.source) ||
      !f.target.same_presentation(g.target))
    return false;
  for (int n = support_lo(f); n <= support_hi(f); ++n)
    if (!f.target.group(n).contains(f.comp(n) - g.comp(n))) return false;
  return true;
}

bool is_zero_map(const ChainMap& f) {
  for (int n = support_lo(f); n <= support_hi(f); ++n)
    if (!f.target.group(n).contains(f.comp(n))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Homology

bool Homology::trivial_up_to(int maxdeg) const {
  for (const auto& [n, inv] : h)
    if (n <= maxdeg && !inv.is_trivial()) return false;
  return true;
}

std::string Homology::to_string() const {
  if (h.empty()) return "trivial";
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, inv] : h) {
    if (!first) out << ", ";
    out << "H_" << n << " = " << inv.to_string();
    first = false;
  }
  return out.str();
}

namespace {

/// Lattice basis, inside Z^{gens(n)}, of the cycles of c in degree n
/// (elements whose differential lies in the relation lattice below).
IntMatrix cycle_basis(const ChainComplex& c, int n) {
  const long g = c.gens(n);
  const auto ker =
      zmat::kernel_and_image(zmat::hstack(c.diff(n), c.group(n - 1).rels)).kernel;
  IntMatrix proj(g, ker.cols());
  for (long j = 0; j < ker.cols(); ++j)
    for (long i = 0; i < g; ++i) proj.at(i, j) = ker.at(i, j);
  return zmat::kernel_and_image(proj).image;
}

}  // namespace

Homology homology(const ChainComplex& c) {
  Homology h;
  for (int n = c.lo; n <= c.hi(); ++n) {
    const auto z = cycle_basis(c, n);
    const auto bdry = zmat::hstack(c.diff(n + 1), c.group(n).rels);
    auto expr = zmat::solve_integer(z, bdry);
    if (!expr)
      throw std::logic_error("boundaries escape the cycle lattice; complex malformed");
    const auto inv = FpAbGroup(z.cols(), *expr).invariants();
    if (!inv.is_trivial()) h.h.emplace(n, inv);
  }
  return h;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  if (a.is_zero_complex()) {
    auto c = b;
    c.trim();
    return c;
  }
  ChainComplex cone;
  cone.lo = std::min(a.lo + 1, b.lo);
  const int hi = std::max(a.hi() + 1, b.hi());
  for (int n = cone.lo; n <= hi; ++n) {
    const auto& ga = a.group(n - 1);
    const auto& gb = b.group(n);
    cone.groups.push_back(
        FpAbGroup(ga.gens + gb.gens, zmat::block_diag(ga.rels, gb.rels)));
  }
  for (int n = cone.lo + 1; n <= hi; ++n) {
    const long ca = a.gens(n - 1), cb = b.gens(n);
    const long ra = a.gens(n - 2), rb = b.gens(n - 1);
    IntMatrix d(ra + rb, ca + cb);
    const auto da = a.diff(n - 1), db = b.diff(n), fc = f.comp(n - 1);
    for (long i = 0; i < ra; ++i)
      for (long j = 0; j < ca; ++j) d.at(i, j) = -da.at(i, j);
    for (long i = 0; i < rb; ++i) {
      for (long j = 0; j < ca; ++j) d.at(ra + i, j) = fc.at(i, j);
      for (long j = 0; j < cb; ++j) d.at(ra + i, ca + j) = db.at(i, j);
    }
    cone.diffs.push_back(std::move(d));
  }
  cone.trim();
  return cone;
}

bool is_acyclic(const ChainComplex& c) { return homology(c).is_trivial(); }

bool is_weak_equivalence(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

bool is_weak_equivalence_up_to(const ChainMap& f, int maxdeg) {
  return homology(mapping_cone(f)).trivial_up_to(maxdeg);
}

bool is_injective(const ChainMap& f) {
  for (int n = support_lo(f); n <= support_hi(f); ++n) {
    const long g = f.source.gens(n);
    if (g == 0) continue;
    const auto ker = zmat::kernel_and_image(
                         zmat::hstack(f.comp(n), f.target.group(n).rels))
                         .kernel;
    IntMatrix proj(g, ker.cols());
    for (long j = 0; j < ker.cols(); ++j)
      for (long i = 0; i < g; ++i) proj.at(i, j) = ker.at(i, j);
    if (!f.source.group(n).contains(proj)) return false;
  }
  return true;
}

bool is_surjective(const ChainMap& f) {
  for (int n = support_lo(f); n <= support_hi(f); ++n) {
    FpAbGroup coker(f.target.gens(n),
                    zmat::hstack(f.comp(n), f.target.group(n).rels));
    if (!coker.invariants().is_trivial()) return false;
  }
  return true;
}

bool is_isomorphism(const ChainMap& f) {
  return is_injective(f) && is_surjective(f);
}

bool is_cofibration(const ChainMap& f) {
  if (!is_injective(f)) return false;
  for (int n = support_lo(f); n <= support_hi(f); ++n) {
    FpAbGroup coker(f.target.gens(n),
                    zmat::hstack(f.comp(n), f.target.group(n).rels));
    if (!coker.invariants().is_free()) return false;
  }
  return true;
}

bool is_cofibrant(const ChainComplex& c) {
  for (const auto& g : c.groups)
    if (!g.invariants().is_free()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Colimits

Cokernel cokernel(const ChainMap& f) {
  const auto& t = f.target;
  ChainComplex q;
  q.lo = t.lo;
  for (int n = t.lo; n <= t.hi(); ++n)
    q.groups.push_back(
        FpAbGroup(t.gens(n), zmat::hstack(t.group(n).rels, f.comp(n))));
  q.diffs = t.diffs;
  ChainMap proj(t, q);
  for (int n = t.lo; n <= t.hi(); ++n) proj.set(n, IntMatrix::identity(t.gens(n)));
  return Cokernel{std::move(q), std::move(proj)};
}

std::string cokernel_invariants_string(const ChainMap& f) {
  const auto q = cokernel(f).complex;
  std::string out;
  for (int n = q.lo; n <= q.hi(); ++n) {
    const auto inv = q.group(n).invariants();
    if (inv.is_trivial()) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(n) + ": " + inv.to_string();
  }
  return out.empty() ? "trivial" : out;
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  if (!f.source.same_presentation(g.source))
    throw std::invalid_argument("pushout legs must share a source");
  const auto& b = f.target;
  const auto& c = g.target;
  ChainComplex p;
  p.lo = std::min(b.lo, c.lo);
  const int hi = std::max(b.hi(), c.hi());
  for (int n = p.lo; n <= hi; ++n) {
    const long gb = b.gens(n), gc = c.gens(n), ga = f.source.gens(n);
    IntMatrix glue(gb + gc, ga);
    const auto fn = f.comp(n), gn = g.comp(n);
    for (long j = 0; j < ga; ++j) {
      for (long i = 0; i < gb; ++i) glue.at(i, j) = fn.at(i, j);
      for (long i = 0; i < gc; ++i) glue.at(gb + i, j) = -gn.at(i, j);
    }
    p.groups.push_back(FpAbGroup(
        gb + gc,
        zmat::hstack(zmat::block_diag(b.group(n).rels, c.group(n).rels), glue)));
  }
  for (int n = p.lo + 1; n <= hi; ++n)
    p.diffs.push_back(zmat::block_diag(b.diff(n), c.diff(n)));

  ChainMap ib(b, p), ic(c, p);
  for (int n = p.lo; n <= hi; ++n) {
    const long gb = b.gens(n), gc = c.gens(n);
    IntMatrix mb(gb + gc, gb), mc(gb + gc, gc);
    for (long i = 0; i < gb; ++i) mb.at(i, i) = 1;
    for (long i = 0; i < gc; ++i) mc.at(gb + i, i) = 1;
    ib.set(n, std::move(mb));
    ic.set(n, std::move(mc));
  }
  return Pushout{std::move(p), std::move(ib), std::move(ic)};
}

ChainMap pushout_induced(const Pushout& po, const ChainMap& from_b,
                         const ChainMap& from_c) {
  if (!from_b.target.same_presentation(from_c.target))
    throw std::invalid_argument("pushout_induced: cocone legs must share a target");
  ChainMap h(po.complex, from_b.target);
  for (int n = support_lo(h); n <= support_hi(h); ++n) {
    if (po.complex.gens(n) == 0) continue;
    h.set(n, zmat::hstack(from_b.comp(n), from_c.comp(n)));
  }
  return h;
}

Sum direct_sum(const std::vector<ChainComplex>& parts) {
  ChainComplex s;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts)
    if (!p.groups.empty()) {
      lo = any ? std::min(lo, p.lo) : p.lo;
      hi = any ? std::max(hi, p.hi()) : p.hi();
      any = true;
    }
  if (any) {
    s.lo = lo;
    for (int n = lo; n <= hi; ++n) {
      long g = 0;
      IntMatrix rels(0, 0);
      for (const auto& p : parts) {
        g += p.gens(n);
        rels = zmat::block_diag(rels, p.group(n).rels);
      }
      s.groups.push_back(FpAbGroup(g, std::move(rels)));
    }
    for (int n = lo + 1; n <= hi; ++n) {
      IntMatrix d(0, 0);
      for (const auto& p : parts) d = zmat::block_diag(d, p.diff(n));
      s.diffs.push_back(std::move(d));
    }
  }
  Sum out;
  out.complex = s;
  std::vector<long> offset(any ? hi - lo + 1 : 0, 0);
  for (const auto& p : parts) {
    ChainMap inc(p, s);
    for (int n = std::max(lo, p.lo); n <= std::min(hi, p.hi()); ++n) {
      IntMatrix m(s.gens(n), p.gens(n));
      for (long i = 0; i < p.gens(n); ++i) m.at(offset[n - lo] + i, i) = 1;
      inc.set(n, std::move(m));
    }
    for (int n = std::max(lo, p.lo); n <= std::min(hi, p.hi()); ++n)
      offset[n - lo] += p.gens(n);
    out.inclusions.push_back(std::move(inc));
  }
  return out;
}

ChainMap map_from_sum(const Sum& s, const std::vector<ChainMap>& fs) {
  if (fs.size() != s.inclusions.size())
    throw std::invalid_argument("map_from_sum: wrong number of components");
  if (fs.empty()) throw std::invalid_argument("map_from_sum: empty sum needs a target");
  ChainMap h(s.complex, fs[0].target);
  for (int n = support_lo(h); n <= support_hi(h); ++n) {
    IntMatrix m(h.target.gens(n), 0);
    for (const auto& f : fs) m = zmat::hstack(m, f.comp(n));
    h.set(n, std::move(m));
  }
  return h;
}

ChainMap map_into_sum(const Sum& s, const std::vector<ChainMap>& fs) {
  if (fs.size() != s.inclusions.size())
    throw std::invalid_argument("map_into_sum: wrong number of components");
  if (fs.empty()) throw std::invalid_argument("map_into_sum: empty sum needs a source");
  ChainMap h(fs[0].source, s.complex);
  for (int n = support_lo(h); n <= support_hi(h); ++n) {
    IntMatrix m(0, h.source.gens(n));
    for (const auto& f : fs) m = zmat::vstack(m, f.comp(n));
    h.set(n, std::move(m));
  }
  return h;
}

TensorDistribution distribute_tensor(const Sum& a, const Sum& b) {
  std::vector<ChainComplex> parts;
  std::vector<ChainMap> incls;
  for (size_t i = 0; i < a.inclusions.size(); ++i)
    for (size_t j = 0; j < b.inclusions.size(); ++j) {
      parts.push_back(tensor(a.inclusions[i].source, b.inclusions[j].source));
      incls.push_back(tensor_map(a.inclusions[i], b.inclusions[j]));
    }
  TensorDistribution out;
  out.pairs = direct_sum(parts);
  const auto t = tensor(a.complex, b.complex);
  if (parts.empty()) {
    out.from = zero_map(out.pairs.complex, t);
    out.iso = zero_map(t, out.pairs.complex);
    return out;
  }
  out.from = map_from_sum(out.pairs, incls);
  out.iso = ChainMap(t, out.pairs.complex);
  for (int n = t.lo; n <= t.hi(); ++n) {
    const auto m = out.from.comp(n);
    if (m.rows() != m.cols())
      throw std::logic_error("distribute_tensor: summands do not exhaust the tensor");
    // m is a permutation of generators, so its transpose is its inverse
    out.iso.set(n, m.transpose());
  }
  return out;
}

ChainComplex shift(const ChainComplex& c, int k) {
  ChainComplex s = c;
  s.lo += k;
  if (k % 2 != 0)
    for (auto& d : s.diffs) d = Int(-1) * d;
  return s;
}

// ---------------------------------------------------------------------------
// Tensor structure

namespace {

struct TensorBlock {
  int p, q;        // degrees of the two factors, p + q = n
  long ga, gb;     // generator counts
  long offset;     // generator offset inside the tensor in degree n
};

std::vector<TensorBlock> tensor_blocks(const ChainComplex& a,
                                       const ChainComplex& b, int n) {
  std::vector<TensorBlock> out;
  long off = 0;
  for (int p = a.lo; p <= a.hi(); ++p) {
    const int q = n - p;
    if (!b.in_support(q)) continue;
    out.push_back({p, q, a.gens(p), b.gens(q), off});
    off += a.gens(p) * b.gens(q);
  }
  return out;
}

long tensor_gens(const ChainComplex& a, const ChainComplex& b, int n) {
  long g = 0;
  for (const auto& blk : tensor_blocks(a, b, n)) g += blk.ga * blk.gb;
  return g;
}

}  // namespace

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_zero_complex() || b.is_zero_complex()) return ChainComplex::zero();
  ChainComplex t;
  t.lo = a.lo + b.lo;
  const int hi = a.hi() + b.hi();
  for (int n = t.lo; n <= hi; ++n) {
    long g = 0;
    IntMatrix rels(0, 0);
    for (const auto& blk : tensor_blocks(a, b, n)) {
      g += blk.ga * blk.gb;
      const auto& ra = a.group(blk.p).rels;
      const auto& rb = b.group(blk.q).rels;
      rels = zmat::block_diag(
          rels, zmat::hstack(zmat::kronecker(ra, IntMatrix::identity(blk.gb)),
                             zmat::kronecker(IntMatrix::identity(blk.ga), rb)));
    }
    t.groups.push_back(FpAbGroup(g, std::move(rels)));
  }
  for (int n = t.lo + 1; n <= hi; ++n) {
    const auto src = tensor_blocks(a, b, n);
    const auto dst = tensor_blocks(a, b, n - 1);
    auto dst_offset = [&](int p, int q) -> long {
      for (const auto& blk : dst)
        if (blk.p == p && blk.q == q) return blk.offset;
      return -1;
    };
    IntMatrix d(tensor_gens(a, b, n - 1), tensor_gens(a, b, n));
    for (const auto& blk : src) {
      // d_A ⊗ id into block (p-1, q)
      long off = dst_offset(blk.p - 1, blk.q);
      if (off >= 0) {
        const auto m = zmat::kronecker(a.diff(blk.p), IntMatrix::identity(blk.gb));
        for (long i = 0; i < m.rows(); ++i)
          for (long j = 0; j < m.cols(); ++j)
            d.at(off + i, blk.offset + j) = m.at(i, j);
      }
      // (-1)^p id ⊗ d_B into block (p, q-1)
      off = dst_offset(blk.p, blk.q - 1);
      if (off >= 0) {
        const Int sign = (blk.p % 2 == 0) ? 1 : -1;
        const auto m = zmat::kronecker(IntMatrix::identity(blk.ga), b.diff(blk.q));
        for (long i = 0; i < m.rows(); ++i)
          for (long j = 0; j < m.cols(); ++j)
            d.at(off + i, blk.offset + j) = sign * m.at(i, j);
      }
    }
    t.diffs.push_back(std::move(d));
  }
  t.trim();
  return t;
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
  const auto src = tensor(f.source, g.source);
  const auto tgt = tensor(f.target, g.target);
  ChainMap h(src, tgt);
  for (int n = src.lo; n <= src.hi(); ++n) {
    if (tgt.gens(n) == 0 || src.gens(n) == 0) continue;
    IntMatrix m(tensor_gens(f.target, g.target, n), src.gens(n));
    const auto tblocks = tensor_blocks(f.target, g.target, n);
    for (const auto& sb : tensor_blocks(f.source, g.source, n)) {
      long toff = -1;
      for (const auto& tb : tblocks)
        if (tb.p == sb.p && tb.q == sb.q) toff = tb.offset;
      if (toff < 0) continue;
      const auto blk = zmat::kronecker(f.comp(sb.p), g.comp(sb.q));
      for (long i = 0; i < blk.rows(); ++i)
        for (long j = 0; j < blk.cols(); ++j)
          m.at(toff + i, sb.offset + j) = blk.at(i, j);
    }
    h.set(n, std::move(m));
  }
  return h;
}

ChainMap unitor_left(const ChainComplex& c) {
  const auto src = tensor(ChainComplex::unit(), c);
  ChainMap f(src, c);
  for (int n = src.lo; n <= src.hi(); ++n)
    f.set(n, IntMatrix::identity(c.gens(n)));
  return f;
}

ChainMap unitor_right(const ChainComplex& c) {
  const auto src = tensor(c, ChainComplex::unit());
  ChainMap f(src, c);
  for (int n = src.lo; n <= src.hi(); ++n)
    f.set(n, IntMatrix::identity(c.gens(n)));
  return f;
}

ChainMap unitor_left_inv(const ChainComplex& c) {
  const auto tgt = tensor(ChainComplex::unit(), c);
  ChainMap f(c, tgt);
  for (int n = tgt.lo; n <= tgt.hi(); ++n)
    f.set(n, IntMatrix::identity(c.gens(n)));
  return f;
}

ChainMap unitor_right_inv(const ChainComplex& c) {
  const auto tgt = tensor(c, ChainComplex::unit());
  ChainMap f(c, tgt);
  for (int n = tgt.lo; n <= tgt.hi(); ++n)
    f.set(n, IntMatrix::identity(c.gens(n)));
  return f;
}

// ---------------------------------------------------------------------------
// Tensor trees

TensorTree TensorTree::make_leaf(int i) {
  TensorTree t;
  t.leaf = i;
  return t;
}

TensorTree TensorTree::make_node(TensorTree left, TensorTree right) {
  TensorTree t;
  t.l = std::make_shared<TensorTree>(std::move(left));
  t.r = std::make_shared<TensorTree>(std::move(right));
  return t;
}

std::vector<int> TensorTree::leaf_order() const {
  if (leaf >= 0) return {leaf};
  auto out = l->leaf_order();
  for (int i : r->leaf_order()) out.push_back(i);
  return out;
}

TensorTree left_nested_tree(const std::vector<int>& leaf_ids) {
  if (leaf_ids.empty()) throw std::invalid_argument("empty tensor tree");
  auto t = TensorTree::make_leaf(leaf_ids[0]);
  for (size_t i = 1; i < leaf_ids.size(); ++i)
    t = TensorTree::make_node(std::move(t), TensorTree::make_leaf(leaf_ids[i]));
  return t;
}

ChainComplex tensor_build(const TensorTree& t,
                          const std::vector<ChainComplex>& leaves) {
  if (t.leaf >= 0) return leaves[t.leaf];
  return tensor(tensor_build(*t.l, leaves), tensor_build(*t.r, leaves));
}

ChainComplex tensor_list(const std::vector<ChainComplex>& leaves) {
  std::vector<int> ids(leaves.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = (int)i;
  return tensor_build(left_nested_tree(ids), leaves);
}

namespace {

// Per-generator key of an iterated tensor: (degree, index) of each leaf,
// listed in storage order so the flat position equals the list position.
using GenKey = std::vector<std::pair<int, long>>;  // indexed by leaf id

void enumerate_tensor(const TensorTree& t, const std::vector<ChainComplex>& leaves,
                      int n, size_t nleaves, std::vector<GenKey>& out) {
  if (t.leaf >= 0) {
    for (long i = 0; i < leaves[t.leaf].gens(n); ++i) {
      GenKey key(nleaves, {INT_MIN, -1});
      key[t.leaf] = {n, i};
      out.push_back(std::move(key));
    }
    return;
  }
  const auto cl = tensor_build(*t.l, leaves);
  const auto cr = tensor_build(*t.r, leaves);
  for (int p = cl.lo; p <= cl.hi(); ++p) {
    if (!cr.in_support(n - p)) continue;
    std::vector<GenKey> el, er;
    enumerate_tensor(*t.l, leaves, p, nleaves, el);
    enumerate_tensor(*t.r, leaves, n - p, nleaves, er);
    for (const auto& kl : el)
      for (const auto& kr : er) {
        GenKey key = kl;
        for (size_t i = 0; i < nleaves; ++i)
          if (kr[i].second >= 0) key[i] = kr[i];
        out.push_back(std::move(key));
      }
  }
}

}  // namespace

ChainMap structural_iso(const std::vector<ChainComplex>& leaves,
                        const TensorTree& src, const TensorTree& dst) {
  const auto so = src.leaf_order();
  auto to = dst.leaf_order();
  {
    auto a = so, b = to;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("structural_iso: trees over different leaves");
  }
  std::vector<size_t> pos_in_dst(leaves.size(), 0);
  for (size_t i = 0; i < to.size(); ++i) pos_in_dst[to[i]] = i;

  const auto S = tensor_build(src, leaves);
  const auto T = tensor_build(dst, leaves);
  ChainMap f(S, T);
  for (int n = S.lo; n <= S.hi(); ++n) {
    std::vector<GenKey> es, et;
    enumerate_tensor(src, leaves, n, leaves.size(), es);
    enumerate_tensor(dst, leaves, n, leaves.size(), et);
    std::map<GenKey, long> lookup;
    for (size_t i = 0; i < et.size(); ++i) lookup[et[i]] = (long)i;
    IntMatrix m((long)et.size(), (long)es.size());
    for (size_t s = 0; s < es.size(); ++s) {
      const auto& key = es[s];
      auto it = lookup.find(key);
      if (it == lookup.end())
        throw std::logic_error("structural_iso: generator not found in target");
      int sign = 1;
      for (size_t a = 0; a < so.size(); ++a)
        for (size_t b = a + 1; b < so.size(); ++b)
          if (pos_in_dst[so[a]] > pos_in_dst[so[b]] &&
              key[so[a]].first % 2 != 0 && key[so[b]].first % 2 != 0)
            sign = -sign;
      m.at(it->second, (long)s) = sign;
    }
    f.set(n, std::move(m));
  }
  return f;
}

ChainMap compose_adjacent(const std::vector<ChainComplex>& leaves, int j,
                          const ChainMap& binop) {
  const int k = (int)leaves.size();
  if (k < 2 || j < 0 || j + 1 >= k)
    throw std::invalid_argument("compose_adjacent: bad position");
  if (!binop.source.same_presentation(tensor(leaves[j], leaves[j + 1])))
    throw std::invalid_argument("compose_adjacent: binop source mismatch");

  std::vector<int> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = i;
  const auto flat = left_nested_tree(ids);

  // Regroup so leaves j, j+1 form one slot, then apply binop on that slot.
  TensorTree grouped = (j == 0)
      ? TensorTree::make_node(TensorTree::make_leaf(0), TensorTree::make_leaf(1))
      : TensorTree::make_leaf(0);
  for (int i = 1; i < k; ++i) {
    if (i == j) {
      grouped = TensorTree::make_node(
          std::move(grouped), TensorTree::make_node(TensorTree::make_leaf(i),
                                                    TensorTree::make_leaf(i + 1)));
      ++i;
    } else if (i == j + 1 && j == 0) {
      continue;
    } else {
      grouped = TensorTree::make_node(std::move(grouped), TensorTree::make_leaf(i));
    }
  }
  const auto regroup = structural_iso(leaves, flat, grouped);

  ChainMap fold;
  bool started = false;
  for (int i = 0; i < k; ++i) {
    ChainMap slot = (i == j) ? binop : identity_map(leaves[i]);
    if (i == j) ++i;
    if (!started) {
      fold = std::move(slot);
      started = true;
    } else {
      fold = tensor_map(fold, slot);
    }
  }
  return compose(fold, regroup);
}

ChainMap braiding(const ChainComplex& a, const ChainComplex& b) {
  const auto src = TensorTree::make_node(TensorTree::make_leaf(0), TensorTree::make_leaf(1));
  const auto dst = TensorTree::make_node(TensorTree::make_leaf(1), TensorTree::make_leaf(0));
  return structural_iso({a, b}, src, dst);
}

// ---------------------------------------------------------------------------
// Resolutions and lifting

ChainMap free_resolution(const ChainComplex& c) {
  if (c.is_zero_complex()) return zero_map(ChainComplex::zero(), c);

  struct Stage {
    long rank = 0;
    IntMatrix eps{0, 0};  // gens_C(n) x rank
    IntMatrix d{0, 0};    // rank(n-1) x rank
    IntMatrix kb{0, 0};   // basis of {x : eps x ≡ 0}
    IntMatrix dk{0, 0};   // d restricted to that basis
  };

  std::vector<Stage> stages;
  for (int n = c.lo; n <= c.hi() + 1; ++n) {
    const long g = c.gens(n);
    const Stage* prev = stages.empty() ? nullptr : &stages.back();
    const long prank = prev ? prev->rank : 0;

    std::vector<IntMatrix> dcols;
    for (long i = 0; i < g; ++i) {
      IntMatrix b(c.gens(n - 1), 1);
      const auto dn = c.diff(n);
      for (long r = 0; r < b.rows(); ++r) b.at(r, 0) = dn.at(r, i);
      IntMatrix y(prank, 1);
      if (prev) {
        auto sol = zmat::solve_integer(
            zmat::hstack(prev->eps, c.group(n - 1).rels), b);
        if (!sol) throw std::logic_error("free_resolution: section failure");
        for (long r = 0; r < prank; ++r) y.at(r, 0) = sol->at(r, 0);
        // correct so that the lifted boundary is again a boundary
        if (prev->d.rows() > 0) {
          const auto v = prev->d * y;
          if (!v.is_zero()) {
            auto w = zmat::solve_integer(prev->dk, v);
            if (!w) throw std::logic_error("free_resolution: kernel not acyclic");
            y = y - prev->kb * *w;
          }
        }
      }
      dcols.push_back(std::move(y));
    }

    long extras = 0;
    if (prev) {
      const auto zc = zmat::kernel_and_image(prev->dk).kernel;
      const auto zb = prev->kb * zc;  // cycle basis of ker(eps) one degree down
      extras = zb.cols();
      for (long i = 0; i < extras; ++i) dcols.push_back(zb.col_matrix(i));
    }

    Stage st;
    st.rank = g + extras;
    st.eps = IntMatrix(g, st.rank);
    for (long i = 0; i < g; ++i) st.eps.at(i, i) = 1;
    st.d = IntMatrix(prank, st.rank);
    for (long j = 0; j < st.rank; ++j)
      for (long r = 0; r < prank; ++r) st.d.at(r, j) = dcols[j].at(r, 0);

    const auto ker = zmat::kernel_and_image(
                         zmat::hstack(st.eps, c.group(n).rels))
                         .kernel;
    IntMatrix proj(st.rank, ker.cols());
    for (long jj = 0; jj < ker.cols(); ++jj)
      for (long ii = 0; ii < st.rank; ++ii) proj.at(ii, jj) = ker.at(ii, jj);
    st.kb = zmat::kernel_and_image(proj).image;
    st.dk = st.d * st.kb;
    stages.push_back(std::move(st));
  }

  ChainComplex f;
  f.lo = c.lo;
  for (const auto& st : stages) f.groups.push_back(FpAbGroup::free_group(st.rank));
  for (size_t i = 1; i < stages.size(); ++i) f.diffs.push_back(stages[i].d);
  f.trim();

  ChainMap eps(f, c);
  for (size_t i = 0; i < stages.size(); ++i) {
    const int n = c.lo + (int)i;
    if (f.in_support(n) && c.in_support(n)) eps.set(n, stages[i].eps);
  }
  return eps;
}

ChainMap lift_against_trivial_fibration(const ChainMap& i, const ChainMap& p,
                                        const ChainMap& top,
                                        const ChainMap& bottom) {
  if (!is_cofibration(i))
    throw std::invalid_argument("lift: left leg is not a cofibration");
  if (!is_surjective(p) || !is_weak_equivalence(p))
    throw std::invalid_argument("lift: right leg is not a trivial fibration");
  if (!equal_maps(compose(p, top), compose(bottom, i)))
    throw std::invalid_argument("lift: square does not commute");

  const auto& b = i.target;
  const auto& x = p.source;
  const int lo = std::min({b.lo, x.lo, p.target.lo, i.source.lo});
  const int hi = std::max({b.hi(), x.hi(), p.target.hi(), i.source.hi()});

  ChainMap lift(b, x);
  for (int n = lo; n <= hi; ++n) {
    const long gb = b.gens(n), gx = x.gens(n);
    if (gb == 0 || gx == 0) continue;
    zmat::LinearSystem sys;
    const int L = sys.add_unknown(gx, gb);
    const auto& rx = x.group(n).rels;
    const auto& ry = p.target.group(n).rels;
    const auto& rxd = x.group(n - 1).rels;

    auto slack_term = [&sys](const IntMatrix& r, long cols) {
      const int s = sys.add_unknown(r.cols(), cols);
      return zmat::LinearSystem::Term{s, r, IntMatrix::identity(cols)};
    };

    {  // upper triangle: L ∘ i ≡ top
      std::vector<zmat::LinearSystem::Term> terms{{L, IntMatrix::identity(gx), i.comp(n)}};
      if (rx.cols() > 0) terms.push_back(slack_term(rx, i.source.gens(n)));
      sys.add_constraint(terms, top.comp(n));
    }
    if (rx.cols() > 0) {  // well-definedness on relations of B
      const auto& rb = b.group(n).rels;
      if (rb.cols() > 0) {
        std::vector<zmat::LinearSystem::Term> terms{{L, IntMatrix::identity(gx), rb},
                                      slack_term(rx, rb.cols())};
        sys.add_constraint(terms, IntMatrix(gx, rb.cols()));
      }
    } else if (b.group(n).rels.cols() > 0) {
      sys.add_constraint({{L, IntMatrix::identity(gx), b.group(n).rels}},
                         IntMatrix(gx, b.group(n).rels.cols()));
    }
    {  // lower triangle: p ∘ L ≡ bottom
      std::vector<zmat::LinearSystem::Term> terms{{L, p.comp(n), IntMatrix::identity(gb)}};
      if (ry.cols() > 0) terms.push_back(slack_term(ry, gb));
      sys.add_constraint(terms, bottom.comp(n));
    }
    {  // chain condition against the component already chosen below
      std::vector<zmat::LinearSystem::Term> terms{{L, x.diff(n), IntMatrix::identity(gb)}};
      if (rxd.cols() > 0) terms.push_back(slack_term(rxd, gb));
      sys.add_constraint(terms, lift.comp(n - 1) * b.diff(n));
    }
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("lift: no diagonal exists; hypotheses violated");
    lift.set(n, (*sol)[L]);
  }
  return lift;
}

std::pair<ChainMap, ChainMap> factorize(const ChainMap& f) {
  if (!is_cofibrant(f.source))
    throw std::invalid_argument("factorize: source must be degreewise free");
  const auto& xc = f.source;
  const auto eps = free_resolution(f.target);
  const auto l = lift_against_trivial_fibration(
      zero_map(ChainComplex::zero(), xc), eps,
      zero_map(ChainComplex::zero(), eps.source), f);

  // Mapping cylinder of l : X -> F, with X glued along its identity.
  const auto& fr = eps.source;
  ChainComplex cyl;
  cyl.lo = std::min(xc.lo, fr.lo);
  const int hi = std::max(xc.hi() + 1, fr.hi());
  for (int n = cyl.lo; n <= hi; ++n) {
    const long cc = fr.gens(n);
    cyl.groups.push_back(FpAbGroup(
        xc.gens(n) + xc.gens(n - 1) + cc,
        zmat::block_diag(zmat::block_diag(xc.group(n).rels, xc.group(n - 1).rels),
                         IntMatrix(cc, 0))));
  }
  for (int n = cyl.lo + 1; n <= hi; ++n) {
    const long ca = xc.gens(n), cb = xc.gens(n - 1), cc = fr.gens(n);
    const long ra = xc.gens(n - 1), rb = xc.gens(n - 2), rc = fr.gens(n - 1);
    IntMatrix d(ra + rb + rc, ca + cb + cc);
    const auto dx = xc.diff(n), dxm = xc.diff(n - 1), df = fr.diff(n);
    const auto ln = l.comp(n - 1);
    // d(a, b, c) = (da - b, -db, dc + l b)
    for (long r = 0; r < ra; ++r) {
      for (long j = 0; j < ca; ++j) d.at(r, j) = dx.at(r, j);
      if (r < cb) d.at(r, ca + r) = -1;
    }
    for (long r = 0; r < rb; ++r)
      for (long j = 0; j < cb; ++j) d.at(ra + r, ca + j) = -dxm.at(r, j);
    for (long r = 0; r < rc; ++r) {
      for (long j = 0; j < cb; ++j) d.at(ra + rb + r, ca + j) = ln.at(r, j);
      for (long j = 0; j < cc; ++j) d.at(ra + rb + r, ca + cb + j) = df.at(r, j);
    }
    cyl.diffs.push_back(std::move(d));
  }
  cyl.trim();

  ChainMap g(xc, cyl);
  for (int n = xc.lo; n <= xc.hi(); ++n) {
    IntMatrix m(cyl.gens(n), xc.gens(n));
    for (long i = 0; i < xc.gens(n); ++i) m.at(i, i) = 1;
    g.set(n, std::move(m));
  }
  ChainMap h(cyl, f.target);
  for (int n = cyl.lo; n <= cyl.hi(); ++n) {
    const long ca = xc.gens(n), cb = xc.gens(n - 1), cc = fr.gens(n);
    if (f.target.gens(n) == 0 || ca + cb + cc == 0) continue;
    // h(a, b, c) = eps(l a + c)
    const auto el = eps.comp(n) * l.comp(n);
    IntMatrix m(f.target.gens(n), ca + cb + cc);
    for (long r = 0; r < m.rows(); ++r) {
      for (long j = 0; j < ca; ++j) m.at(r, j) = el.at(r, j);
      const auto en = eps.comp(n);
      for (long j = 0; j < cc; ++j) m.at(r, ca + cb + j) = en.at(r, j);
    }
    h.set(n, std::move(m));
  }
  return {std::move(g), std::move(h)};
}

FlatReport is_flat(const ChainComplex& c) {
  bool torsion_free = true;
  std::vector<Int> torsion_primes;
  for (const auto& g : c.groups)
    for (const auto& t : g.invariants().torsion) {
      torsion_free = false;
      const auto p = smallest_prime_factor(t);
      if (std::find(torsion_primes.begin(), torsion_primes.end(), p) ==
          torsion_primes.end())
        torsion_primes.push_back(p);
    }

  auto battery = torsion_primes;
  for (long p : {2, 3})
    if (std::find(battery.begin(), battery.end(), Int(p)) == battery.end())
      battery.push_back(p);

  FlatReport report;
  report.flat = torsion_free;
  const auto id_c = identity_map(c);
  for (const auto& p : battery) {
    const auto eps =
        free_resolution(ChainComplex::single(FpAbGroup::cyclic(p), 0));
    const bool preserved =
        c.is_zero_complex() || is_weak_equivalence(tensor_map(id_c, eps));
    if (!preserved && torsion_free)
      throw std::logic_error("flatness check: torsion-free complex failed battery");
    if (!preserved && !report.falsifier) {
      report.falsifier = eps;
      std::ostringstream msg;
      msg << "tensoring does not preserve the resolution of Z/" << p;
      report.detail = msg.str();
    }
  }
  if (!torsion_free && !report.falsifier)
    throw std::logic_error("flatness check: torsion present but battery passed");
  if (report.flat) report.detail = "degreewise torsion-free";
  return report;
}

ChainMap inverse_iso(const ChainMap& f) {
  if (!is_isomorphism(f))
    throw std::invalid_argument("inverse_iso: map is not an isomorphism");
  const auto& s = f.source;
  const auto& t = f.target;
  const int lo = std::min(s.lo, t.lo), hi = std::max(s.hi(), t.hi());

  zmat::LinearSystem sys;
  std::map<int, int> gv;
  for (int n = lo; n <= hi; ++n) gv[n] = sys.add_unknown(s.gens(n), t.gens(n));
  auto slack = [&sys](const IntMatrix& r, long cols) {
    const int v = sys.add_unknown(r.cols(), cols);
    return zmat::LinearSystem::Term{v, r, IntMatrix::identity(cols)};
  };
  for (int n = lo; n <= hi; ++n) {
    const long gs = s.gens(n), gt = t.gens(n);
    const auto& rs = s.group(n).rels;
    {  // g f = id mod source relations
      std::vector<zmat::LinearSystem::Term> terms{{gv[n], IntMatrix::identity(gs), f.comp(n)}};
      if (rs.cols() > 0) terms.push_back(slack(rs, gs));
      sys.add_constraint(terms, IntMatrix::identity(gs));
    }
    {  // f g = id mod target relations
      std::vector<zmat::LinearSystem::Term> terms{{gv[n], f.comp(n), IntMatrix::identity(gt)}};
      if (t.group(n).rels.cols() > 0) terms.push_back(slack(t.group(n).rels, gt));
      sys.add_constraint(terms, IntMatrix::identity(gt));
    }
    if (t.group(n).rels.cols() > 0) {  // well-definedness
      std::vector<zmat::LinearSystem::Term> terms{
          {gv[n], IntMatrix::identity(gs), t.group(n).rels}};
      if (rs.cols() > 0) terms.push_back(slack(rs, t.group(n).rels.cols()));
      sys.add_constraint(terms, IntMatrix(gs, t.group(n).rels.cols()));
    }
    if (n > lo) {  // chain condition
      std::vector<zmat::LinearSystem::Term> terms{
          {gv[n], s.diff(n), IntMatrix::identity(gt)},
          {gv[n - 1], Int(-1) * IntMatrix::identity(s.gens(n - 1)), t.diff(n)}};
      const auto& rsd = s.group(n - 1).rels;
      if (rsd.cols() > 0) terms.push_back(slack(rsd, gt));
      sys.add_constraint(terms, IntMatrix(s.gens(n - 1), gt));
    }
  }
  auto sol = sys.solve();
  if (!sol) throw std::logic_error("inverse_iso: no chain inverse found");
  ChainMap g(t, s);
  for (int n = lo; n <= hi; ++n)
    if (s.gens(n) > 0 && t.gens(n) > 0) g.set(n, (*sol)[gv[n]]);
  return g;
}

ChainMap random_chain_map(const ChainComplex& src, const ChainComplex& tgt,
                          std::mt19937_64& rng, long bound) {
  const int lo = std::min(src.lo, tgt.lo), hi = std::max(src.hi(), tgt.hi());
  zmat::LinearSystem sys;
  std::map<int, int> fv;
  for (int n = lo; n <= hi; ++n) fv[n] = sys.add_unknown(tgt.gens(n), src.gens(n));
  auto slack = [&sys](const IntMatrix& r, long cols) {
    const int v = sys.add_unknown(r.cols(), cols);
    return zmat::LinearSystem::Term{v, r, IntMatrix::identity(cols)};
  };
  for (int n = lo; n <= hi; ++n) {
    const auto& rs = src.group(n).rels;
    const auto& rt = tgt.group(n).rels;
    if (rs.cols() > 0) {
      std::vector<zmat::LinearSystem::Term> terms{{fv[n], IntMatrix::identity(tgt.gens(n)), rs}};
      if (rt.cols() > 0) terms.push_back(slack(rt, rs.cols()));
      sys.add_constraint(terms, IntMatrix(tgt.gens(n), rs.cols()));
    }
    if (n > lo) {
      std::vector<zmat::LinearSystem::Term> terms{
          {fv[n], tgt.diff(n), IntMatrix::identity(src.gens(n))},
          {fv[n - 1], Int(-1) * IntMatrix::identity(tgt.gens(n - 1)), src.diff(n)}};
      const auto& rtd = tgt.group(n - 1).rels;
      if (rtd.cols() > 0) terms.push_back(slack(rtd, src.gens(n)));
      sys.add_constraint(terms, IntMatrix(tgt.gens(n - 1), src.gens(n)));
    }
  }
  auto sol = sys.solve_random(rng, bound);
  if (!sol) throw std::logic_error("random_chain_map: no chain map exists");
  ChainMap f(src, tgt);
  for (int n = lo; n <= hi; ++n)
    if (src.gens(n) > 0 && tgt.gens(n) > 0) f.set(n, (*sol)[fv[n]]);
  return f;
}

}  // namespace hocolim::chainz
