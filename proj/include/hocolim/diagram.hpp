#pragma once

#include <string>
#include <vector>

#include "hocolim/chainz.hpp"
#include "hocolim/dgcat.hpp"

namespace hocolim::diagram {

using chainz::ChainComplex;
using chainz::ChainMap;
using dgcat::DgCategory;
using dgcat::DgFunctor;

/// Enriched functor from a dg-category into chain complexes: a complex per
/// object and action maps hom(a,b) ⊗ X(a) -> X(b).
struct Diagram {
  DgCategory shape;
  std::vector<ChainComplex> value;
  std::vector<std::vector<ChainMap>> action;  // [src][dst]

  /// Action endpoints, associativity against composition, unitality.
  void validate() const;
};

struct Transformation {
  Diagram source, target;  // same shape
  std::vector<ChainMap> components;

  void validate() const;  // naturality squares commute exactly
};

Transformation identity_transformation(const Diagram& x);
Transformation compose(const Transformation& g, const Transformation& f);

/// Covariant representable c(c0, -); contravariant ones are representables
/// of the opposite category.
Diagram representable(const DgCategory& c, long c0);

/// Constant value with every hom generator acting as the identity. Requires
/// set-like homs: degreewise free, concentrated in degree 0.
Diagram constant_diagram(const DgCategory& c, ChainComplex m);

/// Pointwise X(-) ⊗ m with the action through the associator.
Diagram diagram_tensor(const Diagram& x, const ChainComplex& m);
/// id_X ⊗ k : diagram_tensor(x, k.source) -> diagram_tensor(x, k.target).
Transformation diagram_tensor_map(const Diagram& x, const ChainMap& k);

/// Restriction f*y along a functor: value(c) = y(f c).
Diagram restrict(const DgFunctor& f, const Diagram& y);

// ---------------------------------------------------------------------------
// Coends and weighted colimits

/// Coend of a bifunctor over opposite(c) x c (a diagram on the product
/// category, first factor contravariant): the coequalizer of
///   Σ c(c0,c1) ⊗ F(c1,c0) ⇉ Σ F(c,c)
/// computed as a cokernel of the difference of the two action maps.
/// The coend complex reuses the generators of the diagonal sum.
struct Coend {
  ChainComplex complex;
  chainz::Sum diagonal;  // Σ_c F(c,c)
  ChainMap projection;   // diagonal.complex -> complex
};
Coend coend(const DgCategory& base, const Diagram& f);

/// Map of coends induced by a transformation of bifunctors.
ChainMap coend_map(const Coend& src, const Coend& dst, const Transformation& t);

/// External tensor of a weight over opposite(c) and a diagram over c, as a
/// bifunctor on the product category.
Diagram external_tensor(const Diagram& w, const Diagram& x);

/// W ⊗_c X = coend of the external tensor.
Coend weighted_colimit(const Diagram& w, const Diagram& x);

/// Map of weighted colimits induced by a weight map and a diagram map
/// (either may be an identity transformation).
ChainMap weighted_colimit_map(const Coend& src, const Coend& dst,
                              const Transformation& on_weights,
                              const Transformation& on_diagrams);

// ---------------------------------------------------------------------------
// Left Kan extension

/// f_! x with (f_! x)(d) = d(f-, d) ⊗_c x and the canonical action.
struct LeftKan {
  Diagram diagram;            // over the target category
  std::vector<Diagram> weights;  // weight d(f-, d) per target object
  std::vector<Coend> coends;     // pointwise coend data
};
LeftKan left_kan(const DgFunctor& f, const Diagram& x);

/// Adjunction unit x -> f* f_! x and counit f_! f* y -> y.
Transformation kan_unit(const DgFunctor& f, const Diagram& x, const LeftKan& lk);
Transformation kan_counit(const DgFunctor& f, const Diagram& y);

/// Both coends of the restriction-extension exchange for a bifunctor f over
/// opposite(c) x d and a functor alpha : c -> d, with the canonical
/// comparison map between them.
struct CoendExchange {
  ChainComplex restricted;  // ∫^c f(-, alpha -)
  ChainComplex extended;    // ∫^d (alpha^op x id)_! f
  ChainMap comparison;      // restricted -> extended
};
CoendExchange coend_exchange(const DgFunctor& alpha, const Diagram& f);

/// The same functor between the opposite categories / the product functor.
DgFunctor opposite_functor(const DgFunctor& f);
DgFunctor product_functor(const DgFunctor& f, const DgFunctor& g);

// ---------------------------------------------------------------------------
// Cells and cofibrations

/// One cell attachment: pushout of c(obj, -) ⊗ k along an attaching map.
struct Attachment {
  long obj;
  ChainMap k;            // a cofibration m -> n of complexes
  Transformation attach;  // c(obj,-) ⊗ m -> x
};

struct AttachResult {
  Diagram diagram;
  Transformation inclusion;  // x -> result, pointwise pushout leg
  Transformation cell;       // c(obj,-) ⊗ n -> result, the other leg
};
AttachResult attach_cell(const Diagram& x, long obj, const ChainMap& k,
                         const Transformation& attach);

/// Certificate that a diagram is a finite cell complex relative to a base.
struct CellPresentation {
  Diagram base;
  std::vector<Attachment> attachments;
};

struct Replay {
  Diagram diagram;
  Transformation inclusion;  // base -> diagram
};
/// Replays the attachments in order; each attaching map must target the
/// diagram built so far.
Replay replay(const CellPresentation& cp);

bool is_pointwise_we(const Transformation& f);
bool is_pointwise_cofibration(const Transformation& f);

// ---------------------------------------------------------------------------
// Cubical diagrams

/// Functor on the powerset of {0..size-1}: a complex per bitmask and one
/// map per single-element extension, commuting on squares.
struct Cube {
  int size = 0;
  std::vector<ChainComplex> value;         // indexed by bitmask
  std::vector<std::vector<ChainMap>> edge;  // edge[mask][i]: mask -> mask|1<<i

  void validate() const;
  ChainMap map(long from, long to) const;  // composite along sorted adds
};

/// Pushout corner map: colim over proper subsets -> X(S). The colimit is a
/// cokernel whose generators are those of the sum over proper subsets.
struct Pcm {
  ChainComplex colim;
  chainz::Sum proper;   // Σ_{T ⊊ S} X(T)
  ChainMap projection;  // proper.complex -> colim
  ChainMap corner;      // colim -> X(S)
};
Pcm pcm(const Cube& x);

/// External tensor of cubes on the disjoint union of index sets.
Cube cube_tensor(const Cube& x, const Cube& y);

/// Verifies pcm(x ⊗ y) agrees with the corner map of pcm(x) ⊗ pcm(y)
/// through the canonical identification of sources.
bool pcm_composition_check(const Cube& x, const Cube& y);

// ---------------------------------------------------------------------------
// Left closedness of the coend bifunctor

/// For a pointwise cofibration of weights v : V -> W and a relative cell
/// diagram map i : X -> Y, forms the square of weighted colimits and checks
/// the two verticals and the pushout corner map are cofibrations.
struct LeftClosedReport {
  bool ok = false;
  bool left_vertical = false;   // V⊗X -> W⊗X
  bool right_vertical = false;  // V⊗Y -> W⊗Y
  bool corner = false;          // pushout -> W⊗Y
  std::string detail;
};
LeftClosedReport coend_left_closed_check(const Transformation& v,
                                         const Transformation& i);

}  // namespace hocolim::diagram
