#pragma once

#include <string>
#include <vector>

#include "hocolim/chainz.hpp"
#include "hocolim/dgcat.hpp"
#include "hocolim/diagram.hpp"

namespace hocolim::reedy {

using chainz::ChainMap;
using dgcat::DgCategory;
using dgcat::DgFunctor;
using diagram::Diagram;
using diagram::Transformation;

/// Reedy structure: a degree function together with wide subcategories of
/// degree-raising (plus) and degree-lowering (minus) maps such that
/// composition Σ_d plus(d,c) ⊗ minus(c',d) -> hom(c',c) is an isomorphism.
struct ReedyStructure {
  DgCategory shape;
  std::vector<int> degree;  // kept here: only direct shapes may declare degrees
  DgFunctor plus_in, minus_in;
  // blocks[src][dst]: Σ_d plus(d,dst) ⊗ minus(src,d), block order by d
  std::vector<std::vector<chainz::Sum>> blocks;
  std::vector<std::vector<ChainMap>> decomposition;  // blocks -> hom

  void validate() const;
};

/// Degrees-only structure of a direct category: plus everything, minus
/// only units.
ReedyStructure direct_reedy(const DgCategory& c);
/// Assembles and checks the decomposition data for given subcategories.
ReedyStructure make_reedy(DgCategory shape, std::vector<int> degree,
                          DgFunctor plus_in, DgFunctor minus_in);

/// A representable rewritten through the decomposition, together with the
/// sub-coproduct over middle objects d != c and its inclusion.
struct BoundaryWeights {
  std::vector<std::vector<long>> kept;  // per object, block ids retained
  Diagram full, boundary;
  Transformation inclusion;  // boundary -> full
};
/// hom(-, c) over the opposite category (a weight).
BoundaryWeights contravariant_boundary(const ReedyStructure& rs, long c);
/// hom(c, -) over the category itself (a diagram).
BoundaryWeights covariant_boundary(const ReedyStructure& rs, long c);

struct LatchingData {
  long c;
  Diagram boundary_weight;   // over the opposite category
  diagram::Coend object;     // L_c X as a weighted colimit
  ChainMap latch;            // L_c X -> X(c)
};
LatchingData latching(const ReedyStructure& rs, const Diagram& x, long c);

/// Skeleton relative to a set of objects whose cells are always kept:
/// the weighted colimit by the sub-coproducts over middles in the set.
struct Skeleton {
  Diagram diagram;
  Transformation to_x;  // canonical comparison into x
  std::vector<Diagram> weights;
  std::vector<diagram::Coend> coends;
};
Skeleton skeleton_keep(const ReedyStructure& rs, const Diagram& x,
                       const std::vector<bool>& keep);
/// Cells of degree <= n; n = -1 gives the zero diagram.
Skeleton skeleton(const ReedyStructure& rs, const Diagram& x, int n);

/// The corner map of the square of weighted colimits of the two boundary
/// inclusions at c (contravariant) and cp (covariant); asserts it is flat,
/// and an isomorphism when cp != c, a single free cell when cp = c.
struct CellsFlatReport {
  bool skipped = false;  // shape not locally flat: nothing to check
  bool flat = false;
  bool shape_ok = false;  // iso (cp != c) or a pushout of 0 -> Z (cp = c)
  std::string detail;
};
CellsFlatReport cells_flatness_check(const ReedyStructure& rs, long c, long cp);

/// Tests the latching maps at every object outside the initial part; when
/// they are all cofibrations, emits a cell presentation whose replay is
/// isomorphic to x over the Kan extension from the initial part, with the
/// isomorphism as witness.
struct AwayReport {
  bool ok = false;
  long failing = -1;
  std::string detail;
  diagram::CellPresentation presentation;
  Transformation witness;  // replay(presentation) -> x, pointwise iso
};
AwayReport reedy_cofibrant_away(const ReedyStructure& rs, const Diagram& x,
                                const std::vector<bool>& initial);

/// Inductive cofibrant replacement over a direct shape: starts from the Kan
/// extension off the subcategory, then per degree factorizes each component
/// into a cofibration followed by a weak equivalence and attaches the
/// corresponding cell.
struct Replacement {
  Diagram g;
  Transformation lambda;  // g -> f, a pointwise weak equivalence
  diagram::CellPresentation presentation;
};
Replacement replace_direct(const Diagram& f, const std::vector<bool>& sub);

/// Factorization of a map of diagrams over a direct shape into a projective
/// cofibration followed by a pointwise weak equivalence, by replacing the
/// associated diagram over shape x [1] away from shape x {0}.
struct DiagramFactorization {
  Diagram mid;
  Transformation g, h;  // h ∘ g = f
  diagram::CellPresentation presentation;
};
DiagramFactorization factorize_diagram(const Transformation& f);

}  // namespace hocolim::reedy
