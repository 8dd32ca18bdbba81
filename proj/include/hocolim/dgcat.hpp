#pragma once

#include <string>
#include <vector>

#include "hocolim/chainz.hpp"

namespace hocolim::dgcat {

using chainz::ChainComplex;
using chainz::ChainMap;

/// Finite category enriched in bounded chain complexes: hom complexes,
/// composition maps hom(b,c) ⊗ hom(a,b) -> hom(a,c) and units Z -> hom(c,c).
/// An optional degree function declares the category direct.
struct DgCategory {
  std::vector<std::string> objects;
  std::vector<std::vector<ChainComplex>> hom;            // [src][dst]
  std::vector<std::vector<std::vector<ChainMap>>> comp;  // [a][b][c]
  std::vector<ChainMap> unit;
  std::vector<int> degree;  // empty unless a direct/Reedy structure is declared

  long size() const { return (long)objects.size(); }
  bool has_degrees() const { return !degree.empty(); }

  /// Associativity, unit laws, and (when degrees are declared) directness:
  /// hom(a,b) = 0 whenever |a| >= |b| and a != b, units isomorphisms.
  void validate() const;
};

/// Builders used across the corpus and the tests.
DgCategory one_object(const std::string& name, ChainComplex end, ChainMap comp,
                      ChainMap unit);
/// Ordinary poset category: hom = Z when leq[a][b], else 0.
DgCategory from_poset(const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq);
DgCategory discrete(const std::vector<std::string>& names);
DgCategory arrow_category();  // the poset [1] = {0 -> 1}

DgCategory opposite(const DgCategory& c);
/// Product category on object pairs (a, b), indexed a * |B| + b. Composition
/// swaps the middle tensor factors, picking up Koszul signs.
DgCategory product(const DgCategory& a, const DgCategory& b);

struct DgFunctor {
  DgCategory source, target;
  std::vector<long> on_objects;
  std::vector<std::vector<ChainMap>> on_homs;  // [a][b]
  void validate() const;
};
DgFunctor identity_functor(const DgCategory& c);

/// Full subcategory on a subset of objects with its inclusion functor.
struct FullSubcategory {
  DgCategory cat;
  DgFunctor inclusion;
};
FullSubcategory full_subcategory(const DgCategory& c, const std::vector<long>& objs);

struct LocalFlatReport {
  bool flat = true;
  struct Failure {
    long src, dst;
    chainz::FlatReport report;
  };
  std::vector<Failure> failures;
};
LocalFlatReport is_locally_flat(const DgCategory& c);

/// The direct replacement of c: objects are nonempty sequences of objects of
/// c with length <= max_length + 1, and
///   hom((a_0..a_k), (b_0..b_n)) = (Σ_{φ(k)=n} Z) ⊕ (Σ_{φ(k)≠n} c(a_k, b_n))
/// over injective monotone φ : [k] -> [n] with a_i = b_{φ(i)} for all i.
struct DeltaCategory {
  DgCategory cat;
  std::vector<std::vector<long>> seqs;  // object id -> underlying sequence

  struct Summand {
    std::vector<long> phi;
    bool top;  // φ(k) = n, the unit summand
  };
  std::vector<std::vector<std::vector<Summand>>> summands;  // [src][dst]
  std::vector<std::vector<chainz::Sum>> hom_sums;           // [src][dst]

  DgFunctor projection;  // P : ΔC -> C, sequence -> last object

  long object_of(const std::vector<long>& seq) const;
};
DeltaCategory delta_category(const DgCategory& c, int max_length);

/// The ordinary category of sequences ending at c with top-preserving φ.
/// Has (c) as an initial object.
struct CommaTopCategory {
  std::vector<long> objects;  // ΔC object ids
  // morphisms[a][b]: list of top-preserving φ from objects[a] to objects[b]
  std::vector<std::vector<std::vector<std::vector<long>>>> morphisms;
  long initial;  // position of (c) in objects
  DgCategory cat;        // set-enriched realization
  DgFunctor inclusion;   // into dc.cat
};
CommaTopCategory comma_top_category(const DeltaCategory& dc, long c);

}  // namespace hocolim::dgcat
