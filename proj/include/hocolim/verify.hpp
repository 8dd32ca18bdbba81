#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hocolim/workspace.hpp"

namespace hocolim::verify {

using chainz::ChainComplex;
using chainz::ChainMap;

/// One verdict with a concrete witness on failure (and often on success:
/// the computed invariants).
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> info;  // ordered extras

  bool ok() const;
  Check& add(const std::string& name, bool pass, std::string witness = "");
  void note(const std::string& key, const std::string& value);
  ws::json to_json() const;
  std::string to_text() const;
};

// ---------------------------------------------------------------------------
// Built-in corpus (seeded, reproducible)

/// Random bounded free complex: degrees within [0, 3], ranks <= 4, built
/// from spheres and multiplied disks under a random change of basis.
ChainComplex random_complex(std::mt19937_64& rng);
std::vector<ChainComplex> corpus_complexes(std::uint64_t seed, int count);

/// Workspace with the stock shapes and diagrams the suites run over: the
/// one-object group ring Z[Z/2], the arrow poset, a three-object chain, and
/// the two-object torsion diagram used by the replacement examples.
ws::Workspace builtin_workspace();

// ---------------------------------------------------------------------------
// Invariant suites

Report suite_axioms(std::uint64_t seed);        // base-category axioms
Report suite_reedy(std::uint64_t seed);         // decomposition/skeleton/latching
Report suite_bar(std::uint64_t seed);           // resolution, contraction, oracle
Report suite_counterexample();                  // the Z/2 obstruction argument
Report suite_workspace(const ws::Workspace& w); // validity of the file's objects

// ---------------------------------------------------------------------------
// Commands (the CLI is a thin flag-parsing layer over these)

Report cmd_homology(const ws::Workspace& w, const std::string& name);

struct ReplaceResult {
  Report report;
  ws::Workspace output;
};
/// mode "direct": inductive cell replacement over a direct shape, away from
/// the named objects. mode "bar": truncated bar resolution.
ReplaceResult cmd_replace(const ws::Workspace& w, const std::string& diagram,
                          const std::string& mode, int truncation,
                          const std::vector<std::string>& away_from);

Report cmd_wcolim(const ws::Workspace& w, const std::string& weight,
                  const std::string& diagram,
                  const std::string& check_quillen = "");

/// suite in {axioms, reedy, bar, counterexample, all}; "all" also validates
/// every object in the file.
Report cmd_verify(const ws::Workspace& w, const std::string& suite,
                  std::uint64_t seed);

}  // namespace hocolim::verify
