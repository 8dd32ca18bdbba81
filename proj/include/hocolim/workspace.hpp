#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hocolim/chainz.hpp"
#include "hocolim/dgcat.hpp"
#include "hocolim/diagram.hpp"

namespace hocolim::ws {

using chainz::ChainComplex;
using chainz::ChainMap;
using nlohmann::json;

/// Input errors (malformed files, unresolved names); commands exit 2 on it.
struct WsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named collection of the four interchange object kinds. Categories,
/// diagrams and transformations reference complexes / each other by name;
/// the resolved in-memory objects sit alongside the reference lists so a
/// workspace can be re-serialized exactly.
struct Workspace {
  std::map<std::string, ChainComplex> complexes;

  struct CategoryEntry {
    std::vector<std::vector<std::string>> hom;  // complex names, [src][dst]
    dgcat::DgCategory cat;
  };
  std::map<std::string, CategoryEntry> categories;

  struct DiagramEntry {
    std::string category;
    std::vector<std::string> values;  // complex names per object
    diagram::Diagram dia;
  };
  std::map<std::string, DiagramEntry> diagrams;

  struct TransformationEntry {
    std::string source, target;  // diagram names
    diagram::Transformation tr;
  };
  std::map<std::string, TransformationEntry> transformations;

  const ChainComplex& complex(const std::string& name) const;
  const DiagramEntry& diagram_entry(const std::string& name) const;
  const CategoryEntry& category_entry(const std::string& name) const;
  const TransformationEntry& transformation_entry(const std::string& name) const;

  /// Registers a complex, reusing the name of an existing equal entry.
  std::string add_complex(const std::string& hint, const ChainComplex& c);
  void add_category(const std::string& name, const dgcat::DgCategory& c);
  void add_diagram(const std::string& name, const std::string& category,
                   const diagram::Diagram& d);
  void add_transformation(const std::string& name, const std::string& source,
                          const std::string& target,
                          const diagram::Transformation& t);
};

// JSON atoms: integers are emitted as numbers when they fit in 53 bits and
// as decimal strings beyond that; matrices carry explicit shapes so empty
// rows/columns survive the round trip.
json int_to_json(const zmat::Int& v);
zmat::Int int_from_json(const json& j);
json matrix_to_json(const zmat::IntMatrix& m);
zmat::IntMatrix matrix_from_json(const json& j);
json comps_to_json(const ChainMap& f);  // degree -> matrix

json to_json(const Workspace& w);
Workspace workspace_from_json(const json& j);

/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize(const Workspace& w);
/// Parses and resolves references; throws WsError with the byte position of
/// syntax errors and the offending name otherwise.
Workspace parse(const std::string& text);

Workspace load_file(const std::string& path);
void save_file(const std::string& path, const Workspace& w);

}  // namespace hocolim::ws
