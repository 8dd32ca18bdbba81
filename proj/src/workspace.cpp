#include "hocolim/workspace.hpp"

#include <fstream>

namespace hocolim::ws {

namespace {

constexpr long kSafeBits = 53;

[[noreturn]] void fail(const std::string& msg) { throw WsError(msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing key \"" + key + "\"");
  return *it;
}

}  // namespace

json int_to_json(const zmat::Int& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) < kSafeBits)
    return json(v.get_si());
  return json(v.get_str());
}

zmat::Int int_from_json(const json& j) {
  if (j.is_number_integer()) return zmat::Int((long)j.get<std::int64_t>());
  if (j.is_string()) {
    zmat::Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      fail("not a decimal integer: \"" + j.get<std::string>() + "\"");
    return v;
  }
  fail("expected an integer (number or decimal string), got " + j.dump());
}

json matrix_to_json(const zmat::IntMatrix& m) {
  json data = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"shape", {m.rows(), m.cols()}}, {"data", std::move(data)}};
}

zmat::IntMatrix matrix_from_json(const json& j) {
  const auto& shape = field(j, "shape", "matrix");
  if (!shape.is_array() || shape.size() != 2) fail("matrix: bad shape");
  zmat::IntMatrix m(shape[0].get<long>(), shape[1].get<long>());
  const auto& data = field(j, "data", "matrix");
  if ((long)data.size() != m.rows()) fail("matrix: row count != shape");
  for (long r = 0; r < m.rows(); ++r) {
    if ((long)data[r].size() != m.cols()) fail("matrix: column count != shape");
    for (long c = 0; c < m.cols(); ++c) m.at(r, c) = int_from_json(data[r][c]);
  }
  return m;
}

json comps_to_json(const ChainMap& f) {
  json out = json::object();
  for (const auto& [n, m] : f.comps)
    if (!m.is_zero()) out[std::to_string(n)] = matrix_to_json(m);
  return out;
}

namespace {

// endpoints known from context; only the nonzero components are stored
void comps_from_json(const json& j, ChainMap& f) {
  for (auto it = j.begin(); it != j.end(); ++it)
    f.set(std::stoi(it.key()), matrix_from_json(it.value()));
}

json complex_to_json(const ChainComplex& c) {
  json groups = json::array();
  for (const auto& g : c.groups)
    groups.push_back(json{{"gens", g.gens}, {"rels", matrix_to_json(g.rels)}});
  json diffs = json::array();
  for (const auto& d : c.diffs) diffs.push_back(matrix_to_json(d));
  return json{{"lo", c.lo}, {"groups", std::move(groups)},
              {"diffs", std::move(diffs)}};
}

ChainComplex complex_from_json(const json& j, const std::string& name) {
  ChainComplex c;
  c.lo = field(j, "lo", name).get<int>();
  for (const auto& g : field(j, "groups", name)) {
    long gens = field(g, "gens", name).get<long>();
    auto rels = matrix_from_json(field(g, "rels", name));
    if (rels.rows() != gens) fail(name + ": relation rows != gens");
    c.groups.emplace_back(gens, std::move(rels));
  }
  for (const auto& d : field(j, "diffs", name))
    c.diffs.push_back(matrix_from_json(d));
  if (!c.groups.empty() && c.diffs.size() + 1 != c.groups.size())
    fail(name + ": need one differential per adjacent degree pair");
  for (std::size_t i = 0; i < c.diffs.size(); ++i)
    if (c.diffs[i].rows() != c.groups[i].gens ||
        c.diffs[i].cols() != c.groups[i + 1].gens)
      fail(name + ": differential shape mismatch at degree " +
           std::to_string(c.lo + (int)i + 1));
  return c;
}

json category_to_json(const std::string& name, const Workspace::CategoryEntry& e) {
  (void)name;
  json hom = json::array();
  for (const auto& row : e.hom) hom.push_back(row);
  json comp = json::array();
  for (const auto& plane : e.cat.comp) {
    json p = json::array();
    for (const auto& row : plane) {
      json r = json::array();
      for (const auto& m : row) r.push_back(comps_to_json(m));
      p.push_back(std::move(r));
    }
    comp.push_back(std::move(p));
  }
  json units = json::array();
  for (const auto& u : e.cat.unit) units.push_back(comps_to_json(u));
  json out{{"objects", e.cat.objects}, {"hom", std::move(hom)},
           {"comp", std::move(comp)}, {"units", std::move(units)}};
  if (e.cat.has_degrees()) out["degrees"] = e.cat.degree;
  return out;
}

Workspace::CategoryEntry category_from_json(const json& j,
                                            const std::string& name,
                                            const Workspace& w) {
  Workspace::CategoryEntry e;
  e.cat.objects = field(j, "objects", name).get<std::vector<std::string>>();
  const long n = (long)e.cat.objects.size();
  e.hom = field(j, "hom", name).get<std::vector<std::vector<std::string>>>();
  if ((long)e.hom.size() != n) fail(name + ": hom table must be " +
                                    std::to_string(n) + " rows");
  e.cat.hom.resize(n);
  for (long a = 0; a < n; ++a) {
    if ((long)e.hom[a].size() != n) fail(name + ": ragged hom table");
    for (long b = 0; b < n; ++b) e.cat.hom[a].push_back(w.complex(e.hom[a][b]));
  }
  const auto& comp = field(j, "comp", name);
  e.cat.comp.assign(n, std::vector<std::vector<ChainMap>>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        ChainMap m(chainz::tensor(e.cat.hom[b][c], e.cat.hom[a][b]),
                   e.cat.hom[a][c]);
        comps_from_json(comp.at(a).at(b).at(c), m);
        e.cat.comp[a][b].push_back(std::move(m));
      }
  const auto& units = field(j, "units", name);
  for (long a = 0; a < n; ++a) {
    ChainMap u(ChainComplex::unit(), e.cat.hom[a][a]);
    comps_from_json(units.at(a), u);
    e.cat.unit.push_back(std::move(u));
  }
  if (j.contains("degrees")) e.cat.degree = j["degrees"].get<std::vector<int>>();
  return e;
}

json diagram_to_json(const Workspace::DiagramEntry& e) {
  json actions = json::array();
  for (const auto& row : e.dia.action) {
    json r = json::array();
    for (const auto& m : row) r.push_back(comps_to_json(m));
    actions.push_back(std::move(r));
  }
  return json{{"category", e.category}, {"values", e.values},
              {"actions", std::move(actions)}};
}

Workspace::DiagramEntry diagram_from_json(const json& j,
                                          const std::string& name,
                                          const Workspace& w) {
  Workspace::DiagramEntry e;
  e.category = field(j, "category", name).get<std::string>();
  e.dia.shape = w.category_entry(e.category).cat;
  e.values = field(j, "values", name).get<std::vector<std::string>>();
  const long n = e.dia.shape.size();
  if ((long)e.values.size() != n) fail(name + ": one value per object needed");
  for (const auto& v : e.values) e.dia.value.push_back(w.complex(v));
  const auto& actions = field(j, "actions", name);
  e.dia.action.assign(n, std::vector<ChainMap>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      ChainMap m(chainz::tensor(e.dia.shape.hom[a][b], e.dia.value[a]),
                 e.dia.value[b]);
      comps_from_json(actions.at(a).at(b), m);
      e.dia.action[a][b] = std::move(m);
    }
  return e;
}

json transformation_to_json(const Workspace::TransformationEntry& e) {
  json comps = json::array();
  for (const auto& m : e.tr.components) comps.push_back(comps_to_json(m));
  return json{{"source", e.source}, {"target", e.target},
              {"components", std::move(comps)}};
}

Workspace::TransformationEntry transformation_from_json(const json& j,
                                                        const std::string& name,
                                                        const Workspace& w) {
  Workspace::TransformationEntry e;
  e.source = field(j, "source", name).get<std::string>();
  e.target = field(j, "target", name).get<std::string>();
  e.tr.source = w.diagram_entry(e.source).dia;
  e.tr.target = w.diagram_entry(e.target).dia;
  const auto& comps = field(j, "components", name);
  const long n = e.tr.source.shape.size();
  if ((long)comps.size() != n) fail(name + ": one component per object needed");
  for (long c = 0; c < n; ++c) {
    ChainMap m(e.tr.source.value[c], e.tr.target.value[c]);
    comps_from_json(comps.at(c), m);
    e.tr.components.push_back(std::move(m));
  }
  return e;
}

}  // namespace

const ChainComplex& Workspace::complex(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) fail("unknown complex \"" + name + "\"");
  return it->second;
}

const Workspace::CategoryEntry& Workspace::category_entry(
    const std::string& name) const {
  auto it = categories.find(name);
  if (it == categories.end()) fail("unknown category \"" + name + "\"");
  return it->second;
}

const Workspace::DiagramEntry& Workspace::diagram_entry(
    const std::string& name) const {
  auto it = diagrams.find(name);
  if (it == diagrams.end()) fail("unknown diagram \"" + name + "\"");
  return it->second;
}

const Workspace::TransformationEntry& Workspace::transformation_entry(
    const std::string& name) const {
  auto it = transformations.find(name);
  if (it == transformations.end())
    fail("unknown transformation \"" + name + "\"");
  return it->second;
}

std::string Workspace::add_complex(const std::string& hint,
                                   const ChainComplex& c) {
  for (const auto& [k, v] : complexes)
    if (v.same_presentation(c)) return k;
  std::string name = hint;
  for (int i = 2; complexes.count(name); ++i)
    name = hint + "_" + std::to_string(i);
  complexes.emplace(name, c);
  return name;
}

void Workspace::add_category(const std::string& name,
                             const dgcat::DgCategory& c) {
  CategoryEntry e;
  e.cat = c;
  e.hom.resize(c.size());
  for (long a = 0; a < c.size(); ++a)
    for (long b = 0; b < c.size(); ++b)
      e.hom[a].push_back(add_complex(
          name + "_hom_" + c.objects[a] + "_" + c.objects[b], c.hom[a][b]));
  categories[name] = std::move(e);
}

void Workspace::add_diagram(const std::string& name, const std::string& category,
                            const diagram::Diagram& d) {
  DiagramEntry e;
  e.category = category;
  e.dia = d;
  for (long c = 0; c < d.shape.size(); ++c)
    e.values.push_back(add_complex(
        name + "_at_" + d.shape.objects[c], d.value[c]));
  diagrams[name] = std::move(e);
}

void Workspace::add_transformation(const std::string& name,
                                   const std::string& source,
                                   const std::string& target,
                                   const diagram::Transformation& t) {
  transformations[name] = TransformationEntry{source, target, t};
}

json to_json(const Workspace& w) {
  json complexes = json::object();
  for (const auto& [k, v] : w.complexes) complexes[k] = complex_to_json(v);
  json categories = json::object();
  for (const auto& [k, v] : w.categories) categories[k] = category_to_json(k, v);
  json diagrams = json::object();
  for (const auto& [k, v] : w.diagrams) diagrams[k] = diagram_to_json(v);
  json transformations = json::object();
  for (const auto& [k, v] : w.transformations)
    transformations[k] = transformation_to_json(v);
  return json{{"complexes", std::move(complexes)},
              {"categories", std::move(categories)},
              {"diagrams", std::move(diagrams)},
              {"transformations", std::move(transformations)}};
}

Workspace workspace_from_json(const json& j) {
  Workspace w;
  if (j.contains("complexes"))
    for (auto it = j["complexes"].begin(); it != j["complexes"].end(); ++it)
      w.complexes[it.key()] = complex_from_json(it.value(), it.key());
  if (j.contains("categories"))
    for (auto it = j["categories"].begin(); it != j["categories"].end(); ++it)
      w.categories[it.key()] = category_from_json(it.value(), it.key(), w);
  if (j.contains("diagrams"))
    for (auto it = j["diagrams"].begin(); it != j["diagrams"].end(); ++it)
      w.diagrams[it.key()] = diagram_from_json(it.value(), it.key(), w);
  if (j.contains("transformations"))
    for (auto it = j["transformations"].begin();
         it != j["transformations"].end(); ++it)
      w.transformations[it.key()] =
          transformation_from_json(it.value(), it.key(), w);
  return w;
}

std::string serialize(const Workspace& w) { return to_json(w).dump(2) + "\n"; }

Workspace parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("JSON syntax error at byte " + std::to_string(e.byte) + ": " +
         e.what());
  }
  try {
    return workspace_from_json(j);
  } catch (const json::exception& e) {
    fail(std::string("malformed workspace: ") + e.what());
  }
}

Workspace load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse(text);
}

void save_file(const std::string& path, const Workspace& w) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << serialize(w);
}

}  // namespace hocolim::ws
