#include "relalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "relalg/errors.hpp"

namespace relalg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw SchemaError("system file: " + message); }

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail("field '" + where + "' must be an integer");
  return value.get<int>();
}

int positive_field(const json& obj, const char* name) {
  int v = int_field(field(obj, name), name);
  if (v < 1) fail("field '" + std::string(name) + "' must be positive");
  return v;
}

SystemKind parse_kind(const json& value) {
  if (!value.is_string()) fail("field 'kind' must be a string");
  std::string s = value.get<std::string>();
  if (s == "path") return SystemKind::path;
  if (s == "cut") return SystemKind::cut;
  fail("field 'kind' must be \"path\" or \"cut\", got \"" + s + "\"");
}

Exponents parse_caps(const json& value, int n) {
  if (!value.is_array() || static_cast<int>(value.size()) != n)
    fail("field 'component_caps' must be an array of " + std::to_string(n) + " integers");
  Exponents caps;
  caps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int cap = int_field(value[static_cast<std::size_t>(i)],
                        "component_caps[" + std::to_string(i) + "]");
    if (cap < 1) fail("component_caps[" + std::to_string(i) + "] must be at least 1");
    caps.push_back(cap);
  }
  return caps;
}

std::vector<std::vector<double>> parse_probabilities(const json& value, const Exponents& caps) {
  int n = static_cast<int>(caps.size());
  if (!value.is_array() || static_cast<int>(value.size()) != n)
    fail("field 'probabilities' must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const json& row = value[static_cast<std::size_t>(i)];
    int cap = caps[static_cast<std::size_t>(i)];
    std::string where = "probabilities[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cap)
      fail(where + " must have " + std::to_string(cap) + " entries (the component cap)");
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(cap));
    for (int l = 0; l < cap; ++l) {
      const json& cell = row[static_cast<std::size_t>(l)];
      if (!cell.is_number()) fail(where + "[" + std::to_string(l) + "] must be a number");
      double p = cell.get<double>();
      if (p < 0.0 || p > 1.0)
        fail(where + "[" + std::to_string(l) + "] must lie in [0,1]");
      if (l > 0 && p > r.back())
        fail(where + " must be non-increasing (entry " + std::to_string(l) + " rises)");
      r.push_back(p);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::map<int, std::vector<Exponents>> parse_generators(const json& value, int levels,
                                                       const Exponents& caps) {
  if (!value.is_object()) fail("field 'generators' must map level keys to generator lists");
  int n = static_cast<int>(caps.size());
  for (auto it = value.begin(); it != value.end(); ++it) {
    int level = 0;
    try {
      std::size_t pos = 0;
      level = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) level = 0;
    } catch (const std::exception&) {
      level = 0;
    }
    if (level < 1 || level > levels)
      fail("generators key '" + it.key() + "' is not a level in 1.." + std::to_string(levels));
  }
  std::map<int, std::vector<Exponents>> out;
  for (int j = 1; j <= levels; ++j) {
    auto it = value.find(std::to_string(j));
    if (it == value.end())
      fail("generators is missing level '" + std::to_string(j) + "'");
    std::string where = "generators[\"" + std::to_string(j) + "\"]";
    if (!it->is_array()) fail(where + " must be an array of exponent vectors");
    std::vector<Exponents> gens;
    for (std::size_t g = 0; g < it->size(); ++g) {
      const json& vec = (*it)[g];
      std::string gwhere = where + "[" + std::to_string(g) + "]";
      if (!vec.is_array() || static_cast<int>(vec.size()) != n)
        fail(gwhere + " must have " + std::to_string(n) + " exponents");
      Exponents e;
      e.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int exp = int_field(vec[static_cast<std::size_t>(i)],
                            gwhere + "[" + std::to_string(i) + "]");
        if (exp < 0) fail(gwhere + "[" + std::to_string(i) + "] must be non-negative");
        if (exp > caps[static_cast<std::size_t>(i)])
          fail(gwhere + "[" + std::to_string(i) + "] exceeds the component cap");
        e.push_back(exp);
      }
      gens.push_back(std::move(e));
    }
    out.emplace(j, std::move(gens));
  }
  return out;
}

Graph parse_graph(const json& obj) {
  Graph g;
  g.vertices = positive_field(obj, "vertices");
  const json& edges = field(obj, "edges");
  if (!edges.is_array()) fail("builder field 'edges' must be an array of [u,v] pairs");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const json& pair = edges[e];
    std::string where = "edges[" + std::to_string(e) + "]";
    if (!pair.is_array() || pair.size() != 2) fail("builder " + where + " must be a [u,v] pair");
    int u = int_field(pair[0], where + "[0]");
    int v = int_field(pair[1], where + "[1]");
    if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
      fail("builder " + where + " endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  g.source = int_field(field(obj, "source"), "source");
  g.terminal = int_field(field(obj, "terminal"), "terminal");
  if (g.source < 0 || g.source >= g.vertices || g.terminal < 0 || g.terminal >= g.vertices)
    fail("builder source/terminal out of range");
  return g;
}

BuilderSpec parse_builder(const json& value, const SystemFile& f) {
  if (!value.is_object()) fail("field 'builder' must be an object");
  const json& type = field(value, "type");
  if (!type.is_string()) fail("builder field 'type' must be a string");
  BuilderSpec spec;
  spec.type = type.get<std::string>();
  const Exponents& caps = f.component_caps;
  if (spec.type == "series") {
    if (f.kind != SystemKind::path) fail("series builder requires kind \"path\"");
    int m = *std::min_element(caps.begin(), caps.end());
    if (f.levels != m) fail("series builder requires levels == smallest component cap");
  } else if (spec.type == "parallel") {
    if (f.kind != SystemKind::cut) fail("parallel builder requires kind \"cut\"");
    int m = *std::max_element(caps.begin(), caps.end());
    if (f.levels != m) fail("parallel builder requires levels == largest component cap");
  } else if (spec.type == "network") {
    if (f.kind != SystemKind::path) fail("network builder requires kind \"path\"");
    if (f.levels != 1) fail("network builder requires levels == 1");
    spec.graph = parse_graph(value);
    if (static_cast<int>(spec.graph->edges.size()) != f.components)
      fail("network builder needs n == number of edges");
    for (int cap : caps)
      if (cap != 1) fail("network builder requires all component caps == 1");
  } else if (spec.type == "kofn") {
    if (f.kind != SystemKind::path) fail("kofn builder requires kind \"path\"");
    for (int cap : caps)
      if (cap != f.levels) fail("kofn builder requires all component caps == levels");
    const json& ks = field(value, "thresholds");
    if (!ks.is_array() || static_cast<int>(ks.size()) != f.levels)
      fail("builder field 'thresholds' must be an array of " + std::to_string(f.levels) +
           " integers");
    for (std::size_t l = 0; l < ks.size(); ++l) {
      int k = int_field(ks[l], "thresholds[" + std::to_string(l) + "]");
      if (k < 1 || k > f.components)
        fail("builder thresholds[" + std::to_string(l) + "] must lie in 1..n");
      spec.thresholds.push_back(k);
    }
  } else {
    fail("builder type \"" + spec.type +
         "\" is not one of series, parallel, network, kofn");
  }
  return spec;
}

}  // namespace

SystemFile parse_system_file(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");

  SystemFile f;
  f.kind = parse_kind(field(root, "kind"));
  f.components = positive_field(root, "n");
  f.levels = positive_field(root, "levels");
  f.component_caps = parse_caps(field(root, "component_caps"), f.components);
  f.probabilities = parse_probabilities(field(root, "probabilities"), f.component_caps);

  bool has_gens = root.contains("generators");
  bool has_builder = root.contains("builder");
  if (has_gens == has_builder)
    fail("exactly one of 'generators' and 'builder' must be present");
  if (has_gens) f.generators = parse_generators(root["generators"], f.levels, f.component_caps);
  if (has_builder) f.builder = parse_builder(root["builder"], f);
  return f;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("system file: cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_system_file(text.str());
}

CoherentSystem SystemFile::realize() const {
  ProbabilityTable table(probabilities);
  if (builder) {
    if (builder->type == "series") return build_series(table);
    if (builder->type == "parallel") return build_parallel(table);
    if (builder->type == "network") return build_network(*builder->graph, table);
    if (builder->type == "kofn")
      return build_kofn(KofnSpec{components, levels, builder->thresholds}, table);
    throw SchemaError("system file: unknown builder type \"" + builder->type + "\"");
  }
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(static_cast<std::size_t>(levels));
  for (int j = 1; j <= levels; ++j) {
    auto it = generators.find(j);
    if (it == generators.end())
      throw SchemaError("system file: generators is missing level '" + std::to_string(j) + "'");
    std::vector<Monomial> gens;
    gens.reserve(it->second.size());
    for (const Exponents& e : it->second) gens.emplace_back(e);
    ideals.emplace_back(components, std::move(gens));
  }
  return CoherentSystem(kind, component_caps, std::move(ideals), table);
}

std::string serialize_system_file(const SystemFile& file) {
  ordered_json root;
  root["kind"] = to_string(file.kind);
  root["n"] = file.components;
  root["levels"] = file.levels;
  root["component_caps"] = file.component_caps;
  root["probabilities"] = file.probabilities;
  if (file.builder) {
    ordered_json b;
    b["type"] = file.builder->type;
    if (file.builder->graph) {
      const Graph& g = *file.builder->graph;
      b["vertices"] = g.vertices;
      ordered_json edges = ordered_json::array();
      for (const auto& [u, v] : g.edges) edges.push_back({u, v});
      b["edges"] = std::move(edges);
      b["source"] = g.source;
      b["terminal"] = g.terminal;
    }
    if (!file.builder->thresholds.empty()) b["thresholds"] = file.builder->thresholds;
    root["builder"] = std::move(b);
  } else {
    ordered_json gens = ordered_json::object();
    for (const auto& [level, rows] : file.generators) gens[std::to_string(level)] = rows;
    root["generators"] = std::move(gens);
  }
  return root.dump(2) + "\n";
}

void save_system_file(const SystemFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("system file: cannot write '" + path + "'");
  out << serialize_system_file(file);
  if (!out) throw Error("system file: write to '" + path + "' failed");
}

}  // namespace relalg
