#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relalg/builders.hpp"
#include "relalg/system.hpp"

namespace relalg {

// Recipe for the level ideals of a system file that does not list them
// explicitly.  type selects the constructor; graph is used by "network",
// thresholds (k_1..k_M) by "kofn"; "series" and "parallel" take no extras.
struct BuilderSpec {
  std::string type;
  std::optional<Graph> graph;
  std::vector<int> thresholds;

  friend bool operator==(const BuilderSpec&, const BuilderSpec&) = default;
};

// On-disk description of a coherent system.  JSON schema:
//   {
//     "kind": "path" | "cut",
//     "n": <component count>,
//     "levels": <system level count M>,
//     "component_caps": [M_1, ..., M_n],
//     "probabilities": [[p_{1,1}, ..., p_{1,M_1}], ...],
//     "generators": {"1": [[e_1,...,e_n], ...], ..., "M": [...]}
//       XOR
//     "builder": {"type": "series" | "parallel" | "network" | "kofn", ...}
//   }
// Builder extras: network carries {"vertices", "edges": [[u,v],...],
// "source", "terminal"}, kofn carries {"thresholds": [k_1..k_M]}.
struct SystemFile {
  SystemKind kind = SystemKind::path;
  int components = 0;
  int levels = 0;
  Exponents component_caps;
  std::vector<std::vector<double>> probabilities;
  std::map<int, std::vector<Exponents>> generators;  // level -> exponent rows
  std::optional<BuilderSpec> builder;

  // Constructs the described system; throws SchemaError on any
  // inconsistency the parser could not see (builder/shape mismatches).
  CoherentSystem realize() const;

  friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

// Parses and fully validates a system file; SchemaError messages name the
// offending field.
SystemFile parse_system_file(const std::string& json_text);
SystemFile load_system_file(const std::string& path);

std::string serialize_system_file(const SystemFile& file);
void save_system_file(const SystemFile& file, const std::string& path);

}  // namespace relalg
