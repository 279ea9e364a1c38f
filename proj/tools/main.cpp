// Command-line interface: loads system files, runs reliability computations
// and emits text or JSON reports.  Exit codes: 0 success, 2 schema error,
// 3 precondition violation, 4 resource-guard refusal, 1 anything else.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relalg/builders.hpp"
#include "relalg/errors.hpp"
#include "relalg/io.hpp"
#include "relalg/oracle.hpp"
#include "relalg/system.hpp"

namespace {

using nlohmann::ordered_json;
using namespace relalg;

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* to_string(NumeratorSource s) {
  return s == NumeratorSource::taylor ? "taylor" : "mayer-vietoris";
}

struct SystemArgs {
  std::string file;
  int level = 0;
  std::string format = "text";

  CoherentSystem load() const { return load_system_file(file).realize(); }
  bool json() const { return format == "json"; }
};

void add_system_options(CLI::App* cmd, SystemArgs& args) {
  cmd->add_option("--system", args.file, "system definition file (JSON)")->required();
  cmd->add_option("--level", args.level, "system level j")->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void emit(const ordered_json& report, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json states_json(const std::vector<Exponents>& states) {
  ordered_json a = ordered_json::array();
  for (const auto& s : states) a.push_back(s);
  return a;
}

std::string states_text(const std::vector<Exponents>& states, const std::string& label,
                        int level) {
  if (states.empty())
    return "no minimal " + label + " at level " + std::to_string(level) + "\n";
  std::string out;
  for (const auto& s : states) {
    out += "(";
    for (std::size_t i = 0; i < s.size(); ++i)
      out += (i ? "," : "") + std::to_string(s[i]);
    out += ")\n";
  }
  return out;
}

int cmd_compute(const SystemArgs& args, const std::string& route_name) {
  CoherentSystem sys = args.load();
  Route route;
  if (route_name == "auto")
    route = sys.choose_route(args.level);
  else
    route = route_name == "dual" ? Route::dual : Route::primal;

  double r = sys.reliability(args.level, route);
  double u = sys.unreliability(args.level, route);
  const HilbertNumerator& hn = sys.numerator(args.level, route);
  std::size_t primal_gens = sys.level_ideal(args.level).generator_count();
  // The dual generator count is reported when the dual ideal was needed
  // anyway; it is never computed just for the report.
  bool have_dual = route == Route::dual || route_name == "auto";

  ordered_json rep;
  rep["command"] = "compute";
  rep["system"] = args.file;
  rep["kind"] = to_string(sys.kind());
  rep["level"] = args.level;
  rep["route"] = to_string(route);
  rep["reliability"] = r;
  rep["unreliability"] = u;
  rep["primal_generators"] = primal_gens;
  if (have_dual)
    rep["dual_generators"] = sys.boundary_dual_ideal(args.level).generator_count();
  else
    rep["dual_generators"] = nullptr;
  rep["numerator_summands"] = hn.size();
  rep["numerator_source"] = to_string(hn.source);

  std::string text;
  text += "level " + std::to_string(args.level) + " (" + to_string(sys.kind()) + " system, " +
          std::to_string(sys.components()) + " components)\n";
  text += "route: " + std::string(to_string(route)) + "\n";
  text += "reliability: " + fmt6(r) + "\n";
  text += "unreliability: " + fmt6(u) + "\n";
  text += "primal generators: " + std::to_string(primal_gens) + "\n";
  text += "dual generators: " +
          (have_dual ? std::to_string(sys.boundary_dual_ideal(args.level).generator_count())
                     : std::string("not computed")) +
          "\n";
  text += "numerator summands: " + std::to_string(hn.size()) + " (" +
          to_string(hn.source) + ")\n";
  emit(rep, args.json(), text);
  return 0;
}

int cmd_bounds(const SystemArgs& args) {
  CoherentSystem sys = args.load();
  std::vector<BoundRow> rrows = sys.reliability_bounds(args.level);
  std::vector<BoundRow> urows = sys.unreliability_bounds(args.level);
  double gn_path = sys.gn_max_min_path_bound(args.level);
  double gn_cuts = sys.gn_coproduct_min_cuts_bound(args.level);

  auto rows_json = [](const std::vector<BoundRow>& rows) {
    ordered_json a = ordered_json::array();
    for (const auto& row : rows)
      a.push_back({{"t", row.t}, {"value", row.value}, {"kind", to_string(row.kind)}});
    return a;
  };
  ordered_json rep;
  rep["command"] = "bounds";
  rep["system"] = args.file;
  rep["kind"] = to_string(sys.kind());
  rep["level"] = args.level;
  rep["reliability_rows"] = rows_json(rrows);
  rep["unreliability_rows"] = rows_json(urows);
  rep["gn_single_path_lower"] = gn_path;
  rep["gn_cut_product_lower"] = gn_cuts;

  std::string text = "truncation bounds, level " + std::to_string(args.level) + ":\n";
  for (std::size_t i = 0; i < rrows.size(); ++i) {
    text += "  t=" + std::to_string(rrows[i].t) + "  R " + fmt6(rrows[i].value) + " (" +
            to_string(rrows[i].kind) + ")  U " + fmt6(urows[i].value) + " (" +
            to_string(urows[i].kind) + ")\n";
  }
  text += "single-path lower bound on R: " + fmt6(gn_path) + "\n";
  text += "cut-product lower bound on R: " + fmt6(gn_cuts) + "\n";
  emit(rep, args.json(), text);
  return 0;
}

int cmd_states(const SystemArgs& args, bool paths) {
  CoherentSystem sys = args.load();
  std::vector<Exponents> states =
      paths ? sys.minimal_paths(args.level) : sys.minimal_cuts(args.level);
  const char* label = paths ? "paths" : "cuts";
  ordered_json rep;
  rep["command"] = label;
  rep["system"] = args.file;
  rep["level"] = args.level;
  rep["count"] = states.size();
  rep["states"] = states_json(states);
  emit(rep, args.json(), states_text(states, label, args.level));
  return 0;
}

int cmd_oracle(const SystemArgs& args, const std::string& method, std::uint64_t samples,
               std::uint64_t seed, std::uint64_t state_limit) {
  CoherentSystem sys = args.load();
  OracleResult res = method == "mc"
                         ? monte_carlo_probability(sys, args.level, samples, seed)
                         : exhaustive_probability(sys, args.level, state_limit);
  // The oracle measures the level ideal; translate to reliability terms.
  double reliability = sys.kind() == SystemKind::path ? res.value : 1.0 - res.value;

  ordered_json rep;
  rep["command"] = "oracle";
  rep["system"] = args.file;
  rep["level"] = args.level;
  rep["method"] = res.method == OracleMethod::exhaustive ? "exhaustive" : "monte-carlo";
  rep["ideal_probability"] = res.value;
  rep["reliability"] = reliability;
  rep["unreliability"] = 1.0 - reliability;
  std::string text = std::string("method: ") + (res.method == OracleMethod::exhaustive
                                                    ? "exhaustive"
                                                    : "monte-carlo") + "\n";
  if (res.method == OracleMethod::monte_carlo) {
    rep["samples"] = res.samples;
    rep["seed"] = res.seed;
    text += "samples: " + std::to_string(res.samples) + "\n";
    text += "seed: " + std::to_string(res.seed) + "\n";
  }
  text += "reliability: " + fmt6(reliability) + "\n";
  text += "unreliability: " + fmt6(1.0 - reliability) + "\n";
  emit(rep, args.json(), text);
  return 0;
}

struct GenArgs {
  std::string model;
  std::string output;
  std::uint64_t seed = 0;
  int vertices = 0;
  double edge_probability = 0.05;
  int attach = 0;
  int components = 0;
  int levels = 0;
  double component_probability = 0.9;
};

SystemFile gen_network_file(const Graph& g, double p) {
  if (g.edges.empty())
    throw PreconditionError("generated graph has no edges; raise --edge-prob or change --seed");
  SystemFile f;
  f.kind = SystemKind::path;
  f.components = static_cast<int>(g.edges.size());
  f.levels = 1;
  f.component_caps = Exponents(g.edges.size(), 1);
  f.probabilities.assign(g.edges.size(), {p});
  f.builder = BuilderSpec{"network", g, {}};
  return f;
}

int cmd_gen(const GenArgs& args) {
  SystemFile f;
  if (args.model == "er") {
    if (args.vertices < 2) throw PreconditionError("--model er needs --vertices >= 2");
    f = gen_network_file(erdos_renyi(args.vertices, args.edge_probability, args.seed),
                         args.component_probability);
  } else if (args.model == "ba") {
    if (args.vertices < 2 || args.attach < 1)
      throw PreconditionError("--model ba needs --vertices and --attach");
    f = gen_network_file(barabasi_albert(args.vertices, args.attach, args.seed),
                         args.component_probability);
  } else {  // kofn
    if (args.components < 1 || args.levels < 1)
      throw PreconditionError("--model kofn needs --components and --levels");
    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<int> kd(1, args.components);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    f.kind = SystemKind::path;
    f.components = args.components;
    f.levels = args.levels;
    f.component_caps = Exponents(static_cast<std::size_t>(args.components), args.levels);
    // Random threshold vector, then random non-increasing probability rows.
    std::vector<int> thresholds;
    for (int l = 0; l < args.levels; ++l) thresholds.push_back(kd(rng));
    for (int i = 0; i < args.components; ++i) {
      std::vector<double> row(static_cast<std::size_t>(args.levels));
      for (auto& p : row) p = u(rng);
      std::sort(row.begin(), row.end(), std::greater<>());
      f.probabilities.push_back(std::move(row));
    }
    f.builder = BuilderSpec{"kofn", std::nullopt, thresholds};
  }
  save_system_file(f, args.output);
  std::cout << "wrote " << args.output << " (" << f.components << " components, "
            << f.levels << (f.levels == 1 ? " level)" : " levels)") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic reliability of multi-state coherent systems"};
  app.require_subcommand(1);
  int status = 0;

  SystemArgs sys_args;
  std::string route = "auto";
  CLI::App* compute = app.add_subcommand("compute", "reliability at a level");
  add_system_options(compute, sys_args);
  compute->add_option("--route", route, "evaluation route")
      ->check(CLI::IsMember({"auto", "primal", "dual"}));
  compute->callback([&] { status = cmd_compute(sys_args, route); });

  CLI::App* bounds = app.add_subcommand("bounds", "truncation bound table at a level");
  add_system_options(bounds, sys_args);
  bounds->callback([&] { status = cmd_bounds(sys_args); });

  CLI::App* paths = app.add_subcommand("paths", "minimal paths at a level");
  add_system_options(paths, sys_args);
  paths->callback([&] { status = cmd_states(sys_args, true); });

  CLI::App* cuts = app.add_subcommand("cuts", "minimal cuts at a level");
  add_system_options(cuts, sys_args);
  cuts->callback([&] { status = cmd_states(sys_args, false); });

  std::string method = "exhaustive";
  std::uint64_t samples = 1000000, seed = 0, state_limit = 10000000;
  CLI::App* oracle = app.add_subcommand("oracle", "ground-truth probability at a level");
  add_system_options(oracle, sys_args);
  oracle->add_option("--method", method, "oracle engine")
      ->check(CLI::IsMember({"exhaustive", "mc"}));
  oracle->add_option("--samples", samples, "Monte Carlo sample count");
  oracle->add_option("--seed", seed, "Monte Carlo seed");
  oracle->add_option("--state-limit", state_limit, "exhaustive state-space cap");
  oracle->callback([&] { status = cmd_oracle(sys_args, method, samples, seed, state_limit); });

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random system file");
  gen->add_option("--model", gen_args.model, "generator model")
      ->required()
      ->check(CLI::IsMember({"er", "ba", "kofn"}));
  gen->add_option("--seed", gen_args.seed, "generator seed")->required();
  gen->add_option("-o,--output", gen_args.output, "output file")->required();
  gen->add_option("--vertices", gen_args.vertices, "vertex count (er, ba)");
  gen->add_option("--edge-prob", gen_args.edge_probability, "edge probability (er)");
  gen->add_option("--attach", gen_args.attach, "attachments per vertex (ba)");
  gen->add_option("--components", gen_args.components, "component count (kofn)");
  gen->add_option("--levels", gen_args.levels, "level count (kofn)");
  gen->add_option("--component-prob", gen_args.component_probability,
                  "edge reliability for network files");
  gen->callback([&] { status = cmd_gen(gen_args); });

  try {
    app.parse(argc, argv);
    return status;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad flags are input-schema errors
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedRouteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
