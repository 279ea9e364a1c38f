#include "relalg/builders.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "relalg/errors.hpp"

namespace relalg {

CoherentSystem build_series(const ProbabilityTable& table) {
  int n = table.components();
  Exponents caps = table.caps();
  int m = *std::min_element(caps.begin(), caps.end());
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    Exponents e(static_cast<std::size_t>(n), j);
    ideals.emplace_back(n, std::vector<Monomial>{Monomial(std::move(e))});
  }
  return CoherentSystem(SystemKind::path, std::move(caps), std::move(ideals), table);
}

CoherentSystem build_parallel(const ProbabilityTable& table) {
  int n = table.components();
  Exponents caps = table.caps();
  int m = *std::max_element(caps.begin(), caps.end());
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) {
      if (caps[static_cast<std::size_t>(i)] < j) continue;
      Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = j;
      gens.emplace_back(std::move(e));
    }
    ideals.emplace_back(n, std::move(gens));
  }
  return CoherentSystem(SystemKind::cut, std::move(caps), std::move(ideals), table);
}

MonomialIdeal kofn_level_ideal(const KofnSpec& spec, int level) {
  if (spec.components < 1 || spec.levels < 1)
    throw PreconditionError("k-out-of-n spec needs positive component and level counts");
  if (static_cast<int>(spec.thresholds.size()) != spec.levels)
    throw PreconditionError("k-out-of-n spec needs one threshold per level");
  for (int k : spec.thresholds)
    if (k < 1 || k > spec.components)
      throw PreconditionError("k-out-of-n thresholds must lie in 1..n");
  if (level < 1 || level > spec.levels) throw PreconditionError("k-out-of-n level out of range");

  int n = spec.components;
  std::vector<Monomial> gens;
  // One generator per level l >= j and per subset of size k_l: the states
  // with at least k_l components at level l or above.
  for (int l = level; l <= spec.levels; ++l) {
    int k = spec.thresholds[static_cast<std::size_t>(l - 1)];
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Exponents e(static_cast<std::size_t>(n), 0);
      for (int i : idx) e[static_cast<std::size_t>(i)] = l;
      gens.emplace_back(std::move(e));
      // next k-subset in lexicographic order
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < k; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

CoherentSystem build_kofn(const KofnSpec& spec, const ProbabilityTable& table) {
  if (table.components() != spec.components)
    throw PreconditionError("k-out-of-n table has the wrong number of components");
  for (int i = 0; i < table.components(); ++i)
    if (table.cap(i) != spec.levels)
      throw PreconditionError("k-out-of-n components must all have cap equal to the level count");
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(static_cast<std::size_t>(spec.levels));
  for (int j = 1; j <= spec.levels; ++j) ideals.push_back(kofn_level_ideal(spec, j));
  return CoherentSystem(SystemKind::path, table.caps(), std::move(ideals), table);
}

namespace {

void check_graph(const Graph& g) {
  if (g.vertices < 2) throw PreconditionError("graph needs at least two vertices");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
      throw PreconditionError("graph edge endpoint out of range");
    if (u == v) throw PreconditionError("graph has a self-loop");
  }
  if (g.source < 0 || g.source >= g.vertices || g.terminal < 0 || g.terminal >= g.vertices)
    throw PreconditionError("graph source/terminal out of range");
  if (g.source == g.terminal) throw PreconditionError("graph source equals terminal");
}

struct PathSearch {
  const Graph& g;
  std::uint64_t guard;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)
  std::vector<char> visited;
  Exponents edge_use;
  std::vector<Monomial> paths;

  explicit PathSearch(const Graph& graph, std::uint64_t path_guard) : g(graph), guard(path_guard) {
    adj.resize(static_cast<std::size_t>(g.vertices));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
      adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
    }
    visited.assign(static_cast<std::size_t>(g.vertices), 0);
    edge_use.assign(g.edges.size(), 0);
  }

  void dfs(int v) {
    if (v == g.terminal) {
      if (paths.size() == guard)
        throw ResourceLimitError("network path enumeration refused: more than " +
                                 std::to_string(guard) + " simple paths");
      paths.emplace_back(edge_use);
      return;
    }
    visited[static_cast<std::size_t>(v)] = 1;
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      edge_use[static_cast<std::size_t>(e)] = 1;
      dfs(w);
      edge_use[static_cast<std::size_t>(e)] = 0;
    }
    visited[static_cast<std::size_t>(v)] = 0;
  }
};

}  // namespace

MonomialIdeal network_path_ideal(const Graph& g, std::uint64_t path_guard) {
  check_graph(g);
  if (g.edges.empty()) return MonomialIdeal(1);  // no components to speak of
  PathSearch search(g, path_guard);
  search.dfs(g.source);
  // Edge sets of distinct simple s-t paths are incomparable, but minimalize
  // anyway; it is cheap and keeps the canonical order.
  return MonomialIdeal(static_cast<int>(g.edges.size()), std::move(search.paths));
}

CoherentSystem build_network(const Graph& g, const ProbabilityTable& table,
                             std::uint64_t path_guard) {
  if (table.components() != static_cast<int>(g.edges.size()))
    throw PreconditionError("network table needs one row per edge");
  for (int i = 0; i < table.components(); ++i)
    if (table.cap(i) != 1) throw PreconditionError("network components are binary (cap 1)");
  std::vector<MonomialIdeal> ideals{network_path_ideal(g, path_guard)};
  return CoherentSystem(SystemKind::path, table.caps(), std::move(ideals), table);
}

Graph erdos_renyi(int vertices, double edge_probability, std::uint64_t seed) {
  if (vertices < 2) throw PreconditionError("random graph needs at least two vertices");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw PreconditionError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Graph g;
  g.vertices = vertices;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      if (unif(rng) < edge_probability) g.edges.emplace_back(u, v);
  g.source = 0;
  g.terminal = vertices - 1;
  return g;
}

Graph barabasi_albert(int vertices, int attach_count, std::uint64_t seed) {
  if (attach_count < 1) throw PreconditionError("attachment count must be positive");
  if (vertices < attach_count + 1)
    throw PreconditionError("preferential attachment needs at least attach_count + 1 vertices");
  std::mt19937_64 rng(seed);
  Graph g;
  g.vertices = vertices;
  // Seed clique on the first attach_count + 1 vertices.
  for (int u = 0; u <= attach_count; ++u)
    for (int v = u + 1; v <= attach_count; ++v) g.edges.emplace_back(u, v);
  // repertoire holds every vertex once per unit of degree
  std::vector<int> repertoire;
  for (const auto& [u, v] : g.edges) {
    repertoire.push_back(u);
    repertoire.push_back(v);
  }
  for (int w = attach_count + 1; w < vertices; ++w) {
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < attach_count) {
      std::uniform_int_distribution<std::size_t> pick(0, repertoire.size() - 1);
      int candidate = repertoire[pick(rng)];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
        targets.push_back(candidate);
    }
    for (int t : targets) {
      g.edges.emplace_back(t, w);
      repertoire.push_back(t);
      repertoire.push_back(w);
    }
  }
  g.source = 0;
  g.terminal = vertices - 1;
  return g;
}

}  // namespace relalg
