#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relalg/ideal.hpp"
#include "relalg/probability.hpp"
#include "relalg/system.hpp"

namespace relalg {

// Series system (works at level j iff every component does): path system
// with level ideals <x1^j * ... * xn^j>.  The system level count is the
// smallest component cap.
CoherentSystem build_series(const ProbabilityTable& table);

// Parallel system described by failures (fails at level j iff every
// component does): cut system with level ideals <x1^j, ..., xn^j>, keeping
// only components whose cap reaches j.  Level count is the largest cap.
CoherentSystem build_parallel(const ProbabilityTable& table);

// Generalized k-out-of-n: all components share levels 0..levels, and the
// system is at level j or better iff at least thresholds[l-1] components are
// at level l or better for some l >= j.
struct KofnSpec {
  int components = 0;
  int levels = 0;
  std::vector<int> thresholds;  // one per level, each in 1..components
};

MonomialIdeal kofn_level_ideal(const KofnSpec& spec, int level);
CoherentSystem build_kofn(const KofnSpec& spec, const ProbabilityTable& table);

// Undirected multigraph; vertices are 0-based, self-loops are rejected.
// Edge indices are the system components.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int source = 0;
  int terminal = 0;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// All minimal source-terminal paths as squarefree monomials over the edges
// (simple-path DFS; visited-vertex pruning keeps every emitted edge set
// minimal).  Refuses to enumerate more than path_guard paths.  A
// disconnected source/terminal pair gives the zero ideal.
MonomialIdeal network_path_ideal(const Graph& g, std::uint64_t path_guard = 100000);

// Two-terminal network as a binary path system (one level).
CoherentSystem build_network(const Graph& g, const ProbabilityTable& table,
                             std::uint64_t path_guard = 100000);

// G(n, p): every unordered pair becomes an edge independently with
// probability p; pairs are scanned in fixed order so the graph is a pure
// function of the seed.  source/terminal default to 0 and n-1.
Graph erdos_renyi(int vertices, double edge_probability, std::uint64_t seed);

// Preferential attachment: seed clique on attach_count + 1 vertices, then
// every new vertex attaches to attach_count distinct targets sampled without
// replacement with probability proportional to current degree.
Graph barabasi_albert(int vertices, int attach_count, std::uint64_t seed);

}  // namespace relalg
