#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfdepth/ideal.hpp"

namespace sfdepth {

// Graph on the prime indices [1..s]: {i,j} is an edge iff P_i + P_j spans the
// whole support. Each non-edge carries its deficit, the support variables
// missing from P_i ∪ P_j.
struct PrimeSumGraph {
  int s = 0;
  std::vector<std::uint64_t> adj;  // adj[i] = neighbor mask of vertex i+1 (bit j-1)
  std::map<std::pair<int, int>, VarSet> deficits;  // non-edges (i<j)

  bool edge(int i, int j) const { return (adj[i - 1] >> (j - 1)) & 1ull; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  // Min deficit size over non-edges; absent iff the graph is complete.
  std::optional<int> q() const;
};

PrimeSumGraph build_graph(const SquarefreeIdeal& ideal);

struct JoinSplit {
  std::vector<int> block_a;  // complement component containing vertex 1
  std::vector<int> block_b;
};

// A split (A,B) with every cross pair an edge, iff the complement of the graph
// is disconnected.
std::optional<JoinSplit> is_join_graph(const PrimeSumGraph& g);

// Vertices whose neighbors are pairwise adjacent. The triangle property holds
// iff nonempty.
std::vector<int> good_vertices(const PrimeSumGraph& g);

// Vertex order v_1..v_s whose consecutive pairs are exactly the complement's
// edges, if the complement is a spanning path. Of the two orientations,
// returns the one placing vertex 1 earliest (ties broken by vertex 2, ...).
std::optional<std::vector<int>> complement_spanning_path(const PrimeSumGraph& g);

// Sorted complement edge list when the complement is a spanning tree, i.e.
// when the graph is an iterated concatenation of 2-vertex edgeless graphs
// (the complement of a concatenation is the wedge of the parts' complements
// at the shared vertex).
std::optional<std::vector<std::pair<int, int>>> complement_spanning_tree(
    const PrimeSumGraph& g);

struct ConcatSplit {
  int vertex = 0;              // shared vertex v (least possible)
  std::vector<int> block1;     // contains the least non-shared vertex, includes v
  std::vector<int> block2;     // rest, includes v
};

// Split witnessing the graph as a concatenation: complement minus v is
// disconnected and all pairs across the blocks (v excluded) are edges.
std::optional<ConcatSplit> concatenation_split(const PrimeSumGraph& g);

enum class CertKind { None, Join, Chain, Fallback };

struct DepthVerdict {
  bool applicable = true;
  std::string reason;      // set when not applicable
  int module_depth = 0;    // depth of S/I, free variables included
  int ideal_depth = 0;     // module_depth + 1
  int free_vars = 0;
  int reduced_module_depth = 0;  // module_depth - free_vars
  CertKind cert = CertKind::None;
  std::optional<JoinSplit> join;
  std::vector<int> chain;       // complement path order, when the tree is a path
  std::vector<std::pair<int, int>> tree;  // complement tree edges (Chain cert)
  std::string note;             // fallback witness / explanation
};

// Depth read off the graph: the support-reduced module depth is
//   0                 if s = 1,
//   1                 if bigsize(reduced) ≤ 1 or the graph is a join graph,
//   1 + q             if q > 1 and the complement is a spanning tree,
//   2                 otherwise,
// valid only for bigsize(reduced) ≤ 2; larger bigsize yields applicable=false.
// Free variables add n - |support| to the module depth.
DepthVerdict depth_by_theorem(const SquarefreeIdeal& ideal);

// Ideal depth 2 + min(deficit sizes) + free adjustment for s=3 families whose
// only covering pair is {2,3}. Throws PreconditionViolated otherwise.
int three_prime_formula(const SquarefreeIdeal& ideal);

// Deterministic DOT rendering; non-edges drawn dashed with their deficit when
// show_deficits is set.
std::string export_dot(const PrimeSumGraph& g, bool show_deficits = true);

}  // namespace sfdepth
