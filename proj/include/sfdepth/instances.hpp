#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfdepth/ideal.hpp"

namespace sfdepth {

// Built-in instances: "vechi" (5 primes, n=10), "ex3" (6 primes, n=12),
// "rp2" (Stanley–Reisner primes of the 6-vertex projective plane), "k3join"
// (three pairwise-covering primes). Throws UnknownName.
SquarefreeIdeal corpus(const std::string& name);
std::vector<std::string> corpus_names();

struct GraphSpec {
  int s = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, i<j

  bool has_edge(int i, int j) const;
};

// Builds an ideal whose prime-sum graph is exactly the given graph with all
// deficits of size q: one disjoint block of q fresh variables per non-edge,
// P_i = everything minus the blocks of non-edges at i, plus one extra variable
// per complement-degree-1 vertex to keep the primes incomparable.
// Throws UnrealizableGraph (complete graph, isolated complement vertex, s<3).
SquarefreeIdeal realize_graph(const GraphSpec& graph, int q);

// Concatenation of two graphs in a shared vertex: block1 = [1..r] (graph a,
// shared vertex r), block2 = {r..r+s_b-1} (graph b relabeled, its vertex
// `shared_b` becoming r), all cross pairs between the non-shared parts edges.
GraphSpec concatenate(const GraphSpec& a, int shared_a, const GraphSpec& b,
                      int shared_b);

enum class GenTarget { Random, Bigsize2, Join, Chain };

struct GenSpec {
  int n = 6;
  int s = 3;
  GenTarget target = GenTarget::Random;
  std::uint64_t seed = 0;
};

struct GenResult {
  SquarefreeIdeal ideal;
  int attempts = 0;
};

// Rejection sampling of s random nonempty primes, normalized and filtered to
// the target (targets except Random apply to the support-reduced ideal).
// Deterministic under the seed; throws GenerationExhausted after the attempt
// cap rather than retargeting.
GenResult random_ideal(const GenSpec& spec);

}  // namespace sfdepth
