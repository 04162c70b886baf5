#include "sfdepth/prime_graph.hpp"

#include <algorithm>
#include <sstream>

#include "sfdepth/errors.hpp"

namespace sfdepth {

namespace {

constexpr std::uint64_t bit(int v) { return 1ull << (v - 1); }

// Connected components of the graph given by neighbor masks, restricted to
// the vertex mask `universe`. Returns component masks sorted by least vertex.
std::vector<std::uint64_t> components(const std::vector<std::uint64_t>& nbr,
                                      std::uint64_t universe) {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  for (std::uint64_t rest = universe; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest) + 1;
    if (seen & bit(v)) continue;
    std::uint64_t comp = bit(v);
    std::uint64_t frontier = comp;
    while (frontier) {
      int u = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      std::uint64_t nb = nbr[u - 1] & universe & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<std::uint64_t> complement_adj(const PrimeSumGraph& g) {
  std::uint64_t all = g.s >= 64 ? ~0ull : (1ull << g.s) - 1;
  std::vector<std::uint64_t> comp(g.s);
  for (int i = 0; i < g.s; ++i) comp[i] = all & ~g.adj[i] & ~bit(i + 1);
  return comp;
}

}  // namespace

std::vector<std::pair<int, int>> PrimeSumGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

int PrimeSumGraph::edge_count() const {
  int c = 0;
  for (int i = 0; i < s; ++i) c += std::popcount(adj[i]);
  return c / 2;
}

std::optional<int> PrimeSumGraph::q() const {
  std::optional<int> best;
  for (const auto& [pair, deficit] : deficits)
    if (!best || deficit.size() < *best) best = deficit.size();
  return best;
}

PrimeSumGraph build_graph(const SquarefreeIdeal& ideal) {
  PrimeSumGraph g;
  g.s = ideal.s();
  g.adj.assign(g.s, 0);
  VarSet support = ideal.support();
  for (int i = 1; i <= g.s; ++i)
    for (int j = i + 1; j <= g.s; ++j) {
      VarSet u = ideal.prime(i) | ideal.prime(j);
      if (u == support) {
        g.adj[i - 1] |= bit(j);
        g.adj[j - 1] |= bit(i);
      } else {
        g.deficits[{i, j}] = support.minus(u);
      }
    }
  return g;
}

std::optional<JoinSplit> is_join_graph(const PrimeSumGraph& g) {
  std::uint64_t all = (1ull << g.s) - 1;
  auto comps = components(complement_adj(g), all);
  if (comps.size() < 2) return std::nullopt;
  std::uint64_t a = 0;
  for (std::uint64_t c : comps)
    if (c & bit(1)) a = c;
  JoinSplit split;
  split.block_a = mask_to_vertices(a);
  split.block_b = mask_to_vertices(all & ~a);
  return split;
}

std::vector<int> good_vertices(const PrimeSumGraph& g) {
  std::vector<int> out;
  for (int i = 1; i <= g.s; ++i) {
    std::uint64_t nb = g.adj[i - 1];
    bool good = true;
    for (std::uint64_t m = nb; m && good; m &= m - 1) {
      int j = std::countr_zero(m) + 1;
      // Every other neighbor of i must be adjacent to j.
      if (nb & ~g.adj[j - 1] & ~bit(j)) good = false;
    }
    if (good) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<int>> complement_spanning_path(const PrimeSumGraph& g) {
  const int s = g.s;
  if (s < 2) return std::nullopt;
  auto comp = complement_adj(g);

  int edge_total = 0;
  std::vector<int> deg(s);
  std::vector<int> ends;
  for (int i = 0; i < s; ++i) {
    deg[i] = std::popcount(comp[i]);
    edge_total += deg[i];
    if (deg[i] == 1) ends.push_back(i + 1);
    else if (deg[i] != 2) return std::nullopt;
  }
  if (edge_total != 2 * (s - 1) || ends.size() != 2) return std::nullopt;

  auto walk = [&](int start) {
    std::vector<int> order{start};
    std::uint64_t visited = bit(start);
    int cur = start;
    while (true) {
      std::uint64_t next = comp[cur - 1] & ~visited;
      if (!next) break;
      cur = std::countr_zero(next) + 1;
      visited |= bit(cur);
      order.push_back(cur);
    }
    return order;
  };

  std::vector<int> fwd = walk(ends[0]);
  if (static_cast<int>(fwd.size()) != s) return std::nullopt;  // disconnected
  std::vector<int> rev(fwd.rbegin(), fwd.rend());

  // Orientation whose position vector (position of vertex 1, of vertex 2, ...)
  // is lexicographically least.
  std::vector<int> pos_f(s + 1), pos_r(s + 1);
  for (int k = 0; k < s; ++k) {
    pos_f[fwd[k]] = k;
    pos_r[rev[k]] = k;
  }
  for (int v = 1; v <= s; ++v) {
    if (pos_f[v] < pos_r[v]) return fwd;
    if (pos_r[v] < pos_f[v]) return rev;
  }
  return fwd;
}

std::optional<std::vector<std::pair<int, int>>> complement_spanning_tree(
    const PrimeSumGraph& g) {
  const int s = g.s;
  if (s < 2) return std::nullopt;
  auto comp = complement_adj(g);
  std::uint64_t all = (1ull << s) - 1;
  int edge_total = 0;
  for (int i = 0; i < s; ++i) edge_total += std::popcount(comp[i]);
  if (edge_total != 2 * (s - 1)) return std::nullopt;
  if (components(comp, all).size() != 1) return std::nullopt;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (comp[i - 1] & bit(j)) edges.emplace_back(i, j);
  return edges;
}

std::optional<ConcatSplit> concatenation_split(const PrimeSumGraph& g) {
  const int s = g.s;
  if (s < 3) return std::nullopt;
  auto comp = complement_adj(g);
  std::uint64_t all = (1ull << s) - 1;
  for (int v = 1; v <= s; ++v) {
    auto comps = components(comp, all & ~bit(v));
    if (comps.size() < 2) continue;
    ConcatSplit split;
    split.vertex = v;
    std::uint64_t first = comps[0];  // components are sorted by least vertex
    split.block1 = mask_to_vertices(first | bit(v));
    split.block2 = mask_to_vertices((all & ~first) | bit(v));
    return split;
  }
  return std::nullopt;
}

DepthVerdict depth_by_theorem(const SquarefreeIdeal& ideal) {
  DepthVerdict verdict;
  const int free = ideal.free_vars();
  verdict.free_vars = free;

  if (ideal.s() == 1) {
    verdict.reduced_module_depth = 0;
    verdict.module_depth = free;
    verdict.ideal_depth = free + 1;
    verdict.cert = CertKind::None;
    verdict.note = "single prime: S/I is a polynomial ring over the quotient field";
    return verdict;
  }

  IdealProfile prof = profile(ideal);
  const int reduced_bigsize = prof.t - 1;
  PrimeSumGraph g = build_graph(ideal);

  if (reduced_bigsize <= 1) {
    // Every pair of primes covers the support: the graph is complete.
    verdict.reduced_module_depth = 1;
    verdict.cert = CertKind::Join;
    verdict.join = is_join_graph(g);
  } else if (reduced_bigsize == 2) {
    auto join = is_join_graph(g);
    std::optional<int> q = g.q();
    if (join) {
      verdict.reduced_module_depth = 1;
      verdict.cert = CertKind::Join;
      verdict.join = join;
    } else if (q && *q > 1) {
      auto tree = complement_spanning_tree(g);
      if (tree) {
        verdict.reduced_module_depth = 1 + *q;
        verdict.cert = CertKind::Chain;
        verdict.tree = *tree;
        if (auto path = complement_spanning_path(g)) verdict.chain = *path;
      } else {
        verdict.reduced_module_depth = 2;
        verdict.cert = CertKind::Fallback;
        verdict.note = "complement connected and not a spanning tree";
      }
    } else {
      verdict.reduced_module_depth = 2;
      verdict.cert = CertKind::Fallback;
      verdict.note = "complement connected; q=1 merges the 1+q and 2 cases";
    }
  } else {
    verdict.applicable = false;
    verdict.reason = "bigsize=" + std::to_string(reduced_bigsize);
    verdict.module_depth = -1;
    verdict.ideal_depth = -1;
    verdict.reduced_module_depth = -1;
    return verdict;
  }

  verdict.module_depth = verdict.reduced_module_depth + free;
  verdict.ideal_depth = verdict.module_depth + 1;
  return verdict;
}

int three_prime_formula(const SquarefreeIdeal& ideal) {
  if (ideal.s() != 3)
    throw PreconditionViolated("three_prime_formula needs exactly 3 primes, got " +
                               std::to_string(ideal.s()));
  VarSet support = ideal.support();
  VarSet u23 = ideal.prime(2) | ideal.prime(3);
  VarSet u12 = ideal.prime(1) | ideal.prime(2);
  VarSet u13 = ideal.prime(1) | ideal.prime(3);
  if (u23 != support)
    throw PreconditionViolated("P2+P3 does not span the support");
  if (u12 == support || u13 == support)
    throw PreconditionViolated("P1+P2 and P1+P3 must both be proper");
  int d12 = ideal.n() - u12.size();
  int d13 = ideal.n() - u13.size();
  return 2 + std::min(d12, d13);
}

std::string export_dot(const PrimeSumGraph& g, bool show_deficits) {
  std::ostringstream os;
  os << "graph prime_sum {\n";
  for (int i = 1; i <= g.s; ++i) os << "  " << i << ";\n";
  for (const auto& [i, j] : g.edges())
    os << "  " << i << " -- " << j << ";\n";
  if (show_deficits)
    for (const auto& [pair, deficit] : g.deficits)
      os << "  " << pair.first << " -- " << pair.second
         << " [style=dashed, label=\"" << deficit.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sfdepth
