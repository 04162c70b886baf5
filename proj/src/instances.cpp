#include "sfdepth/instances.hpp"

#include <algorithm>
#include <random>

#include "sfdepth/errors.hpp"
#include "sfdepth/prime_graph.hpp"

namespace sfdepth {

std::vector<std::string> corpus_names() { return {"vechi", "ex3", "rp2", "k3join"}; }

SquarefreeIdeal corpus(const std::string& name) {
  if (name == "vechi") {
    return SquarefreeIdeal::checked(
        {
            VarSet::range(1, 7),
            VarSet::range(3, 8),
            VarSet::of({1, 2, 3, 4, 8, 9, 10}),
            VarSet::of({1, 2, 5, 8, 9, 10}),
            VarSet::range(5, 10),
        },
        10);
  }
  if (name == "ex3") {
    return SquarefreeIdeal::checked(
        {
            VarSet::of({1, 4, 5, 6, 9, 10, 11, 12}),
            VarSet::of({1, 4, 5, 6, 7, 8, 9, 10}),
            VarSet::of({1, 2, 3, 7, 8, 9, 10, 11, 12}),
            VarSet::of({1, 2, 3, 6, 7, 8, 11, 12}),
            VarSet::range(1, 8),
            VarSet::of({2, 3, 4, 5, 6, 9, 10, 11, 12}),
        },
        12);
  }
  if (name == "rp2") {
    // Complements of the 10 triangles of the 6-vertex triangulation of the
    // projective plane (facets 125,126,134,136,145,234,235,246,356,456).
    return SquarefreeIdeal::checked(
        {
            VarSet::of({3, 4, 6}),
            VarSet::of({3, 4, 5}),
            VarSet::of({2, 5, 6}),
            VarSet::of({2, 4, 5}),
            VarSet::of({2, 3, 6}),
            VarSet::of({1, 5, 6}),
            VarSet::of({1, 4, 6}),
            VarSet::of({1, 3, 5}),
            VarSet::of({1, 2, 4}),
            VarSet::of({1, 2, 3}),
        },
        6);
  }
  if (name == "k3join") {
    return SquarefreeIdeal::checked(
        {
            VarSet::of({1, 2, 3, 4}),
            VarSet::of({3, 4, 5, 6}),
            VarSet::of({1, 2, 5, 6}),
        },
        6);
  }
  throw UnknownName("unknown corpus instance: " + name);
}

bool GraphSpec::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
}

SquarefreeIdeal realize_graph(const GraphSpec& graph, int q) {
  const int s = graph.s;
  if (s < 3) throw UnrealizableGraph("need at least 3 vertices, got " + std::to_string(s));
  if (q < 1) throw UnrealizableGraph("deficit size q must be >= 1, got " + std::to_string(q));
  for (const auto& [i, j] : graph.edges)
    if (i < 1 || j <= i || j > s)
      throw UnrealizableGraph("edge {" + std::to_string(i) + "," + std::to_string(j) +
                              "} outside the vertex range");

  std::vector<std::pair<int, int>> nonedges;
  std::vector<int> comp_degree(s + 1, 0);
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (!graph.has_edge(i, j)) {
        nonedges.emplace_back(i, j);
        ++comp_degree[i];
        ++comp_degree[j];
      }
  for (int i = 1; i <= s; ++i)
    if (comp_degree[i] == 0)
      throw UnrealizableGraph("vertex " + std::to_string(i) +
                              " is isolated in the complement (its prime would be redundant)");

  // One block of q variables per non-edge, in lexicographic non-edge order.
  // A vertex with a single complement neighbor would make its neighbor's
  // prime contain its own; one extra variable excluded only from that
  // vertex's prime restores incomparability without touching the deficits.
  const int blocks_end = q * static_cast<int>(nonedges.size());
  std::vector<int> extra_var(s + 1, 0);
  int n = blocks_end;
  for (int i = 1; i <= s; ++i)
    if (comp_degree[i] == 1) extra_var[i] = ++n;
  if (n > 64)
    throw UnrealizableGraph("realization needs " + std::to_string(n) +
                            " variables, above the 64-variable cap");

  std::vector<VarSet> primes(s);
  VarSet everything = VarSet::full(n);
  for (int i = 1; i <= s; ++i) {
    VarSet p = everything;
    for (std::size_t k = 0; k < nonedges.size(); ++k) {
      if (nonedges[k].first == i || nonedges[k].second == i) {
        VarSet block = VarSet::range(static_cast<int>(k) * q + 1,
                                     static_cast<int>(k) * q + q);
        p = p.minus(block);
      }
    }
    if (extra_var[i]) p = p.without(extra_var[i]);
    primes[i - 1] = p;
  }
  return SquarefreeIdeal::checked(std::move(primes), n);
}

GraphSpec concatenate(const GraphSpec& a, int shared_a, const GraphSpec& b,
                      int shared_b) {
  if (shared_a < 1 || shared_a > a.s || shared_b < 1 || shared_b > b.s)
    throw PreconditionViolated("shared vertex outside its graph");

  // Non-shared vertices of `a` take 1..a.s-1 in order, the shared vertex
  // becomes r = a.s, non-shared vertices of `b` take r+1..s in order.
  const int r = a.s;
  const int s = a.s + b.s - 1;
  auto map_a = [&](int v) { return v == shared_a ? r : (v < shared_a ? v : v - 1); };
  int next = r;
  std::vector<int> map_b(b.s + 1, 0);
  map_b[shared_b] = r;
  for (int v = 1; v <= b.s; ++v)
    if (v != shared_b) map_b[v] = ++next;

  GraphSpec out;
  out.s = s;
  auto add = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    if (!out.has_edge(i, j)) out.edges.emplace_back(i, j);
  };
  for (const auto& [i, j] : a.edges) add(map_a(i), map_a(j));
  for (const auto& [i, j] : b.edges) add(map_b[i], map_b[j]);
  for (int i = 1; i < r; ++i)
    for (int j = r + 1; j <= s; ++j) add(i, j);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

GenResult random_ideal(const GenSpec& spec) {
  if (spec.n < 1 || spec.n > 16)
    throw PreconditionViolated("generator ambient n must be in [1,16]");
  if (spec.s < 1)
    throw PreconditionViolated("generator prime count must be >= 1");

  std::mt19937_64 eng(spec.seed);
  const std::uint64_t all = VarSet::full(spec.n).mask;
  constexpr int kAttemptCap = 20000;

  for (int attempt = 1; attempt <= kAttemptCap; ++attempt) {
    std::vector<VarSet> raw;
    raw.reserve(spec.s);
    for (int k = 0; k < spec.s; ++k) {
      std::uint64_t mask = 0;
      while (mask == 0) mask = eng() & all;
      raw.emplace_back(mask);
    }

    SquarefreeIdeal candidate = [&]() -> SquarefreeIdeal {
      return SquarefreeIdeal::normalize(std::move(raw), spec.n);
    }();
    if (candidate.s() != spec.s) continue;

    if (spec.target == GenTarget::Random)
      return GenResult{candidate, attempt};

    SquarefreeIdeal reduced = reduce_to_support(candidate).ideal;
    if (reduced.s() < 2) continue;
    switch (spec.target) {
      case GenTarget::Bigsize2:
        if (profile(reduced).bigsize == 2) return GenResult{candidate, attempt};
        break;
      case GenTarget::Join:
        if (is_join_graph(build_graph(reduced))) return GenResult{candidate, attempt};
        break;
      case GenTarget::Chain:
        if (complement_spanning_path(build_graph(reduced)))
          return GenResult{candidate, attempt};
        break;
      default:
        break;
    }
  }
  throw GenerationExhausted("no instance matching the target after " +
                            std::to_string(kAttemptCap) + " attempts");
}

}  // namespace sfdepth
