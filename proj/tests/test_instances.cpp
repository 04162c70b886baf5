#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sfdepth/errors.hpp"
#include "sfdepth/instances.hpp"
#include "sfdepth/json_io.hpp"
#include "sfdepth/prime_graph.hpp"

using namespace sfdepth;

TEST_CASE("corpus instances") {
  SquarefreeIdeal vechi = corpus("vechi");
  CHECK(vechi.s() == 5);
  CHECK(vechi.n() == 10);
  CHECK(vechi.prime(1) == VarSet::range(1, 7));

  SquarefreeIdeal ex3 = corpus("ex3");
  CHECK(ex3.s() == 6);
  CHECK(ex3.n() == 12);
  CHECK(ex3.support() == VarSet::full(12));

  SquarefreeIdeal rp2 = corpus("rp2");
  CHECK(rp2.s() == 10);
  CHECK(rp2.n() == 6);
  for (const VarSet& p : rp2.primes()) CHECK(p.size() == 3);
  CHECK(profile(rp2).size == 2);

  CHECK(corpus("k3join").s() == 3);
  CHECK_THROWS_AS(corpus("nope"), UnknownName);
}

TEST_CASE("graph realization fixtures") {
  GraphSpec one_edge{3, {{2, 3}}};
  SquarefreeIdeal q1 = realize_graph(one_edge, 1);
  CHECK(q1.s() == 3);
  CHECK(q1.n() == 4);  // two deficit blocks + two incomparability fixes
  CHECK(q1.support() == VarSet::full(4));

  SquarefreeIdeal q2 = realize_graph(one_edge, 2);
  CHECK(q2.n() == 6);
  PrimeSumGraph g = build_graph(q2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{2, 3}});
  REQUIRE(g.q().has_value());
  CHECK(*g.q() == 2);

  GraphSpec complete{3, {{1, 2}, {1, 3}, {2, 3}}};
  CHECK_THROWS_AS(realize_graph(complete, 1), UnrealizableGraph);
  GraphSpec lonely{4, {{1, 2}, {1, 3}, {1, 4}}};  // vertex 1 complement-isolated
  CHECK_THROWS_AS(realize_graph(lonely, 1), UnrealizableGraph);
  CHECK_THROWS_AS(realize_graph(GraphSpec{2, {}}, 1), UnrealizableGraph);
}

TEST_CASE("realization round-trip for all graphs up to 6 vertices") {
  for (int s = 3; s <= 6; ++s) {
    int pairs = s * (s - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= s; ++i)
      for (int j = i + 1; j <= s; ++j) all_pairs.emplace_back(i, j);
    for (int pick = 0; pick < (1 << pairs); ++pick) {
      GraphSpec spec{s, {}};
      for (int b = 0; b < pairs; ++b)
        if (pick & (1 << b)) spec.edges.push_back(all_pairs[b]);

      // realizable iff no vertex is complement-isolated
      bool realizable = true;
      for (int v = 1; v <= s && realizable; ++v) {
        int comp_deg = 0;
        for (int u = 1; u <= s; ++u)
          if (u != v && !spec.has_edge(std::min(u, v), std::max(u, v))) ++comp_deg;
        if (comp_deg == 0) realizable = false;
      }
      const std::vector<int> qs = s <= 5 ? std::vector<int>{1, 2, 3} : std::vector<int>{1};
      for (int q : qs) {
        if (!realizable) {
          CHECK_THROWS_AS(realize_graph(spec, q), UnrealizableGraph);
          continue;
        }
        SquarefreeIdeal ideal = realize_graph(spec, q);
        CHECK(ideal.support() == VarSet::full(ideal.n()));
        PrimeSumGraph g = build_graph(ideal);
        auto got_edges = g.edges();
        std::set<std::pair<int, int>> got(got_edges.begin(), got_edges.end());
        std::set<std::pair<int, int>> want(spec.edges.begin(), spec.edges.end());
        CHECK(got == want);
        REQUIRE(g.q().has_value());
        CHECK(*g.q() == q);
        for (const auto& [pair, deficit] : g.deficits) CHECK(deficit.size() == q);
        CHECK(profile(ideal).bigsize == 2);
      }
    }
  }
}

TEST_CASE("concatenation of graph specs") {
  GraphSpec a{3, {{1, 3}}};
  GraphSpec b{3, {{1, 2}}};
  GraphSpec whole = concatenate(a, 3, b, 1);
  CHECK(whole.s == 5);
  // cross pairs between [1..2] and [4..5] must all be edges
  for (int i = 1; i <= 2; ++i)
    for (int j = 4; j <= 5; ++j) CHECK(whole.has_edge(i, j));
  // shared vertex 3 keeps both original adjacencies
  CHECK(whole.has_edge(1, 3));
  CHECK(whole.has_edge(3, 4));
  CHECK_FALSE(whole.has_edge(2, 3));
}

TEST_CASE("seeded generation is deterministic and honors targets") {
  GenSpec spec{8, 4, GenTarget::Bigsize2, 7};
  GenResult a = random_ideal(spec);
  GenResult b = random_ideal(spec);
  CHECK(a.ideal == b.ideal);
  CHECK(a.attempts == b.attempts);
  CHECK(ideal_to_json(a.ideal).dump() == ideal_to_json(b.ideal).dump());
  CHECK(profile(reduce_to_support(a.ideal).ideal).bigsize == 2);

  GenResult join = random_ideal(GenSpec{6, 3, GenTarget::Join, 1});
  CHECK(is_join_graph(build_graph(reduce_to_support(join.ideal).ideal)).has_value());

  GenResult chain = random_ideal(GenSpec{9, 5, GenTarget::Chain, 3});
  SquarefreeIdeal reduced = reduce_to_support(chain.ideal).ideal;
  CHECK(complement_spanning_path(build_graph(reduced)).has_value());

  // impossible target: two incomparable nonempty primes in one variable
  CHECK_THROWS_AS(random_ideal(GenSpec{1, 2, GenTarget::Random, 1}),
                  GenerationExhausted);
}

TEST_CASE("generated instances are valid ideals") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenResult r = random_ideal(GenSpec{7, 3, GenTarget::Random, seed});
    CHECK(r.ideal.s() == 3);
    for (const VarSet& p : r.ideal.primes()) CHECK_FALSE(p.empty());
    SquarefreeIdeal reduced = reduce_to_support(r.ideal).ideal;
    CHECK(reduced.support() == VarSet::full(reduced.n()));
  }
}
