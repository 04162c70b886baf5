#include "sfdepth/json_io.hpp"

#include "sfdepth/errors.hpp"

namespace sfdepth {

Json varset_to_json(const VarSet& set) { return Json(set.members()); }

SquarefreeIdeal parse_ideal_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("primes"))
    throw ParseError("ideal object needs \"n\" and \"primes\"");
  if (!j["n"].is_number_integer())
    throw ParseError("\"n\" must be an integer");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 64) throw ParseError("\"n\" must be in [1,64]");
  if (!j["primes"].is_array() || j["primes"].empty())
    throw ParseError("\"primes\" must be a nonempty array");

  std::vector<VarSet> primes;
  for (const auto& arr : j["primes"]) {
    if (!arr.is_array()) throw ParseError("each prime must be an array of indices");
    VarSet p;
    long long prev = 0;
    for (const auto& e : arr) {
      if (!e.is_number_integer()) throw ParseError("prime entries must be integers");
      long long v = e.get<long long>();
      if (v < 1 || v > n)
        throw ParseError("index " + std::to_string(v) + " outside [1," +
                         std::to_string(n) + "]");
      if (v <= prev)
        throw ParseError("prime entries must be strictly increasing");
      prev = v;
      p = p.with(static_cast<int>(v));
    }
    primes.push_back(p);
  }
  try {
    return SquarefreeIdeal::checked(std::move(primes), static_cast<int>(n));
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(e.what());
  }
}

SquarefreeIdeal parse_ideal_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("not valid JSON");
  return parse_ideal_json(j);
}

Json ideal_to_json(const SquarefreeIdeal& ideal) {
  Json j;
  j["n"] = ideal.n();
  Json primes = Json::array();
  for (const VarSet& p : ideal.primes()) primes.push_back(p.members());
  j["primes"] = primes;
  return j;
}

Json profile_to_json(const IdealProfile& p) {
  Json j;
  j["support"] = p.support.members();
  j["h"] = p.h;
  j["v"] = p.v;
  j["t"] = p.t;
  j["size"] = p.size;
  j["bigsize"] = p.bigsize;
  j["q"] = p.q ? Json(*p.q) : Json(nullptr);
  return j;
}

Json graph_to_json(const PrimeSumGraph& g) {
  Json j;
  j["s"] = g.s;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  Json deficits = Json::array();
  for (const auto& [pair, missing] : g.deficits) {
    Json d;
    d["pair"] = Json::array({pair.first, pair.second});
    d["missing"] = missing.members();
    deficits.push_back(d);
  }
  j["deficits"] = deficits;
  j["q"] = g.q() ? Json(*g.q()) : Json(nullptr);

  auto join = is_join_graph(g);
  j["join"] = join ? Json{{"a", join->block_a}, {"b", join->block_b}} : Json(nullptr);
  j["good_vertices"] = good_vertices(g);
  auto path = complement_spanning_path(g);
  j["complement_path"] = path ? Json(*path) : Json(nullptr);
  auto split = concatenation_split(g);
  j["concatenation"] = split ? Json{{"vertex", split->vertex},
                                    {"block1", split->block1},
                                    {"block2", split->block2}}
                             : Json(nullptr);
  return j;
}

Json verdict_to_json(const DepthVerdict& v) {
  Json j;
  j["applicable"] = v.applicable;
  if (!v.applicable) {
    j["reason"] = v.reason;
    return j;
  }
  j["module_depth"] = v.module_depth;
  j["ideal_depth"] = v.ideal_depth;
  j["free_vars"] = v.free_vars;
  j["reduced_module_depth"] = v.reduced_module_depth;
  Json cert;
  switch (v.cert) {
    case CertKind::Join:
      cert["kind"] = "join";
      if (v.join) {
        cert["a"] = v.join->block_a;
        cert["b"] = v.join->block_b;
      }
      break;
    case CertKind::Chain: {
      cert["kind"] = "chain";
      cert["order"] = v.chain.empty() ? Json(nullptr) : Json(v.chain);
      Json tree = Json::array();
      for (const auto& [a, b] : v.tree) tree.push_back(Json::array({a, b}));
      cert["tree"] = tree;
      break;
    }
    case CertKind::Fallback:
      cert["kind"] = "fallback";
      cert["note"] = v.note;
      break;
    case CertKind::None:
      cert["kind"] = "none";
      if (!v.note.empty()) cert["note"] = v.note;
      break;
  }
  j["certificate"] = cert;
  return j;
}

Json oracle_to_json(const OracleDepth& d) {
  Json j;
  j["module_depth"] = d.module_depth;
  j["ideal_depth"] = d.ideal_depth;
  j["pd"] = d.pd;
  return j;
}

Json betti_to_json(const BettiTable& table) {
  Json j;
  j["field"] = table.field.str();
  j["pd"] = table.projective_dimension();
  j["total"] = table.total();
  Json entries = Json::array();
  for (const BettiEntry& e : table.entries) {
    Json entry;
    entry["i"] = e.i;
    entry["sigma"] = e.sigma.members();
    entry["dim"] = e.dim;
    entries.push_back(entry);
  }
  j["entries"] = entries;
  return j;
}

Json partition_to_json(const IntervalPartition& part) {
  Json out = Json::array();
  for (const Interval& iv : part.intervals) {
    Json j;
    j["u"] = iv.lo.members();
    j["Z"] = iv.hi.members();
    out.push_back(j);
  }
  return out;
}

}  // namespace sfdepth
