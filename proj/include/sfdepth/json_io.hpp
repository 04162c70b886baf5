#pragma once

#include <string>

#include <json.hpp>

#include "sfdepth/betti.hpp"
#include "sfdepth/ideal.hpp"
#include "sfdepth/prime_graph.hpp"
#include "sfdepth/sdepth.hpp"

namespace sfdepth {

using Json = nlohmann::ordered_json;

// Ideal wire format: {"n": <int>, "primes": [[<int>...], ...]} with 1-based
// strictly increasing inner lists. Rejects duplicates, out-of-range indices,
// empty primes and comparable primes (ParseError); prime order is preserved.
SquarefreeIdeal parse_ideal_json(const Json& j);
SquarefreeIdeal parse_ideal_text(const std::string& text);

Json ideal_to_json(const SquarefreeIdeal& ideal);
Json varset_to_json(const VarSet& set);

Json profile_to_json(const IdealProfile& p);
Json graph_to_json(const PrimeSumGraph& g);
Json verdict_to_json(const DepthVerdict& v);
Json oracle_to_json(const OracleDepth& d);
Json betti_to_json(const BettiTable& table);
// Certificate serialization: list of {"u": sorted A, "Z": sorted B}.
Json partition_to_json(const IntervalPartition& part);

}  // namespace sfdepth
