#pragma once

#include <cstdint>
#include <vector>

#include "sfdepth/field.hpp"

namespace sfdepth::detail {

// All distinct subsets of the given facet masks (the empty face included),
// grouped by cardinality and sorted within each bucket. An empty facet list
// yields an empty result (void complex).
std::vector<std::vector<std::uint64_t>> faces_by_card(
    const std::vector<std::uint64_t>& facets);

// Reduced homology dimensions from a face table, indexed by cardinality
// (entry c is dim H̃_{c-1}).
std::vector<long long> homology_from_faces(
    const std::vector<std::vector<std::uint64_t>>& faces, FieldSpec field,
    bool check_boundaries = false);

// Exact rank kernels. Characteristic 0 runs fraction-free elimination in
// int64 and retries with GMP integers on overflow; characteristic p reduces
// mod p.
int rank_char0(std::vector<std::vector<long long>> m);
int rank_mod_p(std::vector<std::vector<long long>> m, long long p);

}  // namespace sfdepth::detail
