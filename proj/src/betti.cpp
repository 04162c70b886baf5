#include "sfdepth/betti.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sfdepth/errors.hpp"
#include "sfdepth/homology_detail.hpp"

namespace sfdepth {

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const BettiEntry& e : entries) pd = std::max(pd, e.i);
  return pd;
}

long long BettiTable::total() const {
  long long t = 0;
  for (const BettiEntry& e : entries) t += e.dim;
  return t;
}

namespace {

// Betti contributions of one multidegree σ: restrict the facets, drop the
// cones, and read dim H̃_{|σ|-i-1}(Δ|_σ) off the homology of the restriction.
void betti_for_sigma(const std::vector<std::uint64_t>& facets,
                     std::uint64_t sigma, FieldSpec field,
                     std::vector<BettiEntry>& out) {
  std::vector<std::uint64_t> restricted;
  restricted.reserve(facets.size());
  for (std::uint64_t f : facets) restricted.push_back(f & sigma);

  // maximal restricted facets
  std::vector<std::uint64_t> maximal;
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < restricted.size() && !dominated; ++j)
      if (i != j && (restricted[i] & ~restricted[j]) == 0 &&
          (restricted[i] != restricted[j] || j < i))
        dominated = true;
    if (!dominated) maximal.push_back(restricted[i]);
  }

  if (sigma != 0) {
    std::uint64_t common = ~0ull;
    for (std::uint64_t f : maximal) common &= f;
    if (common != 0) return;  // cone: acyclic
  }

  auto dims = detail::homology_from_faces(detail::faces_by_card(maximal), field);
  const int card = std::popcount(sigma);
  for (int c = 0; c < static_cast<int>(dims.size()); ++c)
    if (dims[c] > 0)
      out.push_back(BettiEntry{card - c, VarSet(sigma), dims[c]});
}

std::vector<std::uint64_t> support_subsets_canonical(VarSet support) {
  std::vector<int> vars = support.members();
  const int h = static_cast<int>(vars.size());
  std::vector<std::uint64_t> subsets;
  subsets.reserve(1ull << h);
  for (std::uint64_t pattern = 0; pattern < (1ull << h); ++pattern) {
    std::uint64_t sigma = 0;
    for (int k = 0; k < h; ++k)
      if ((pattern >> k) & 1) sigma |= 1ull << (vars[k] - 1);
    subsets.push_back(sigma);
  }
  std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
    return canonical_less(VarSet(a), VarSet(b));
  });
  return subsets;
}

BettiTable hochster_impl(const SquarefreeIdeal& ideal, FieldSpec field,
                         const OracleOptions& opts, bool use_parallel) {
  if (ideal.n() > opts.max_n)
    throw BudgetExceeded("2^n subset iteration beyond cap: n=" +
                         std::to_string(ideal.n()) + " > " +
                         std::to_string(opts.max_n));

  std::vector<std::uint64_t> facets;
  facets.reserve(ideal.s());
  for (const VarSet& p : ideal.primes())
    facets.push_back(p.complement_in(ideal.n()).mask);

  // Subsets meeting the free variables restrict to cones and contribute
  // nothing, so only σ inside the support is visited.
  std::vector<std::uint64_t> sigmas = support_subsets_canonical(ideal.support());
  std::vector<std::vector<BettiEntry>> slots(sigmas.size());

#ifdef _OPENMP
  if (use_parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (long long k = 0; k < static_cast<long long>(sigmas.size()); ++k)
      betti_for_sigma(facets, sigmas[k], field, slots[k]);
  } else {
    for (std::size_t k = 0; k < sigmas.size(); ++k)
      betti_for_sigma(facets, sigmas[k], field, slots[k]);
  }
#else
  (void)use_parallel;
  for (std::size_t k = 0; k < sigmas.size(); ++k)
    betti_for_sigma(facets, sigmas[k], field, slots[k]);
#endif

  BettiTable table;
  table.field = field;
  table.n = ideal.n();
  for (const auto& slot : slots)
    table.entries.insert(table.entries.end(), slot.begin(), slot.end());
  std::sort(table.entries.begin(), table.entries.end(),
            [](const BettiEntry& a, const BettiEntry& b) {
              if (a.i != b.i) return a.i < b.i;
              return canonical_less(a.sigma, b.sigma);
            });
  return table;
}

}  // namespace

BettiTable hochster_betti(const SquarefreeIdeal& ideal, FieldSpec field,
                          const OracleOptions& opts) {
  return hochster_impl(ideal, field, opts, opts.parallel);
}

BettiTable hochster_betti_serial(const SquarefreeIdeal& ideal, FieldSpec field,
                                 const OracleOptions& opts) {
  return hochster_impl(ideal, field, opts, false);
}

OracleDepth depth_oracle(const SquarefreeIdeal& ideal, FieldSpec field,
                         const OracleOptions& opts) {
  BettiTable table = hochster_betti(ideal, field, opts);
  OracleDepth out;
  out.pd = table.projective_dimension();
  out.module_depth = ideal.n() - out.pd;
  out.ideal_depth = out.module_depth + 1;

  if (opts.internal_checks && ideal.free_vars() > 0) {
    // Free-variable reduction must be additive in the depth.
    OracleOptions inner = opts;
    inner.internal_checks = false;
    ReducedIdeal reduced = reduce_to_support(ideal);
    BettiTable rt = hochster_betti(reduced.ideal, field, inner);
    int reduced_module = reduced.ideal.n() - rt.projective_dimension();
    if (reduced_module + ideal.free_vars() != out.module_depth)
      throw std::logic_error("support reduction is not depth-additive");
  }
  return out;
}

}  // namespace sfdepth
