#pragma once

#include <vector>

#include "sfdepth/complex.hpp"
#include "sfdepth/field.hpp"
#include "sfdepth/ideal.hpp"

namespace sfdepth {

struct BettiEntry {
  int i = 0;        // homological index
  VarSet sigma;     // multidegree
  long long dim = 0;
};

// Multigraded Betti numbers β_{i,σ}(S/I) over the given field; finitely many
// nonzero entries, sorted by (i, canonical σ). β_{0,∅} = 1 always.
struct BettiTable {
  FieldSpec field;
  int n = 0;
  std::vector<BettiEntry> entries;

  int projective_dimension() const;  // max i with a nonzero entry
  long long total() const;
};

struct OracleOptions {
  int max_n = 16;               // BudgetExceeded beyond 2^max_n subsets
  bool parallel = true;         // use the OpenMP kernel when available
  bool internal_checks = true;  // support-reduction cross-check in depth_oracle
};

// Hochster's formula: β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ) computed for every
// σ in the support (subsets off the support restrict to cones and vanish).
// OpenMP-parallel over σ when enabled; output independent of parallelism.
BettiTable hochster_betti(const SquarefreeIdeal& ideal, FieldSpec field,
                          const OracleOptions& opts = {});

// Plain sequential reference for the kernel above; kept for testing and for
// the serial-vs-parallel benchmark.
BettiTable hochster_betti_serial(const SquarefreeIdeal& ideal, FieldSpec field,
                                 const OracleOptions& opts = {});

struct OracleDepth {
  int module_depth = 0;  // depth S/I = n - pd(S/I)
  int ideal_depth = 0;   // module_depth + 1
  int pd = 0;
};

// Depth via Auslander–Buchsbaum on the Betti table. Asserts the
// free-variable-reduction consistency internally when enabled.
OracleDepth depth_oracle(const SquarefreeIdeal& ideal, FieldSpec field,
                         const OracleOptions& opts = {});

}  // namespace sfdepth
