#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sfdepth/ideal.hpp"
#include "sfdepth/poset.hpp"

namespace sfdepth {

// Interval [A,B] = {σ : A ⊆ σ ⊆ B} of the characteristic poset; reads as the
// Stanley summand x_A · K[variables of B].
struct Interval {
  VarSet lo;
  VarSet hi;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
  int min_top_size() const;
};

enum class FeasStatus { Feasible, Infeasible, Unknown };

struct FeasResult {
  FeasStatus status = FeasStatus::Unknown;
  IntervalPartition partition;   // set when Feasible
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct SearchBudget {
  double ms = 60000.0;  // wall clock, checked at node expansion
};

// Exact-cover search for an interval partition with every |B| ≥ d.
// Deterministic: branches on the inclusion-minimal uncovered element, tries
// tops in decreasing size then lexicographic order. Infeasible only after
// exhaustive search; Unknown carries the elapsed budget.
FeasResult sdepth_at_least(const SquarefreeIdeal& ideal, int d,
                           const SearchBudget& budget = {});
FeasResult sdepth_at_least(const CharPoset& poset, int d,
                           const SearchBudget& budget = {});

struct SdepthResult {
  int value = 0;
  IntervalPartition partition;
  bool proven_exact = false;  // false when some higher level returned Unknown
  double elapsed_ms = 0.0;
};

// Largest d with a feasible partition, descending from n. The certificate is
// verified before return. Throws BudgetExceeded if no level completes, and
// reports proven_exact=false when the level above the value was Unknown.
// Posets above exact_cap elements are refused (BudgetExceeded).
SdepthResult sdepth_exact(const SquarefreeIdeal& ideal,
                          const SearchBudget& budget = {},
                          long long exact_cap = 1024);

// 1 + size(I).
int hpv_lower_bound(const SquarefreeIdeal& ideal);

struct SplitBudget {
  double probe_ms = 10000.0;   // per at-least probe on large branches
  long long exact_cap = 1024;  // poset size limit for exact branch evaluation
};

// Lower bound from the splitting decomposition I = I' ⊕ x(I:x): the min of
// sound bounds for the two branches. Branch bounds use, in order: the prime
// closed form n'-h'+⌈h'/2⌉, exact sdepth when the branch poset is small, and
// otherwise hpv plus budgeted feasibility probes. Never exceeds true sdepth.
// Throws UnknownVariable when x is outside the support.
int split_variable_bound(const SquarefreeIdeal& ideal, int var,
                         const SplitBudget& budget = {});

// Pairwise disjoint and covering; runs the Σ 2^{|B∖A|} = |poset| counting
// check before the element-level check.
bool verify_partition(const CharPoset& poset, const IntervalPartition& part);

}  // namespace sfdepth
