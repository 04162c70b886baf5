#pragma once

#include <optional>
#include <vector>

#include "sfdepth/varset.hpp"

namespace sfdepth {

// Squarefree monomial ideal I = P_1 ∩ ... ∩ P_s given by its minimal monomial
// primes, each a set of variables. Invariants: every prime nonempty, primes
// pairwise inclusion-incomparable. The prime order of the input is preserved
// (graph vertices are numbered by it).
class SquarefreeIdeal {
 public:
  // Drops empty sets and any prime containing another, keeps first-appearance
  // order of the survivors. Throws IndexOutOfRange / EmptyFamily.
  static SquarefreeIdeal normalize(std::vector<VarSet> raw, int n);

  // Validating constructor for already-irredundant input (e.g. parsed files);
  // throws instead of repairing.
  static SquarefreeIdeal checked(std::vector<VarSet> primes, int n);

  int n() const { return n_; }
  int s() const { return static_cast<int>(primes_.size()); }
  const std::vector<VarSet>& primes() const { return primes_; }
  const VarSet& prime(int i) const { return primes_[i - 1]; }  // 1-based
  VarSet support() const { return support_; }
  int height() const { return support_.size(); }
  int free_vars() const { return n_ - support_.size(); }

  bool operator==(const SquarefreeIdeal&) const = default;

 private:
  SquarefreeIdeal(int n, std::vector<VarSet> primes);

  int n_ = 0;
  std::vector<VarSet> primes_;
  VarSet support_;
};

// Numeric invariants of the intro: h = height of ΣP_j, v/t the least e such
// that some/every e-subfamily sums to the support, size = v+(n-h)-1,
// bigsize = t+(n-h)-1, q = min over non-covering pairs of n-|P_i ∪ P_j|
// (absent when every pair covers the support).
struct IdealProfile {
  VarSet support;
  int h = 0;
  int v = 0;
  int t = 0;
  int size = 0;
  int bigsize = 0;
  std::optional<int> q;
};

IdealProfile profile(const SquarefreeIdeal& ideal);

// Union of the selected primes (1-based indices). Throws IndexOutOfRange.
VarSet sum_of(const SquarefreeIdeal& ideal, const std::vector<int>& indices);

// x_sigma ∈ I iff sigma meets every prime.
bool contains_monomial(const SquarefreeIdeal& ideal, VarSet sigma);

// Minimal monomial generators = inclusion-minimal transversals of the prime
// family, in canonical (size, lex) order.
std::vector<VarSet> min_generators(const SquarefreeIdeal& ideal);

// The ideal viewed inside its support ring: variables relabeled to
// [1..height] in increasing order. var_map[k] = old index of new variable k+1.
struct ReducedIdeal {
  SquarefreeIdeal ideal;
  std::vector<int> var_map;
};
ReducedIdeal reduce_to_support(const SquarefreeIdeal& ideal);

}  // namespace sfdepth
