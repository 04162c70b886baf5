#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sfdepth {

// Set of 1-based variable indices x_1..x_n, stored as a bitmask (bit k-1 <-> x_k).
// Ambient sizes are capped at 64 variables, far beyond desk scale.
struct VarSet {
  std::uint64_t mask = 0;

  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t m) : mask(m) {}

  static VarSet of(std::initializer_list<int> vars);
  static VarSet from_indices(const std::vector<int>& vars);
  static constexpr VarSet full(int n) {
    return VarSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }
  // {lo, lo+1, ..., hi}
  static constexpr VarSet range(int lo, int hi) {
    return VarSet(full(hi).mask & ~full(lo - 1).mask);
  }

  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool contains(int v) const { return (mask >> (v - 1)) & 1ull; }
  constexpr bool subset_of(VarSet b) const { return (mask & ~b.mask) == 0; }
  constexpr bool superset_of(VarSet b) const { return b.subset_of(*this); }
  constexpr bool intersects(VarSet b) const { return (mask & b.mask) != 0; }

  constexpr VarSet operator|(VarSet b) const { return VarSet(mask | b.mask); }
  constexpr VarSet operator&(VarSet b) const { return VarSet(mask & b.mask); }
  constexpr VarSet minus(VarSet b) const { return VarSet(mask & ~b.mask); }
  constexpr VarSet complement_in(int n) const {
    return VarSet(full(n).mask & ~mask);
  }
  constexpr bool operator==(const VarSet&) const = default;

  constexpr VarSet with(int v) const { return VarSet(mask | (1ull << (v - 1))); }
  constexpr VarSet without(int v) const { return VarSet(mask & ~(1ull << (v - 1))); }

  // Least member, 0 when empty.
  int min_var() const { return mask ? std::countr_zero(mask) + 1 : 0; }
  int max_var() const { return mask ? 64 - std::countl_zero(mask) : 0; }

  std::vector<int> members() const;
  std::string str() const;  // "{1,2,5}"
};

// Canonical order: cardinality first, then lexicographic on the sorted member
// lists. For equal sizes the set owning the lowest differing index comes first.
inline bool canonical_less(VarSet a, VarSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.mask == b.mask) return false;
  std::uint64_t diff = a.mask ^ b.mask;
  return (a.mask >> std::countr_zero(diff)) & 1ull;
}

}  // namespace sfdepth
