#pragma once

#include <cstdint>
#include <vector>

#include "sfdepth/ideal.hpp"

namespace sfdepth {

// Poset of supports of squarefree monomials lying in I (the transversals of
// the prime family), ordered by inclusion. Upward closed; always contains the
// full set [1..n].
struct CharPoset {
  int n = 0;
  std::vector<std::uint64_t> elements;  // canonical (size, lex) order
  std::vector<std::uint8_t> member;     // indexed by mask, size 1<<n

  bool contains(std::uint64_t mask) const { return member[mask] != 0; }
  long long size() const { return static_cast<long long>(elements.size()); }
};

// Enumerates the poset; throws BudgetExceeded when n exceeds the subset cap.
CharPoset char_poset(const SquarefreeIdeal& ideal, int max_n = 16);

}  // namespace sfdepth
