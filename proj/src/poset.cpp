#include "sfdepth/poset.hpp"

#include <algorithm>

#include "sfdepth/errors.hpp"

namespace sfdepth {

CharPoset char_poset(const SquarefreeIdeal& ideal, int max_n) {
  const int n = ideal.n();
  if (n > max_n)
    throw BudgetExceeded("2^n poset enumeration beyond cap: n=" +
                         std::to_string(n) + " > " + std::to_string(max_n));

  CharPoset poset;
  poset.n = n;
  poset.member.assign(1ull << n, 1);

  // σ is a transversal unless it avoids some prime, i.e. lies inside the
  // prime's complement.
  for (const VarSet& p : ideal.primes()) {
    std::uint64_t away = p.complement_in(n).mask;
    std::uint64_t sub = away;
    while (true) {
      poset.member[sub] = 0;
      if (sub == 0) break;
      sub = (sub - 1) & away;
    }
  }

  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (poset.member[m]) poset.elements.push_back(m);
  std::sort(poset.elements.begin(), poset.elements.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return canonical_less(VarSet(a), VarSet(b));
            });
  return poset;
}

}  // namespace sfdepth
