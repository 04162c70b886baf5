#include "sfdepth/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sfdepth/errors.hpp"

namespace sfdepth {

VarSet VarSet::of(std::initializer_list<int> vars) {
  VarSet r;
  for (int v : vars) r.mask |= 1ull << (v - 1);
  return r;
}

VarSet VarSet::from_indices(const std::vector<int>& vars) {
  VarSet r;
  for (int v : vars) r.mask |= 1ull << (v - 1);
  return r;
}

std::vector<int> VarSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask; m; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string VarSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<VarSet> primes)
    : n_(n), primes_(std::move(primes)) {
  for (const VarSet& p : primes_) support_ = support_ | p;
}

SquarefreeIdeal SquarefreeIdeal::normalize(std::vector<VarSet> raw, int n) {
  if (n < 1 || n > 64)
    throw IndexOutOfRange("ambient variable count must be in [1,64], got " +
                          std::to_string(n));
  for (const VarSet& p : raw)
    if (!p.subset_of(VarSet::full(n)))
      throw IndexOutOfRange("prime " + p.str() + " exceeds ambient n=" +
                            std::to_string(n));

  std::vector<VarSet> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty()) continue;
    bool drop = false;
    for (std::size_t j = 0; j < raw.size() && !drop; ++j) {
      if (i == j) continue;
      if (raw[j].empty()) continue;
      // Drop strict supersets; among duplicates keep the first occurrence.
      if (raw[j].subset_of(raw[i]) && (raw[j] != raw[i] || j < i)) drop = true;
    }
    if (!drop) kept.push_back(raw[i]);
  }
  if (kept.empty()) throw EmptyFamily("no primes remain after normalization");
  return SquarefreeIdeal(n, std::move(kept));
}

SquarefreeIdeal SquarefreeIdeal::checked(std::vector<VarSet> primes, int n) {
  if (n < 1 || n > 64)
    throw IndexOutOfRange("ambient variable count must be in [1,64], got " +
                          std::to_string(n));
  if (primes.empty()) throw EmptyFamily("prime family is empty");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i].empty())
      throw EmptyFamily("prime #" + std::to_string(i + 1) + " is empty");
    if (!primes[i].subset_of(VarSet::full(n)))
      throw IndexOutOfRange("prime " + primes[i].str() + " exceeds ambient n=" +
                            std::to_string(n));
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i != j && primes[i].subset_of(primes[j]))
        throw ParseError("primes #" + std::to_string(i + 1) + " and #" +
                         std::to_string(j + 1) + " are comparable");
    }
  }
  return SquarefreeIdeal(n, std::move(primes));
}

namespace {

// True when some e-subfamily of primes[first..] unions with acc to the target.
bool some_subfamily_covers(const std::vector<VarSet>& primes, int first,
                           int e, VarSet acc, VarSet target) {
  if (acc == target) return true;
  if (e == 0) return false;
  int s = static_cast<int>(primes.size());
  for (int i = first; i + e <= s; ++i)
    if (some_subfamily_covers(primes, i + 1, e - 1, acc | primes[i], target))
      return true;
  return false;
}

bool every_subfamily_covers(const std::vector<VarSet>& primes, int first,
                            int e, VarSet acc, VarSet target) {
  if (e == 0) return acc == target;
  int s = static_cast<int>(primes.size());
  for (int i = first; i + e <= s; ++i)
    if (!every_subfamily_covers(primes, i + 1, e - 1, acc | primes[i], target))
      return false;
  return true;
}

}  // namespace

IdealProfile profile(const SquarefreeIdeal& ideal) {
  IdealProfile out;
  out.support = ideal.support();
  out.h = out.support.size();
  const auto& primes = ideal.primes();
  const int s = ideal.s();

  for (out.v = 1; out.v <= s; ++out.v)
    if (some_subfamily_covers(primes, 0, out.v, VarSet(), out.support)) break;
  for (out.t = out.v; out.t <= s; ++out.t)
    if (every_subfamily_covers(primes, 0, out.t, VarSet(), out.support)) break;

  out.size = out.v + (ideal.n() - out.h) - 1;
  out.bigsize = out.t + (ideal.n() - out.h) - 1;

  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      VarSet u = primes[i] | primes[j];
      if (u == out.support) continue;
      int deficit = ideal.n() - u.size();
      if (!out.q || deficit < *out.q) out.q = deficit;
    }
  return out;
}

VarSet sum_of(const SquarefreeIdeal& ideal, const std::vector<int>& indices) {
  if (indices.empty()) throw IndexOutOfRange("empty prime index set");
  VarSet u;
  for (int i : indices) {
    if (i < 1 || i > ideal.s())
      throw IndexOutOfRange("prime index " + std::to_string(i) +
                            " outside [1," + std::to_string(ideal.s()) + "]");
    u = u | ideal.prime(i);
  }
  return u;
}

bool contains_monomial(const SquarefreeIdeal& ideal, VarSet sigma) {
  for (const VarSet& p : ideal.primes())
    if (!sigma.intersects(p)) return false;
  return true;
}

std::vector<VarSet> min_generators(const SquarefreeIdeal& ideal) {
  // Berge multiplication: extend partial transversals one prime at a time,
  // minimalizing after each step.
  std::vector<VarSet> gens{VarSet()};
  for (const VarSet& p : ideal.primes()) {
    std::vector<VarSet> next;
    for (const VarSet& g : gens) {
      if (g.intersects(p)) {
        next.push_back(g);
      } else {
        for (int v : p.members()) next.push_back(g.with(v));
      }
    }
    std::sort(next.begin(), next.end(), canonical_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<VarSet> minimal;
    for (const VarSet& c : next) {
      bool dominated = false;
      for (const VarSet& m : minimal)
        if (m.subset_of(c)) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(c);
    }
    gens = std::move(minimal);
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  return gens;
}

ReducedIdeal reduce_to_support(const SquarefreeIdeal& ideal) {
  std::vector<int> var_map = ideal.support().members();
  std::vector<int> inverse(65, 0);
  for (std::size_t k = 0; k < var_map.size(); ++k) inverse[var_map[k]] = static_cast<int>(k) + 1;

  std::vector<VarSet> primes;
  primes.reserve(ideal.s());
  for (const VarSet& p : ideal.primes()) {
    VarSet q;
    for (int v : p.members()) q = q.with(inverse[v]);
    primes.push_back(q);
  }
  int h = static_cast<int>(var_map.size());
  return ReducedIdeal{SquarefreeIdeal::checked(std::move(primes), h),
                      std::move(var_map)};
}

}  // namespace sfdepth
