#include "sfdepth/sdepth.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <unordered_map>

#include "sfdepth/errors.hpp"

namespace sfdepth {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class PartitionSearch {
 public:
  PartitionSearch(const CharPoset& poset, int d, Clock::time_point deadline)
      : poset_(poset), d_(d), deadline_(deadline), covered_(poset.member.size(), 0) {}

  FeasStatus run(IntervalPartition& out, std::uint64_t& nodes) {
    bool found = dfs(0);
    nodes = nodes_;
    if (timed_out_) return FeasStatus::Unknown;
    if (!found) return FeasStatus::Infeasible;
    out.intervals = stack_;
    return FeasStatus::Feasible;
  }

 private:
  bool dfs(std::size_t scan_from) {
    if ((++nodes_ & 0xff) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return false;
    }
    while (scan_from < poset_.elements.size() &&
           covered_[poset_.elements[scan_from]])
      ++scan_from;
    if (scan_from == poset_.elements.size()) return true;

    // The partition interval holding the first uncovered element (canonical
    // order makes it inclusion-minimal) must start exactly there.
    const std::uint64_t sigma = poset_.elements[scan_from];
    for (std::uint64_t top : candidate_tops(sigma)) {
      if (!interval_free(sigma, top)) continue;
      mark(sigma, top, 1);
      stack_.push_back(Interval{VarSet(sigma), VarSet(top)});
      if (dfs(scan_from)) return true;
      stack_.pop_back();
      mark(sigma, top, 0);
      if (timed_out_) return false;
    }
    return false;
  }

  // Supersets of sigma with at least d members, largest first, canonical
  // within equal size.
  const std::vector<std::uint64_t>& candidate_tops(std::uint64_t sigma) {
    auto it = top_cache_.find(sigma);
    if (it != top_cache_.end()) return it->second;
    std::vector<std::uint64_t> tops;
    std::uint64_t room = ((1ull << poset_.n) - 1) & ~sigma;
    std::uint64_t sub = room;
    while (true) {
      std::uint64_t top = sigma | sub;
      if (std::popcount(top) >= d_) tops.push_back(top);
      if (sub == 0) break;
      sub = (sub - 1) & room;
    }
    std::sort(tops.begin(), tops.end(), [](std::uint64_t a, std::uint64_t b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      if (ca != cb) return ca > cb;
      return canonical_less(VarSet(a), VarSet(b));
    });
    return top_cache_.emplace(sigma, std::move(tops)).first->second;
  }

  bool interval_free(std::uint64_t lo, std::uint64_t hi) const {
    std::uint64_t room = hi & ~lo;
    std::uint64_t sub = room;
    while (true) {
      if (covered_[lo | sub]) return false;
      if (sub == 0) break;
      sub = (sub - 1) & room;
    }
    return true;
  }

  void mark(std::uint64_t lo, std::uint64_t hi, std::uint8_t value) {
    std::uint64_t room = hi & ~lo;
    std::uint64_t sub = room;
    while (true) {
      covered_[lo | sub] = value;
      if (sub == 0) break;
      sub = (sub - 1) & room;
    }
  }

  const CharPoset& poset_;
  int d_;
  Clock::time_point deadline_;
  std::vector<std::uint8_t> covered_;
  std::vector<Interval> stack_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> top_cache_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

FeasResult at_least_with_deadline(const CharPoset& poset, int d,
                                  Clock::time_point deadline) {
  if (d < 1 || d > poset.n)
    throw PreconditionViolated("target depth " + std::to_string(d) +
                               " outside [1," + std::to_string(poset.n) + "]");
  auto start = Clock::now();
  FeasResult result;
  PartitionSearch search(poset, d, deadline);
  result.status = search.run(result.partition, result.nodes);
  result.elapsed_ms = ms_since(start);
  if (result.status == FeasStatus::Feasible &&
      !verify_partition(poset, result.partition))
    throw std::logic_error("search produced an invalid partition");
  return result;
}

}  // namespace

int IntervalPartition::min_top_size() const {
  int best = 0;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    int size = intervals[k].hi.size();
    if (k == 0 || size < best) best = size;
  }
  return best;
}

FeasResult sdepth_at_least(const CharPoset& poset, int d,
                           const SearchBudget& budget) {
  return at_least_with_deadline(
      poset, d, Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double, std::milli>(budget.ms)));
}

FeasResult sdepth_at_least(const SquarefreeIdeal& ideal, int d,
                           const SearchBudget& budget) {
  return sdepth_at_least(char_poset(ideal), d, budget);
}

SdepthResult sdepth_exact(const SquarefreeIdeal& ideal,
                          const SearchBudget& budget, long long exact_cap) {
  CharPoset poset = char_poset(ideal);
  if (poset.size() > exact_cap)
    throw BudgetExceeded("poset has " + std::to_string(poset.size()) +
                         " elements, above the exact-search cap " +
                         std::to_string(exact_cap));

  auto start = Clock::now();
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double, std::milli>(budget.ms));
  bool unknown_above = false;
  for (int d = ideal.n(); d >= 1; --d) {
    FeasResult r = at_least_with_deadline(poset, d, deadline);
    if (r.status == FeasStatus::Feasible) {
      SdepthResult out;
      out.value = d;
      out.partition = std::move(r.partition);
      out.proven_exact = !unknown_above;
      out.elapsed_ms = ms_since(start);
      return out;
    }
    if (r.status == FeasStatus::Unknown) unknown_above = true;
  }
  throw BudgetExceeded("no feasible level found within budget");
}

int hpv_lower_bound(const SquarefreeIdeal& ideal) {
  return 1 + profile(ideal).size;
}

namespace {

int prime_closed_form(int ambient, int height) {
  return ambient - height + (height + 1) / 2;
}

// Sound sdepth lower bound for one branch of the splitting decomposition.
int branch_bound(const SquarefreeIdeal& ideal, const SplitBudget& budget) {
  if (ideal.s() == 1)
    return prime_closed_form(ideal.n(), ideal.prime(1).size());

  CharPoset poset = char_poset(ideal);
  if (poset.size() <= budget.exact_cap) {
    try {
      return sdepth_exact(ideal, SearchBudget{budget.probe_ms * 4},
                          budget.exact_cap)
          .value;
    } catch (const BudgetExceeded&) {
      // fall through to probing
    }
  }

  int bound = hpv_lower_bound(ideal);
  for (int d = bound + 1; d <= ideal.n(); ++d) {
    FeasResult r = sdepth_at_least(poset, d, SearchBudget{budget.probe_ms});
    if (r.status != FeasStatus::Feasible) break;
    bound = d;
  }
  return bound;
}

}  // namespace

int split_variable_bound(const SquarefreeIdeal& ideal, int var,
                         const SplitBudget& budget) {
  if (!ideal.support().contains(var))
    throw UnknownVariable("x_" + std::to_string(var) + " is not in the support");

  const int n = ideal.n();

  // Restriction branch: I ∩ K[vars except x], variables relabeled to [1..n-1].
  bool restriction_zero = false;
  std::vector<VarSet> restricted;
  for (const VarSet& p : ideal.primes()) {
    VarSet r = p.without(var);
    if (r.empty()) {
      restriction_zero = true;  // P = (x): the restriction is the zero ideal
      break;
    }
    VarSet relabeled;
    for (int v : r.members()) relabeled = relabeled.with(v > var ? v - 1 : v);
    restricted.push_back(relabeled);
  }

  int bound1;
  if (restriction_zero || n == 1) {
    bound1 = n;  // vacuous branch, never the minimum
  } else {
    bound1 = branch_bound(SquarefreeIdeal::normalize(std::move(restricted), n - 1),
                          budget);
  }

  // Colon branch: (I : x) = intersection of the primes avoiding x.
  std::vector<VarSet> colon;
  for (const VarSet& p : ideal.primes())
    if (!p.contains(var)) colon.push_back(p);

  int bound2;
  if (colon.empty()) {
    bound2 = n;  // (I:x) is the unit ideal, x·K[all variables]
  } else {
    bound2 = branch_bound(SquarefreeIdeal::normalize(std::move(colon), n), budget);
  }

  return std::min(bound1, bound2);
}

bool verify_partition(const CharPoset& poset, const IntervalPartition& part) {
  long long counted = 0;
  for (const Interval& iv : part.intervals) {
    if (!iv.lo.subset_of(iv.hi)) return false;
    if (!poset.contains(iv.lo.mask) || !poset.contains(iv.hi.mask)) return false;
    counted += 1ll << (iv.hi.size() - iv.lo.size());
  }
  if (counted != poset.size()) return false;

  std::vector<std::uint8_t> covered(poset.member.size(), 0);
  for (const Interval& iv : part.intervals) {
    std::uint64_t room = iv.hi.mask & ~iv.lo.mask;
    std::uint64_t sub = room;
    while (true) {
      std::uint64_t m = iv.lo.mask | sub;
      if (covered[m] || !poset.contains(m)) return false;
      covered[m] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & room;
    }
  }
  return true;  // disjoint + count match + membership => cover
}

}  // namespace sfdepth
