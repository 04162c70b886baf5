#include "sfdepth/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <gmpxx.h>

#include "sfdepth/errors.hpp"
#include "sfdepth/homology_detail.hpp"

namespace sfdepth {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::mod(int p) {
  if (!is_prime(p))
    throw PreconditionViolated("field characteristic must be 0 or prime, got " +
                               std::to_string(p));
  return FieldSpec{p};
}

std::string FieldSpec::str() const {
  return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

VarSet SimplicialComplex::vertex_set() const {
  VarSet v;
  for (const VarSet& f : facets) v = v | f;
  return v;
}

long long SimplicialComplex::face_count() const {
  std::vector<std::uint64_t> masks;
  masks.reserve(facets.size());
  for (const VarSet& f : facets) masks.push_back(f.mask);
  long long total = 0;
  for (const auto& bucket : detail::faces_by_card(masks))
    total += static_cast<long long>(bucket.size());
  return total;
}

SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  SimplicialComplex complex;
  complex.n = ideal.n();
  for (const VarSet& p : ideal.primes())
    complex.facets.push_back(p.complement_in(ideal.n()));
  // Complements of an irredundant family are pairwise incomparable already.
  return complex;
}

namespace detail {

std::vector<std::vector<std::uint64_t>> faces_by_card(
    const std::vector<std::uint64_t>& facets) {
  if (facets.empty()) return {};
  std::vector<std::uint64_t> all;
  for (std::uint64_t f : facets) {
    // every submask of f, including 0
    std::uint64_t sub = f;
    while (true) {
      all.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  int maxc = 0;
  for (std::uint64_t m : all) maxc = std::max(maxc, std::popcount(m));
  std::vector<std::vector<std::uint64_t>> buckets(maxc + 1);
  for (std::uint64_t m : all) buckets[std::popcount(m)].push_back(m);
  for (auto& b : buckets) std::sort(b.begin(), b.end());
  return buckets;
}

namespace {

long long mod_inverse(long long a, long long p) {
  long long result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

// Fraction-free (Bareiss) elimination in int64; sets overflow and aborts when
// a product would not fit.
bool bareiss_rank_int64(std::vector<std::vector<long long>>& m, int& rank_out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  long long prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        long long a, b, num;
        if (__builtin_mul_overflow(m[r][c], m[rank][col], &a) ||
            __builtin_mul_overflow(m[r][col], m[rank][c], &b) ||
            __builtin_sub_overflow(a, b, &num))
          return false;
        m[r][c] = num / prev;  // exact by the Bareiss identity
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  rank_out = rank;
  return true;
}

int bareiss_rank_mpz(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_char0(std::vector<std::vector<long long>> m) {
  std::vector<std::vector<long long>> work = m;
  int rank = 0;
  if (bareiss_rank_int64(work, rank)) return rank;
  std::vector<std::vector<mpz_class>> big(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    big[r].reserve(m[r].size());
    for (long long x : m[r]) big[r].emplace_back(static_cast<long>(x));
  }
  return bareiss_rank_mpz(std::move(big));
}

int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long long inv = mod_inverse(m[rank][col], p);
    for (int c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv % p;
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      long long factor = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = ((m[r][c] - factor * m[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

namespace {

// Signed boundary matrix from the card-c faces to the card-(c-1) faces.
std::vector<std::vector<long long>> boundary_matrix(
    const std::vector<std::uint64_t>& lower,
    const std::vector<std::uint64_t>& upper) {
  std::vector<std::vector<long long>> m(
      lower.size(), std::vector<long long>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    std::uint64_t face = upper[col];
    int position = 0;
    for (std::uint64_t rest = face; rest; rest &= rest - 1, ++position) {
      std::uint64_t sub = face & ~(rest & -rest);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      // every subface of a face is a face
      m[it - lower.begin()][col] = (position % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace

std::vector<long long> homology_from_faces(
    const std::vector<std::vector<std::uint64_t>>& faces, FieldSpec field,
    bool check_boundaries) {
  if (faces.empty()) return {};
  const int maxc = static_cast<int>(faces.size()) - 1;

  std::vector<std::vector<std::vector<long long>>> boundaries;
  std::vector<int> rank(maxc + 2, 0);
  for (int c = 1; c <= maxc; ++c) {
    auto m = boundary_matrix(faces[c - 1], faces[c]);
    rank[c] = field.characteristic == 0
                  ? rank_char0(m)
                  : rank_mod_p(m, field.characteristic);
    if (check_boundaries) boundaries.push_back(std::move(m));
  }

  if (check_boundaries) {
    for (int c = 2; c <= maxc; ++c) {
      const auto& lo = boundaries[c - 2];  // card c-1 -> c-2
      const auto& hi = boundaries[c - 1];  // card c   -> c-1
      for (std::size_t i = 0; i < lo.size(); ++i)
        for (std::size_t j = 0; j < hi[0].size(); ++j) {
          long long sum = 0;
          for (std::size_t k = 0; k < hi.size(); ++k)
            sum += lo[i][k] * hi[k][j];
          if (sum != 0)
            throw std::logic_error("boundary composition is nonzero");
        }
    }
  }

  std::vector<long long> dims(maxc + 1, 0);
  for (int c = 0; c <= maxc; ++c)
    dims[c] = static_cast<long long>(faces[c].size()) - rank[c] - rank[c + 1];
  return dims;
}

}  // namespace detail

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             FieldSpec field,
                                             bool check_boundaries) {
  std::vector<std::uint64_t> masks;
  masks.reserve(complex.facets.size());
  for (const VarSet& f : complex.facets) masks.push_back(f.mask);
  return detail::homology_from_faces(detail::faces_by_card(masks), field,
                                     check_boundaries);
}

bool euler_identity_holds(const SimplicialComplex& complex, FieldSpec field) {
  std::vector<std::uint64_t> masks;
  for (const VarSet& f : complex.facets) masks.push_back(f.mask);
  auto faces = detail::faces_by_card(masks);
  auto dims = detail::homology_from_faces(faces, field);
  long long lhs = 0, rhs = 0;
  for (std::size_t c = 0; c < faces.size(); ++c) {
    long long sign = (c % 2 == 0) ? -1 : 1;  // (-1)^{c-1}
    lhs += sign * static_cast<long long>(faces[c].size());
    rhs += sign * dims[c];
  }
  return lhs == rhs;
}

int matrix_rank(const std::vector<std::vector<int>>& m, FieldSpec field) {
  std::vector<std::vector<long long>> w(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) w[r].assign(m[r].begin(), m[r].end());
  return field.characteristic == 0 ? detail::rank_char0(std::move(w))
                                   : detail::rank_mod_p(std::move(w),
                                                        field.characteristic);
}

}  // namespace sfdepth
