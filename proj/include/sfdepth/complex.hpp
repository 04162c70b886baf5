#pragma once

#include <vector>

#include "sfdepth/field.hpp"
#include "sfdepth/ideal.hpp"

namespace sfdepth {

// Simplicial complex given by its facets (inclusion-maximal faces). An empty
// facet list is the void complex (no faces at all); a single empty facet is
// the complex {∅}.
struct SimplicialComplex {
  int n = 0;                   // vertex labels live in [1..n]
  std::vector<VarSet> facets;  // pairwise incomparable

  bool is_void() const { return facets.empty(); }
  VarSet vertex_set() const;
  // Number of faces including the empty face (0 for the void complex).
  long long face_count() const;
};

// Stanley–Reisner complex of I: faces are the σ with x_σ ∉ I, so facets are
// the complements of the primes.
SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal);

// Reduced homology dimensions, indexed by face cardinality: dims[c] is
// dim H̃_{c-1}. The empty face spans degree -1, so the complex {∅} has
// dims = {1} and the void complex has no entries at all. All ranks exact.
// With check_boundaries set, verifies ∂∘∂ = 0 for every consecutive pair of
// boundary matrices (throws std::logic_error on violation).
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             FieldSpec field,
                                             bool check_boundaries = false);

// Σ_{k≥-1} (-1)^k dim H̃_k must equal Σ_{faces τ} (-1)^{dim τ} under the
// reduced convention; exposed for the self-check suites.
bool euler_identity_holds(const SimplicialComplex& complex, FieldSpec field);

// Exact rank kernels used by the homology computation (entries are small
// integers; char 0 uses fraction-free elimination with bignum fallback).
int matrix_rank(const std::vector<std::vector<int>>& m, FieldSpec field);

}  // namespace sfdepth
