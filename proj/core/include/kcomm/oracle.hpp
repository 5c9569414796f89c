#pragma once

#include <cstdint>
#include <vector>

#include "kcomm/kzero.hpp"

namespace kcomm::oracle {

/// Exhaustive searches refuse to run above this many vectors (p^dim).
inline constexpr std::uint64_t kDefaultBound = 1U << 12U;
/// Enumeration also refuses when the number of subspaces would exceed this.
inline constexpr std::uint64_t kSubspaceLimit = 1U << 20U;

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every subspace of F_p^dim, each listed once in canonical echelon form,
/// ordered by dimension. Throws BoundExceeded when p^dim exceeds `bound`
/// or the subspace count exceeds kSubspaceLimit.
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t dim, std::uint64_t bound = kDefaultBound);

/// Number of k-dimensional subspaces of F_q^n (Gaussian binomial).
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);

/// All subspaces invariant under every matrix of t, by exhaustive filtering.
std::vector<InvariantSubmodule> all_invariant_submodules(const CommutingTuple& t, std::uint64_t bound = kDefaultBound);

/// Simple subquotients of a composition series, found by repeatedly
/// splitting off a minimal nonzero invariant subspace. Each factor is
/// re-checked to have exactly two invariant subspaces.
std::vector<CommutingTuple> composition_factors_bruteforce(const CommutingTuple& t,
                                                           std::uint64_t bound = kDefaultBound);

/// Sum of [Ann(S)] over the composition factors S.
GrothendieckClass k0_class_oracle(const CommutingTuple& t, std::uint64_t bound = kDefaultBound);

/// Slow check that k[T]/I is a field: every nonzero element tried acts
/// invertibly by multiplication. Exhaustive when p^dim(k[T]/I) <= bound,
/// otherwise the standard monomials plus `samples` random elements.
bool quotient_is_field(const Ideal& ideal, Rng& rng, std::uint64_t bound = kDefaultBound, int samples = 64);

}  // namespace kcomm::oracle
