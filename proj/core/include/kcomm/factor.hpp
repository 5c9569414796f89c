#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kcomm/unipoly.hpp"

namespace kcomm {

/// Every randomized routine takes a caller-owned generator of this type.
using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 0x6b636f6d6dULL;

struct FactorOptions {
  /// Over F_p, squarefree parts with p^deg at or below this bound are split
  /// by exhaustive trial division instead of Cantor-Zassenhaus.
  std::uint64_t exhaustive_threshold = 1'000'000;
  /// Inputs over Q above this degree are rejected.
  int max_rational_degree = 64;
};

struct Factor {
  UniPoly poly;  // monic irreducible
  int multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// f = unit * prod(poly^multiplicity), factors in canonical order
/// (degree, then coefficients from the top down).
struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;

  UniPoly expand() const;
};

/// Pairwise coprime monic squarefree parts a_i with f = lc * prod a_i^i.
/// Works in characteristic p by taking p-th roots when f' vanishes.
std::vector<Factor> squarefree_decomposition(const UniPoly& f);

/// Product of the distinct monic irreducible factors of f.
UniPoly squarefree_part(const UniPoly& f);

Factorization factor(const UniPoly& f, Rng& rng, const FactorOptions& options = {});
/// Uses a generator seeded with kDefaultSeed.
Factorization factor(const UniPoly& f);

/// Distinct irreducible factors only, in canonical order.
std::vector<UniPoly> irreducible_factors(const UniPoly& f, Rng& rng);

namespace detail {

// Exposed for cross-checking the two F_p routes against each other.
std::vector<UniPoly> split_squarefree_exhaustive(const UniPoly& f);
std::vector<UniPoly> split_squarefree_cantor_zassenhaus(const UniPoly& f, Rng& rng);

// Irreducible factors of a monic squarefree polynomial over Q.
std::vector<UniPoly> split_squarefree_rational(const UniPoly& f, Rng& rng, const FactorOptions& options);

}  // namespace detail

}  // namespace kcomm
