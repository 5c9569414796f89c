#pragma once

// Random inputs shared by the unit tests, the acceptance binary and the
// benchmarks. Commuting tuples are built as polynomials in one random
// matrix, optionally glued block-diagonally, so they commute by
// construction while still having nontrivial annihilators.

#include <random>
#include <vector>

#include "kcomm/endomod.hpp"
#include "kcomm/factor.hpp"
#include "kcomm/linalg.hpp"

namespace kcomm::testgen {

inline std::vector<Field> small_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
}

inline FieldElement random_scalar(const Field& k, Rng& rng, int range = 3) {
  std::uniform_int_distribution<long long> dist(-range, range);
  return k.from_int(dist(rng));
}

inline UniPoly random_poly(const Field& k, int degree, Rng& rng, int range = 3) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_scalar(k, rng, range));
  return UniPoly(k, std::move(c));
}

/// Nonzero polynomial of exactly the given degree.
inline UniPoly random_poly_exact(const Field& k, int degree, Rng& rng, int range = 3) {
  for (;;) {
    UniPoly p = random_poly(k, degree, rng, range);
    if (p.degree() == degree) return p;
  }
}

/// Sparse-ish small entries, so eigenvalues repeat and nilpotent parts show up.
inline Matrix random_matrix(const Field& k, std::size_t d, Rng& rng) {
  Matrix m(k, d, d);
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<long long> dist(-2, 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (keep(rng)) m(i, j) = k.from_int(dist(rng));
    }
  }
  return m;
}

/// Random block matrix with a shared structure: a block sum of companion
/// matrices of small random polynomials, conjugated by a unipotent
/// triangular change of basis. Exercises repeated and irreducible factors.
inline Matrix random_structured_matrix(const Field& k, std::size_t d, Rng& rng) {
  Matrix m(k, 0, 0);
  std::size_t used = 0;
  std::uniform_int_distribution<std::size_t> block(1, 3);
  while (used < d) {
    const std::size_t b = std::min(block(rng), d - used);
    UniPoly q = random_poly(k, static_cast<int>(b) - 1, rng, 2) + UniPoly::monomial(k.one(), static_cast<int>(b));
    m = Matrix::block_diagonal(m, Matrix::companion(q));
    used += b;
  }
  Matrix p = Matrix::identity(k, d);
  Matrix pinv = Matrix::identity(k, d);
  std::uniform_int_distribution<long long> dist(-1, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      p(i, j) = k.from_int(dist(rng));
    }
  }
  // inverse of a unipotent upper triangular matrix by back substitution
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      if (ii == j) continue;
      FieldElement acc = k.zero();
      for (std::size_t l = ii + 1; l <= j; ++l) acc += p(ii, l) * pinv(l, j);
      pinv(ii, j) = -acc;
    }
  }
  return p * m * pinv;
}

inline Matrix any_random_matrix(const Field& k, std::size_t d, Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? random_matrix(k, d, rng) : random_structured_matrix(k, d, rng);
}

/// (g_1(A), ..., g_n(A)) for a random A and random polynomials g_i of
/// degree at most 2 (degree 1 for the first, so A itself is often visible).
inline CommutingTuple polynomial_tuple(const Field& k, std::size_t nvars, std::size_t d, Rng& rng) {
  const Matrix a = any_random_matrix(k, d, rng);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < nvars; ++i) {
    const UniPoly g = random_poly(k, i == 0 ? 1 : 2, rng, 2);
    mats.push_back(eval_poly_at_matrix(g, a));
  }
  return CommutingTuple::make(k, nvars, d, std::move(mats));
}

/// A polynomial tuple, or with probability 1/3 a block sum of two of them.
inline CommutingTuple random_tuple(const Field& k, std::size_t nvars, std::size_t max_dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const std::size_t d = dim(rng);
  if (d >= 2 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    const std::size_t d1 = std::uniform_int_distribution<std::size_t>(1, d - 1)(rng);
    return CommutingTuple::block_diagonal(polynomial_tuple(k, nvars, d1, rng), polynomial_tuple(k, nvars, d - d1, rng));
  }
  return polynomial_tuple(k, nvars, d, rng);
}

inline Vector random_vector(const Field& k, std::size_t d, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(random_scalar(k, rng, 2));
  return v;
}

/// All d x d matrices over F_p, indexed by the base-p digits of `code`.
inline Matrix matrix_from_code(const Field& k, std::size_t d, std::uint64_t code) {
  Matrix m(k, d, d);
  const std::uint64_t p = k.characteristic();
  for (std::size_t i = 0; i < d * d; ++i) {
    m(i / d, i % d) = k.from_int(static_cast<long long>(code % p));
    code /= p;
  }
  return m;
}

}  // namespace kcomm::testgen
