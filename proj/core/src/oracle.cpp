#include "kcomm/oracle.hpp"

#include <algorithm>

namespace kcomm::oracle {

namespace {

std::uint64_t checked_power(const Field& field, std::size_t dim, std::uint64_t bound) {
  if (!field.is_prime_field()) throw BoundExceeded("exhaustive enumeration needs a prime field");
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (acc > bound / field.characteristic()) {
      throw BoundExceeded(field.name() + "^" + std::to_string(dim) + " exceeds the enumeration bound " +
                          std::to_string(bound));
    }
    acc *= field.characteristic();
  }
  return acc;
}

// Calls fn with every vector of F_p^len, in lexicographic residue order.
template <class Fn>
void for_each_vector(const Field& k, std::size_t len, Fn&& fn) {
  std::vector<std::uint64_t> digits(len, 0);
  for (;;) {
    Vector v;
    v.reserve(len);
    for (auto d : digits) v.push_back(k.from_mpz(mpz_class(static_cast<unsigned long>(d))));
    fn(v);
    std::size_t i = 0;
    while (i < len && ++digits[i] == k.characteristic()) digits[i++] = 0;
    if (i == len) return;
  }
}

bool is_invariant(const CommutingTuple& t, const Subspace& s) {
  for (const auto& m : t.mats()) {
    for (const auto& b : s.basis()) {
      if (!s.contains(m.apply(b))) return false;
    }
  }
  return true;
}

}  // namespace

namespace {

mpz_class gaussian_binomial_mpz(std::uint64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1), kept exact with GMP
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), q, n - i);
    mpz_ui_pow_ui(b.get_mpz_t(), q, i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  const mpz_class g = gaussian_binomial_mpz(q, n, k);
  if (!g.fits_ulong_p()) throw BoundExceeded("Gaussian binomial does not fit in 64 bits");
  return g.get_ui();
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t dim, std::uint64_t bound) {
  checked_power(field, dim, bound);
  mpz_class count = 0;
  for (std::size_t k = 0; k <= dim; ++k) count += gaussian_binomial_mpz(field.characteristic(), dim, k);
  if (count > kSubspaceLimit) {
    throw BoundExceeded(field.name() + "^" + std::to_string(dim) + " has " + count.get_str() +
                        " subspaces, above the enumeration limit");
  }
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= dim; ++k) {
    // pivot columns: choose k of dim
    std::vector<bool> mask(dim, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < dim; ++c) {
        if (mask[c]) pivots.push_back(c);
      }
      // free slots: entries right of a row's pivot that are not pivot columns
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = pivots[r] + 1; c < dim; ++c) {
          if (!mask[c]) slots.emplace_back(r, c);
        }
      }
      for_each_vector(field, slots.size(), [&](const Vector& fill) {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < k; ++r) rows.push_back(unit_vector(field, dim, pivots[r]));
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = fill[s];
        out.push_back(Subspace::span(field, dim, rows));
      });
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return out;
}

std::vector<InvariantSubmodule> all_invariant_submodules(const CommutingTuple& t, std::uint64_t bound) {
  std::vector<InvariantSubmodule> out;
  for (auto& s : enumerate_subspaces(t.field(), t.dim(), bound)) {
    if (is_invariant(t, s)) out.push_back(InvariantSubmodule::make(t, std::move(s)));
  }
  return out;
}

std::vector<CommutingTuple> composition_factors_bruteforce(const CommutingTuple& t, std::uint64_t bound) {
  std::vector<CommutingTuple> factors;
  CommutingTuple current = t;
  while (current.dim() != 0) {
    const auto subs = all_invariant_submodules(current, bound);
    // Enumeration is by increasing dimension, so the first nonzero one is minimal.
    auto it = std::find_if(subs.begin(), subs.end(), [](const InvariantSubmodule& s) { return s.dim() != 0; });
    if (it == subs.end()) throw std::logic_error("nonzero module without a nonzero invariant subspace");
    CommutingTuple simple = restrict_to(current, *it);
    if (all_invariant_submodules(simple, bound).size() != 2) {
      throw std::logic_error("composition factor is not simple");
    }
    factors.push_back(std::move(simple));
    current = quotient_by(current, *it);
  }
  return factors;
}

GrothendieckClass k0_class_oracle(const CommutingTuple& t, std::uint64_t bound) {
  GrothendieckClass c(t.field(), t.nvars());
  for (const auto& s : composition_factors_bruteforce(t, bound)) c.add(MaximalIdealKey(annihilator_ideal(s)), 1);
  return c;
}

bool quotient_is_field(const Ideal& ideal, Rng& rng, std::uint64_t bound, int samples) {
  if (ideal.is_unit()) return false;
  const Field& k = ideal.field();
  const auto& basis = ideal.standard_monomials();
  const std::size_t r = basis.size();

  // Multiplication by each standard monomial on the quotient, in the
  // standard-monomial basis.
  std::vector<Matrix> mult;
  for (const auto& m : basis) {
    Matrix a(k, r, r);
    for (std::size_t j = 0; j < r; ++j) {
      const MultiPoly prod = ideal.reduce(MultiPoly::term(k.one(), m * basis[j]));
      for (std::size_t i = 0; i < r; ++i) a(i, j) = prod.coeff(basis[i]);
    }
    mult.push_back(std::move(a));
  }
  auto invertible = [&](const Vector& coeffs) {
    Matrix a(k, r, r);
    for (std::size_t j = 0; j < r; ++j) {
      if (!coeffs[j].is_zero()) a += mult[j] * coeffs[j];
    }
    return rank(a) == r;
  };

  bool exhaustive = false;
  if (k.is_prime_field()) {
    try {
      checked_power(k, r, bound);
      exhaustive = true;
    } catch (const BoundExceeded&) {
    }
  }
  if (exhaustive) {
    bool ok = true;
    for_each_vector(k, r, [&](const Vector& v) {
      if (ok && !is_zero_vector(v) && !invertible(v)) ok = false;
    });
    return ok;
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (!invertible(unit_vector(k, r, j))) return false;
  }
  std::uniform_int_distribution<long long> dist(-50, 50);
  for (int s = 0; s < samples; ++s) {
    Vector v;
    for (std::size_t j = 0; j < r; ++j) v.push_back(k.from_int(dist(rng)));
    if (!is_zero_vector(v) && !invertible(v)) return false;
  }
  return true;
}

}  // namespace kcomm::oracle
