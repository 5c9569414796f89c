#include "kcomm/factor.hpp"

#include <algorithm>
#include <limits>

namespace kcomm {

namespace {

UniPoly one_of(const Field& k) { return UniPoly::constant(k.one()); }
UniPoly x_of(const Field& k) { return UniPoly::monomial(k.one(), 1); }

// g(t) with g(t)^p = f(t); needs f' = 0 over F_p.
UniPoly pth_root(const UniPoly& f) {
  const Field& k = f.field();
  const auto p = static_cast<int>(k.characteristic());
  std::vector<FieldElement> out;
  for (int i = 0; i <= f.degree(); i += p) out.push_back(f.coeff(i));
  return UniPoly(k, std::move(out));
}

void squarefree_into(const UniPoly& f, int scale, std::vector<Factor>& out) {
  const Field& k = f.field();
  if (f.degree() <= 0) return;
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) {
    // Remaining multiplicities are all divisible by p.
    squarefree_into(pth_root(c.monic()), scale * static_cast<int>(k.characteristic()), out);
  }
}

// p^d, saturating at the maximum uint64.
std::uint64_t saturating_pow(std::uint64_t p, int d) {
  std::uint64_t acc = 1;
  for (int i = 0; i < d; ++i) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    acc *= p;
  }
  return acc;
}

// Distinct-degree split of a monic squarefree f: pairs (product, degree).
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f) {
  const Field& k = f.field();
  const mpz_class p(static_cast<unsigned long>(k.characteristic()));
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly rest = f;
  UniPoly h = x_of(k) % rest;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = powmod(h, p, rest);
    UniPoly g = gcd(h - x_of(k), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

UniPoly random_poly(const Field& k, int below_degree, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.characteristic() - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i < below_degree; ++i) c.push_back(k.from_mpz(mpz_class(static_cast<unsigned long>(dist(rng)))));
  return UniPoly(k, std::move(c));
}

// Splits f (monic, product of distinct irreducibles of degree d) into its factors.
void equal_degree(const UniPoly& f, int d, Rng& rng, std::vector<UniPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& k = f.field();
  const std::uint64_t p = k.characteristic();
  for (;;) {
    const UniPoly a = random_poly(k, f.degree(), rng);
    if (a.degree() <= 0) continue;
    UniPoly b(k);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) mod f.
      UniPoly term = a % f;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b += term;
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - one_of(k);
    }
    if (b.is_zero()) continue;
    const UniPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

// All monic polynomials of degree d over F_p, in lexicographic residue order.
class MonicEnumerator {
 public:
  MonicEnumerator(Field k, int d) : k_(k), digits_(static_cast<std::size_t>(d), 0) {}

  UniPoly current() const {
    std::vector<FieldElement> c;
    for (auto v : digits_) c.push_back(k_.from_mpz(mpz_class(static_cast<unsigned long>(v))));
    c.push_back(k_.one());
    return UniPoly(k_, std::move(c));
  }

  bool next() {
    for (auto& v : digits_) {
      if (++v < k_.characteristic()) return true;
      v = 0;
    }
    return false;
  }

 private:
  Field k_;
  std::vector<std::uint64_t> digits_;
};

Factorization assemble(const UniPoly& f, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (auto c = a.poly <=> b.poly; c != 0) return c < 0;
    return a.multiplicity < b.multiplicity;
  });
  return {f.leading(), std::move(factors)};
}

}  // namespace

UniPoly Factorization::expand() const {
  UniPoly acc = UniPoly::constant(unit);
  for (const auto& fac : factors) acc *= fac.poly.pow(static_cast<unsigned>(fac.multiplicity));
  return acc;
}

std::vector<Factor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw PolyError("squarefree decomposition of the zero polynomial");
  std::vector<Factor> out;
  squarefree_into(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw PolyError("squarefree part of the zero polynomial");
  UniPoly acc = one_of(f.field());
  for (const auto& part : squarefree_decomposition(f)) acc *= part.poly;
  return acc;
}

namespace detail {

std::vector<UniPoly> split_squarefree_exhaustive(const UniPoly& f) {
  const Field& k = f.field();
  if (!k.is_prime_field()) throw PolyError("exhaustive splitting needs a prime field");
  std::vector<UniPoly> out;
  UniPoly rest = f.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    MonicEnumerator it(k, d);
    do {
      const UniPoly cand = it.current();
      auto [q, r] = divmod(rest, cand);
      if (r.is_zero()) {
        out.push_back(cand);
        rest = std::move(q);
      }
    } while (2 * d <= rest.degree() && it.next());
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UniPoly> split_squarefree_cantor_zassenhaus(const UniPoly& f, Rng& rng) {
  if (!f.field().is_prime_field()) throw PolyError("Cantor-Zassenhaus needs a prime field");
  std::vector<UniPoly> out;
  for (const auto& [g, d] : distinct_degree(f.monic())) equal_degree(g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

Factorization factor(const UniPoly& f, Rng& rng, const FactorOptions& options) {
  if (f.is_zero()) throw PolyError("cannot factor the zero polynomial");
  const Field& k = f.field();
  std::vector<Factor> factors;
  for (const auto& part : squarefree_decomposition(f)) {
    std::vector<UniPoly> irreducibles;
    if (k.is_rationals()) {
      irreducibles = detail::split_squarefree_rational(part.poly, rng, options);
    } else if (saturating_pow(k.characteristic(), part.poly.degree()) <= options.exhaustive_threshold) {
      irreducibles = detail::split_squarefree_exhaustive(part.poly);
    } else {
      irreducibles = detail::split_squarefree_cantor_zassenhaus(part.poly, rng);
    }
    for (auto& q : irreducibles) factors.push_back({std::move(q), part.multiplicity});
  }
  return assemble(f, std::move(factors));
}

Factorization factor(const UniPoly& f) {
  Rng rng(kDefaultSeed);
  return factor(f, rng);
}

std::vector<UniPoly> irreducible_factors(const UniPoly& f, Rng& rng) {
  std::vector<UniPoly> out;
  for (auto& fac : factor(f, rng).factors) out.push_back(std::move(fac.poly));
  return out;
}

}  // namespace kcomm
