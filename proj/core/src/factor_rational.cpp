// Factorization over Q: reduce to a primitive integer polynomial, factor
// modulo a good prime, Hensel-lift past the Mignotte bound and recombine.

#include <algorithm>
#include <numeric>
#include <optional>

#include "kcomm/factor.hpp"

namespace kcomm {

namespace {

using ZPoly = std::vector<mpz_class>;  // low to high, trimmed

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void zreduce(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zreduce(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zreduce(r, m);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zreduce(r, m);
  return r;
}

ZPoly zscale(const ZPoly& a, const mpz_class& s, const mpz_class& m) {
  ZPoly r = a;
  for (auto& c : r) c *= s;
  zreduce(r, m);
  return r;
}

// Division by a polynomial that is monic modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& h, const mpz_class& m) {
  const int dh = zdeg(h);
  if (zdeg(a) < dh) return {{}, a};
  ZPoly q(static_cast<std::size_t>(zdeg(a) - dh + 1), 0);
  for (int i = zdeg(a); i >= dh; --i) {
    mpz_class c = a[static_cast<std::size_t>(i)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dh)] = c;
    for (int j = 0; j <= dh; ++j) a[static_cast<std::size_t>(i - dh + j)] -= c * h[static_cast<std::size_t>(j)];
  }
  a.resize(static_cast<std::size_t>(dh));
  zreduce(a, m);
  zreduce(q, m);
  return {q, a};
}

ZPoly to_zpoly(const UniPoly& f) {
  ZPoly r;
  if (f.field().is_rationals()) {
    for (const auto& c : f.coeffs()) {
      if (c.rational().get_den() != 1) throw PolyError("expected an integer polynomial");
      r.push_back(c.rational().get_num());
    }
  } else {
    for (const auto& c : f.coeffs()) r.emplace_back(static_cast<unsigned long>(c.residue()));
  }
  return r;
}

UniPoly to_unipoly(const ZPoly& a, const Field& k) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(k.from_mpz(v));
  return UniPoly(k, std::move(c));
}

ZPoly symmetric(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (!a.empty() && a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Clears denominators and content of a rational polynomial.
ZPoly integer_primitive(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f.coeffs()) r.push_back(c.rational().get_num() * (den / c.rational().get_den()));
  return primitive_part(std::move(r));
}

bool is_prime(unsigned long p) {
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

// One quadratic Hensel step (f = g*h mod m with s*g + t*h = 1 mod m, h
// monic) lifting everything modulo `next`, a divisor of m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& next) {
  const ZPoly e = zsub(f, zmul(g, h, next), next);
  auto [q, r] = zdivmod_monic(zmul(s, e, next), h, next);
  ZPoly g2 = zadd(g, zadd(zmul(t, e, next), zmul(q, g, next), next), next);
  ZPoly h2 = zadd(h, r, next);
  const ZPoly one{1};
  const ZPoly b = zsub(zadd(zmul(s, g2, next), zmul(t, h2, next), next), one, next);
  auto [c, d] = zdivmod_monic(zmul(s, b, next), h2, next);
  s = zsub(s, d, next);
  t = zsub(t, zadd(zmul(t, b, next), zmul(c, g2, next), next), next);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts the monic factorization f = lc(f) * prod(factors) mod p to mod P = p^k.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<ZPoly>& factors, const Field& fp,
                                    const mpz_class& big) {
  const mpz_class p(static_cast<unsigned long>(fp.characteristic()));
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), big.get_mpz_t());
    return {zscale(f, inv, big)};
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<ZPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  const std::vector<ZPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());

  ZPoly g{f.back()};
  for (const auto& u : left) g = zmul(g, u, p);
  ZPoly h{1};
  for (const auto& u : right) h = zmul(h, u, p);

  const ExtendedGcd eg = extended_gcd(to_unipoly(g, fp), to_unipoly(h, fp));
  if (eg.gcd.degree() != 0) throw PolyError("internal: modular factors are not coprime");
  ZPoly s = to_zpoly(eg.s);
  ZPoly t = to_zpoly(eg.t);

  mpz_class m = p;
  while (m < big) {
    mpz_class next = m * m;
    if (next > big) next = big;
    hensel_step(f, g, h, s, t, next);
    m = next;
  }

  auto lg = multifactor_lift(g, left, fp, big);
  auto lh = multifactor_lift(h, right, fp, big);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

// Exact division test over Z for primitive divisors (Gauss's lemma).
bool divides_exactly(const ZPoly& d, const ZPoly& f, ZPoly& quotient) {
  const Field q = Field::rationals();
  auto [quo, rem] = divmod(to_unipoly(f, q), to_unipoly(d, q));
  if (!rem.is_zero()) return false;
  quotient.clear();
  for (const auto& c : quo.coeffs()) {
    if (c.rational().get_den() != 1) return false;
    quotient.push_back(c.rational().get_num());
  }
  return true;
}

UniPoly monic_rational(const ZPoly& a) { return to_unipoly(a, Field::rationals()).monic(); }

struct ModularImage {
  Field field;
  std::vector<ZPoly> factors;
};

ModularImage choose_prime(const ZPoly& f, Rng& rng) {
  constexpr int kCandidates = 5;
  std::optional<ModularImage> best;
  int good = 0;
  for (unsigned long p = 3; good < kCandidates; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
    const Field fp = Field::prime(p);
    const UniPoly image = to_unipoly(f, fp).monic();
    if (gcd(image, image.derivative()).degree() != 0) continue;
    ++good;
    Factorization fac = factor(image, rng);
    std::vector<ZPoly> zs;
    for (const auto& x : fac.factors) zs.push_back(to_zpoly(x.poly));
    if (!best || zs.size() < best->factors.size()) best = ModularImage{fp, std::move(zs)};
    if (best->factors.size() == 1) break;
  }
  return std::move(*best);
}

}  // namespace

namespace detail {

std::vector<UniPoly> split_squarefree_rational(const UniPoly& f, Rng& rng, const FactorOptions& options) {
  if (!f.field().is_rationals()) throw PolyError("expected a rational polynomial");
  if (f.degree() > options.max_rational_degree) {
    throw PolyError("degree too large: " + std::to_string(f.degree()) + " exceeds " +
                    std::to_string(options.max_rational_degree));
  }
  if (f.degree() <= 1) return {f.monic()};

  ZPoly F = integer_primitive(f);
  ModularImage img = choose_prime(F, rng);
  if (img.factors.size() == 1) return {f.monic()};

  // Mignotte-style bound: every factor's coefficients are at most 2^n * |F|_2.
  const int n = zdeg(F);
  mpz_class norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm << static_cast<mp_bitcnt_t>(n);
  bound *= 2 * abs(F.back());

  const mpz_class p(static_cast<unsigned long>(img.field.characteristic()));
  mpz_class big = p;
  while (big <= bound) big *= p;

  std::vector<ZPoly> lifted = multifactor_lift(F, img.factors, img.field, big);

  std::vector<UniPoly> out;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      ZPoly cand{F.back()};
      for (auto i : idx) cand = zmul(cand, lifted[i], big);
      cand = primitive_part(symmetric(std::move(cand), big));
      ZPoly quotient;
      if (divides_exactly(cand, F, quotient)) {
        out.push_back(monic_rational(cand));
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
        F = primitive_part(std::move(quotient));
        found = true;
        break;
      }
      // next combination
      std::size_t k = subset;
      while (k > 0 && idx[k - 1] == lifted.size() - subset + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < subset; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset;
  }
  if (zdeg(F) > 0) out.push_back(monic_rational(F));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

}  // namespace kcomm
