#include "kcomm/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace kcomm {

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw FieldError("coefficient from " + c.field().name() + " in " + field_.name());
  }
  trim();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, int n) {
  std::vector<FieldElement> v(static_cast<std::size_t>(n) + 1, c.field().zero());
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(Field field, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(field.from_int(c));
  return UniPoly(field, std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same_field(const UniPoly& other) const {
  if (field_ != other.field_) {
    throw FieldError("mixed-field polynomial operation: " + field_.name() + " vs " + other.field_.name());
  }
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const FieldElement& UniPoly::leading() const {
  if (is_zero()) throw PolyError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw PolyError("cannot make the zero polynomial monic");
  return *this * leading().inv();
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[static_cast<std::size_t>(i)] * field_.from_int(i));
  return UniPoly(field_, std::move(d));
}

FieldElement UniPoly::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.field_, std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const FieldElement& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly acc = constant(field_.one());
  UniPoly base = *this;
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b) {
  if (auto c = a.field_ <=> b.field_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i) {
    if (auto c = a.coeffs_[static_cast<std::size_t>(i)] <=> b.coeffs_[static_cast<std::size_t>(i)]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.is_negative();
    const FieldElement mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw PolyError("polynomial division by zero");
  if (f.field() != g.field()) throw FieldError("mixed-field polynomial division");
  const Field& k = f.field();
  if (f.degree() < g.degree()) return {UniPoly(k), f};
  std::vector<FieldElement> rem = f.coeffs();
  std::vector<FieldElement> quot(static_cast<std::size_t>(f.degree() - g.degree() + 1), k.zero());
  const FieldElement lead_inv = g.leading().inv();
  const auto dg = static_cast<std::size_t>(g.degree());
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    const FieldElement q = rem[i] * lead_inv;
    quot[i - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeffs()[j];
  }
  rem.resize(dg);
  return {UniPoly(k, std::move(quot)), UniPoly(k, std::move(rem))};
}

UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divmod(f, g).second; }
UniPoly operator/(const UniPoly& f, const UniPoly& g) { return divmod(f, g).first; }

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw PolyError("gcd of two zero polynomials");
  UniPoly a = f;
  UniPoly b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly lcm(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly(f.field());
  return ((f * g) / gcd(f, g)).monic();
}

ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw PolyError("gcd of two zero polynomials");
  const Field& k = f.field();
  UniPoly r0 = f, r1 = g;
  UniPoly s0 = UniPoly::constant(k.one()), s1(k);
  UniPoly t0(k), t1 = UniPoly::constant(k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const FieldElement li = r0.leading().inv();
  return {r0 * li, s0 * li, t0 * li};
}

UniPoly powmod(const UniPoly& base, const mpz_class& e, const UniPoly& m) {
  if (e < 0) throw PolyError("negative exponent in powmod");
  UniPoly acc = UniPoly::constant(base.field().one()) % m;
  UniPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) acc = (acc * b) % m;
  }
  return acc;
}

UniPoly signed_reversal(const UniPoly& q) {
  if (!q.is_monic()) throw PolyError("signed reversal expects a monic polynomial");
  const int d = q.degree();
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const FieldElement c = q.coeff(d - j);
    out.push_back(j % 2 == 0 ? c : -c);
  }
  return UniPoly(q.field(), std::move(out));
}

UniPoly signed_reversal_inverse(const UniPoly& r) {
  if (r.is_zero() || !r.constant_term().is_one()) {
    throw PolyError("inverse signed reversal expects constant term 1");
  }
  const int d = r.degree();
  std::vector<FieldElement> out(static_cast<std::size_t>(d) + 1, r.field().zero());
  for (int j = 0; j <= d; ++j) {
    const FieldElement c = r.coeff(j);
    out[static_cast<std::size_t>(d - j)] = j % 2 == 0 ? c : -c;
  }
  return UniPoly(r.field(), std::move(out));
}

}  // namespace kcomm
