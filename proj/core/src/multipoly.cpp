#include "kcomm/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace kcomm {

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exps_.at(i) = 1;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  // t1 > t2 > ...: the first differing exponent decides.
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string variable_name(std::size_t nvars, std::size_t i) {
  return nvars == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(exps_.size(), i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly MultiPoly::constant(Field field, std::size_t nvars, const FieldElement& c) {
  MultiPoly p(field, nvars);
  p.add_term(c, Monomial(nvars));
  return p;
}

MultiPoly MultiPoly::term(const FieldElement& c, const Monomial& m) {
  MultiPoly p(c.field(), m.nvars());
  p.add_term(c, m);
  return p;
}

MultiPoly MultiPoly::variable(Field field, std::size_t nvars, std::size_t i) {
  return term(field.one(), Monomial::variable(nvars, i));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u) {
  MultiPoly p(u.field(), 1);
  for (int i = 0; i <= u.degree(); ++i) {
    p.add_term(u.coeff(i), Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}));
  }
  return p;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (is_zero()) throw PolyError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (is_zero()) throw PolyError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::uint64_t MultiPoly::total_degree() const {
  return is_zero() ? 0 : leading_monomial().total_degree();
}

MultiPoly MultiPoly::monic() const { return *this * leading_coefficient().inv(); }

UniPoly MultiPoly::to_unipoly() const {
  if (nvars_ != 1) throw PolyError("to_unipoly needs a one-variable polynomial");
  std::vector<FieldElement> c(static_cast<std::size_t>(total_degree()) + 1, field_.zero());
  for (const auto& [m, v] : terms_) c[m[0]] = v;
  return UniPoly(field_, std::move(c));
}

void MultiPoly::add_term(const FieldElement& c, const Monomial& m) {
  if (c.field() != field_) throw FieldError("coefficient from " + c.field().name() + " in " + field_.name());
  if (m.nvars() != nvars_) throw PolyError("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (field_ != other.field_) throw FieldError("mixed-field polynomial operation");
  if (nvars_ != other.nvars_) {
    throw PolyError("arity mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + " variables");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(c, m);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(-c, m);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly r(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(field_, nvars_, field_.one());
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.is_negative();
    const FieldElement mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else if (mag.is_one()) {
      os << m.to_string();
    } else {
      os << mag << '*' << m.to_string();
    }
  }
  return os.str();
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  for (const auto& b : basis) {
    if (b.is_zero()) throw PolyError("normal form against a zero basis element");
    if (b.field() != p.field()) throw FieldError("mixed-field normal form");
    if (b.nvars() != p.nvars()) throw PolyError("arity mismatch in normal form");
  }
  MultiPoly rest = p;
  MultiPoly remainder(p.field(), p.nvars());
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const FieldElement lc = rest.leading_coefficient();
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.leading_monomial().divides(lm)) {
        const FieldElement factor = lc / b.leading_coefficient();
        rest -= b * MultiPoly::term(factor, b.leading_monomial().quotient_of(lm));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.add_term(lc, lm);
      rest.add_term(-lc, lm);
    }
  }
  return remainder;
}

}  // namespace kcomm
