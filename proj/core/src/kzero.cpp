#include "kcomm/kzero.hpp"

#include <sstream>

namespace kcomm {

// ---------------------------------------------------------------------------
// GrothendieckClass

long long GrothendieckClass::multiplicity(const MaximalIdealKey& key) const {
  auto it = support_.find(key);
  return it == support_.end() ? 0 : it->second;
}

void GrothendieckClass::add(const MaximalIdealKey& key, long long mult) {
  if (key.ideal().field() != field_ || key.ideal().nvars() != nvars_) {
    throw PolyError("key " + key.to_string() + " does not belong to this ring");
  }
  if (mult == 0) return;
  auto [it, inserted] = support_.try_emplace(key, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) support_.erase(it);
  }
}

long long GrothendieckClass::total_dimension() const {
  long long acc = 0;
  for (const auto& [key, mult] : support_) acc += mult * static_cast<long long>(key.residue_degree());
  return acc;
}

bool GrothendieckClass::is_effective() const {
  for (const auto& [key, mult] : support_) {
    if (mult <= 0) return false;
  }
  return true;
}

void GrothendieckClass::require_compatible(const GrothendieckClass& other) const {
  if (field_ != other.field_) throw FieldError("classes over different fields");
  if (nvars_ != other.nvars_) throw PolyError("classes over rings with different numbers of variables");
}

GrothendieckClass& GrothendieckClass::operator+=(const GrothendieckClass& rhs) {
  require_compatible(rhs);
  for (const auto& [key, mult] : rhs.support_) add(key, mult);
  return *this;
}

GrothendieckClass& GrothendieckClass::operator-=(const GrothendieckClass& rhs) {
  require_compatible(rhs);
  for (const auto& [key, mult] : rhs.support_) add(key, -mult);
  return *this;
}

std::string GrothendieckClass::to_string() const {
  std::string out;
  for (const auto& [key, mult] : support_) {
    if (!out.empty()) out += '\n';
    out += std::to_string(mult) + " * " + key.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// TildeClass

std::string ascending_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const FieldElement c = p.coeff(i);
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
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

UniPoly normalized_constant(const UniPoly& p) {
  if (p.is_zero() || p.constant_term().is_zero()) {
    throw PolyError("expected a polynomial with nonzero constant term, got " + p.to_string());
  }
  return p * p.constant_term().inv();
}

}  // namespace

TildeClass::TildeClass(Field field) : num_(UniPoly::constant(field.one())), den_(UniPoly::constant(field.one())) {}

TildeClass::TildeClass(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.field() != den_.field()) throw FieldError("numerator and denominator over different fields");
  num_ = normalized_constant(num_);
  den_ = normalized_constant(den_);
  const UniPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = normalized_constant(num_ / g);
    den_ = normalized_constant(den_ / g);
  }
}

TildeClass TildeClass::from_polynomial(UniPoly num) {
  const Field k = num.field();
  return TildeClass(std::move(num), UniPoly::constant(k.one()));
}

TildeClass TildeClass::inverse() const { return TildeClass(den_, num_); }

TildeClass operator*(const TildeClass& a, const TildeClass& b) {
  if (a.field() != b.field()) throw FieldError("tilde classes over different fields");
  return TildeClass(a.num_ * b.num_, a.den_ * b.den_);
}

std::string TildeClass::to_string() const {
  if (den_.is_one()) return ascending_string(num_);
  const std::string num = num_.degree() > 0 ? "(" + ascending_string(num_) + ")" : ascending_string(num_);
  return num + " / (" + ascending_string(den_) + ")";
}

// ---------------------------------------------------------------------------
// Classes of modules

GrothendieckClass k0_class(const CommutingTuple& t, Rng& rng) {
  GrothendieckClass c(t.field(), t.nvars());
  for (const auto& comp : primary_decomposition(t, rng)) {
    const std::size_t deg = comp.key.residue_degree();
    if (comp.submodule.dim() % deg != 0) {
      throw std::logic_error("component of dimension " + std::to_string(comp.submodule.dim()) +
                             " is not a multiple of residue degree " + std::to_string(deg));
    }
    c.add(comp.key, static_cast<long long>(comp.submodule.dim() / deg));
  }
  if (c.total_dimension() != static_cast<long long>(t.dim())) {
    throw std::logic_error("class dimension does not match module dimension");
  }
  return c;
}

GrothendieckClass k0_class(const CommutingTuple& t) {
  Rng rng(kDefaultSeed);
  return k0_class(t, rng);
}

UniPoly lambda_t(const Matrix& f) {
  if (!f.is_square()) throw DimensionError("lambda_t of a non-square matrix");
  return signed_reversal(charpoly(f));
}

KelleySpanierSplit kelley_spanier_split(const CommutingTuple& t) {
  if (t.nvars() != 1) throw DimensionError("the characteristic polynomial split needs exactly one endomorphism");
  return {static_cast<long long>(t.dim()), TildeClass::from_polynomial(lambda_t(t.mat(0)))};
}

namespace {

MaximalIdealKey principal_key(const UniPoly& q) {
  return MaximalIdealKey(Ideal::from_reduced_basis(q.field(), 1, {MultiPoly::from_unipoly(q)}));
}

// Monic generator of a principal one-variable key.
UniPoly principal_generator(const MaximalIdealKey& key) {
  const Ideal& id = key.ideal();
  if (id.nvars() != 1 || id.generators().size() != 1) {
    throw PolyError("key " + key.to_string() + " is not a principal ideal of k[t]");
  }
  return id.generators().front().to_unipoly();
}

void accumulate_factors(const UniPoly& p, long long sign, GrothendieckClass& out, Rng& rng) {
  for (const auto& [q, e] : factor(p, rng).factors) {
    const UniPoly r = q * q.constant_term().inv();
    out.add(principal_key(signed_reversal_inverse(r)), sign * e);
  }
}

}  // namespace

GrothendieckClass tilde_to_free_abelian(const TildeClass& a, Rng& rng) {
  GrothendieckClass out(a.field(), 1);
  accumulate_factors(a.numerator(), 1, out, rng);
  accumulate_factors(a.denominator(), -1, out, rng);
  return out;
}

GrothendieckClass tilde_to_free_abelian(const TildeClass& a) {
  Rng rng(kDefaultSeed);
  return tilde_to_free_abelian(a, rng);
}

TildeClass free_abelian_to_tilde(const GrothendieckClass& v) {
  if (v.nvars() != 1) throw PolyError("free_abelian_to_tilde needs a one-variable class");
  const Field& k = v.field();
  UniPoly num = UniPoly::constant(k.one());
  UniPoly den = UniPoly::constant(k.one());
  for (const auto& [key, mult] : v.support()) {
    const UniPoly q = principal_generator(key);
    if (q.constant_term().is_zero()) throw PolyError("the key [t] has no image in the rational-function group");
    const UniPoly r = signed_reversal(q).pow(static_cast<unsigned>(mult > 0 ? mult : -mult));
    if (mult > 0) {
      num *= r;
    } else {
      den *= r;
    }
  }
  return TildeClass(std::move(num), std::move(den));
}

KelleySpanierSplit comparison_image(const GrothendieckClass& c) {
  if (c.nvars() != 1) throw PolyError("comparison map needs a one-variable class");
  const Field& k = c.field();
  long long rank = 0;
  TildeClass tilde(k);
  for (const auto& [key, mult] : c.support()) {
    const UniPoly q = principal_generator(key);
    rank += mult * q.degree();
    if (q.constant_term().is_zero()) continue;  // [(t)] -> (1, 1)
    const UniPoly r = signed_reversal(q).pow(static_cast<unsigned>(mult > 0 ? mult : -mult));
    const TildeClass factor_class = TildeClass::from_polynomial(r);
    tilde = tilde * (mult > 0 ? factor_class : factor_class.inverse());
  }
  return {rank, std::move(tilde)};
}

bool compare_splittings(const CommutingTuple& t, Rng& rng) {
  if (t.nvars() != 1) throw DimensionError("comparison of splittings needs exactly one endomorphism");
  return kelley_spanier_split(t) == comparison_image(k0_class(t, rng));
}

bool compare_splittings(const CommutingTuple& t) {
  Rng rng(kDefaultSeed);
  return compare_splittings(t, rng);
}

bool verify_additivity(const CommutingTuple& t, const InvariantSubmodule& s, Rng& rng) {
  const GrothendieckClass whole = k0_class(t, rng);
  const GrothendieckClass parts = k0_class(restrict_to(t, s), rng) + k0_class(quotient_by(t, s), rng);
  return whole == parts;
}

bool verify_additivity(const CommutingTuple& t, const InvariantSubmodule& s) {
  Rng rng(kDefaultSeed);
  return verify_additivity(t, s, rng);
}

}  // namespace kcomm
