#include "kcomm/ideal.hpp"

#include <algorithm>
#include <set>

namespace kcomm {

Ideal Ideal::unit(Field field, std::size_t nvars) {
  Ideal id(field, nvars);
  id.gens_.push_back(MultiPoly::constant(field, nvars, field.one()));
  return id;
}

Ideal Ideal::from_reduced_basis(Field field, std::size_t nvars, std::vector<MultiPoly> gens) {
  if (gens.empty()) throw PolyError("the zero ideal is not zero-dimensional");
  for (auto& g : gens) {
    if (g.is_zero()) throw PolyError("zero generator in ideal basis");
    if (g.field() != field || g.nvars() != nvars) throw PolyError("generator does not live in the ambient ring");
    g = g.monic();
  }
  std::sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.leading_monomial() > b.leading_monomial();
  });

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = gens[j].leading_monomial();
      for (const auto& [m, c] : gens[i].terms()) {
        if (lj.divides(m)) {
          throw PolyError("not a reduced Groebner basis: " + gens[i].to_string() + " has a term divisible by the leading monomial of " +
                          gens[j].to_string());
        }
      }
    }
  }

  Ideal id(field, nvars);
  const bool unit = gens.size() == 1 && gens.front().leading_monomial().is_one();
  id.gens_ = std::move(gens);
  if (unit) return id;

  // Each variable needs a pure power among the leading monomials.
  for (std::size_t v = 0; v < nvars; ++v) {
    const bool has_pure_power = std::any_of(id.gens_.begin(), id.gens_.end(), [&](const MultiPoly& g) {
      const Monomial& lm = g.leading_monomial();
      return lm.total_degree() == lm[v];
    });
    if (!has_pure_power) throw PolyError("ideal is not zero-dimensional (no pure power of " + variable_name(nvars, v) + ")");
  }

  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(nvars)};
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    if (seen.count(m) != 0) continue;
    const bool divisible = std::any_of(id.gens_.begin(), id.gens_.end(),
                                       [&](const MultiPoly& g) { return g.leading_monomial().divides(m); });
    if (divisible) continue;
    seen.insert(m);
    for (std::size_t v = 0; v < nvars; ++v) frontier.push_back(m * Monomial::variable(nvars, v));
  }
  id.standard_.assign(seen.begin(), seen.end());

  // A Groebner basis of a zero-dimensional ideal reduces every S-polynomial
  // to zero; this is what makes the standard monomials a basis.
  for (std::size_t i = 0; i < id.gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < id.gens_.size(); ++j) {
      const Monomial& a = id.gens_[i].leading_monomial();
      const Monomial& b = id.gens_[j].leading_monomial();
      std::vector<std::uint32_t> l(nvars);
      for (std::size_t v = 0; v < nvars; ++v) l[v] = std::max(a[v], b[v]);
      const Monomial lcm_ab(l);
      const MultiPoly s = id.gens_[i] * MultiPoly::term(field.one(), a.quotient_of(lcm_ab)) -
                          id.gens_[j] * MultiPoly::term(field.one(), b.quotient_of(lcm_ab));
      if (!id.reduce(s).is_zero()) throw PolyError("generators do not form a Groebner basis");
    }
  }
  return id;
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string out;
  for (const auto& s : generator_strings()) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

MaximalIdealKey::MaximalIdealKey(Ideal ideal) : ideal_(std::move(ideal)), rendered_(ideal_.generator_strings()) {
  if (ideal_.is_unit()) throw PolyError("the unit ideal is not maximal");
}

std::string MaximalIdealKey::to_string() const { return "[" + ideal_.to_string() + "]"; }

std::strong_ordering operator<=>(const MaximalIdealKey& a, const MaximalIdealKey& b) {
  if (auto c = a.residue_degree() <=> b.residue_degree(); c != 0) return c;
  if (auto c = a.ideal_.field() <=> b.ideal_.field(); c != 0) return c;
  return a.rendered_ <=> b.rendered_;
}

}  // namespace kcomm
