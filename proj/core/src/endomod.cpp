#include "kcomm/endomod.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kcomm {

// ---------------------------------------------------------------------------
// Tuples and submodules

CommutingTuple CommutingTuple::make(Field field, std::size_t nvars, std::size_t dim, std::vector<Matrix> mats) {
  if (nvars == 0) throw DimensionError("a tuple needs at least one endomorphism");
  if (mats.size() != nvars) {
    throw DimensionError("expected " + std::to_string(nvars) + " matrices, got " + std::to_string(mats.size()));
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != dim || mats[i].cols() != dim) {
      throw DimensionError("matrix " + std::to_string(i) + " is " + std::to_string(mats[i].rows()) + "x" +
                           std::to_string(mats[i].cols()) + ", expected " + std::to_string(dim) + "x" +
                           std::to_string(dim));
    }
    if (mats[i].field() != field) throw FieldError("matrix " + std::to_string(i) + " is over " + mats[i].field().name());
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      if (mats[i] * mats[j] != mats[j] * mats[i]) throw CommutationError(i, j);
    }
  }
  return CommutingTuple(field, dim, std::move(mats));
}

CommutingTuple CommutingTuple::zero(Field field, std::size_t nvars) {
  return make(field, nvars, 0, std::vector<Matrix>(nvars, Matrix(field, 0, 0)));
}

CommutingTuple CommutingTuple::block_diagonal(const CommutingTuple& a, const CommutingTuple& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("block sum of tuples with different arity");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < a.nvars(); ++i) mats.push_back(Matrix::block_diagonal(a.mats_[i], b.mats_[i]));
  return CommutingTuple(a.field_, a.dim_ + b.dim_, std::move(mats));
}

InvariantSubmodule InvariantSubmodule::make(const CommutingTuple& t, Subspace space) {
  if (space.ambient_dim() != t.dim()) throw DimensionError("subspace ambient dimension differs from the tuple's");
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    for (const auto& b : space.basis()) {
      if (!space.contains(t.mat(i).apply(b))) {
        throw NotInvariantError("subspace is not invariant under matrix " + std::to_string(i));
      }
    }
  }
  return InvariantSubmodule(std::move(space));
}

InvariantSubmodule generated_submodule(const CommutingTuple& t, const std::vector<Vector>& vectors) {
  EchelonBasis eb(t.field(), t.dim());
  std::vector<Vector> found;
  std::vector<Vector> queue = vectors;
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    if (v.size() != t.dim()) throw DimensionError("generator length differs from the tuple dimension");
    if (eb.insert_or_express(v)) continue;
    for (const auto& m : t.mats()) queue.push_back(m.apply(v));
    found.push_back(std::move(v));
  }
  return InvariantSubmodule::make(t, Subspace::span(t.field(), t.dim(), found));
}

CommutingTuple restrict_to(const CommutingTuple& t, const InvariantSubmodule& s) {
  if (s.parent_dim() != t.dim()) throw DimensionError("submodule belongs to a space of another dimension");
  const Subspace& sp = s.space();
  std::vector<Matrix> mats;
  for (const auto& m : t.mats()) {
    std::vector<Vector> cols;
    for (const auto& b : sp.basis()) {
      const Vector img = m.apply(b);
      if (!sp.contains(img)) throw NotInvariantError("subspace is not invariant");
      cols.push_back(sp.coordinates(img));
    }
    mats.push_back(Matrix::from_columns(t.field(), sp.dim(), cols));
  }
  return CommutingTuple::make(t.field(), t.nvars(), sp.dim(), std::move(mats));
}

CommutingTuple quotient_by(const CommutingTuple& t, const InvariantSubmodule& s) {
  if (s.parent_dim() != t.dim()) throw DimensionError("submodule belongs to a space of another dimension");
  const Subspace& sp = s.space();
  std::vector<bool> is_pivot(t.dim(), false);
  for (auto p : sp.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < t.dim(); ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }
  std::vector<Matrix> mats;
  for (const auto& m : t.mats()) {
    for (const auto& b : sp.basis()) {
      if (!sp.contains(m.apply(b))) throw NotInvariantError("subspace is not invariant");
    }
    Matrix q(t.field(), complement.size(), complement.size());
    for (std::size_t j = 0; j < complement.size(); ++j) {
      const Vector img = sp.reduce(m.column(complement[j]));
      for (std::size_t i = 0; i < complement.size(); ++i) q(i, j) = img[complement[i]];
    }
    mats.push_back(std::move(q));
  }
  return CommutingTuple::make(t.field(), t.nvars(), complement.size(), std::move(mats));
}

// ---------------------------------------------------------------------------
// Annihilator

Ideal annihilator_ideal(const CommutingTuple& t) {
  const Field& k = t.field();
  const std::size_t n = t.nvars();
  const std::size_t d = t.dim();

  EchelonBasis eb(k, d * d);
  std::vector<Monomial> standard;
  std::map<Monomial, Matrix> value;  // matrices of standard monomials
  std::vector<Monomial> leading;
  std::vector<MultiPoly> gens;

  std::set<Monomial> candidates{Monomial(n)};
  while (!candidates.empty()) {
    const Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); })) continue;

    Matrix mm = Matrix::identity(k, d);
    if (!m.is_one()) {
      bool built = false;
      for (std::size_t v = 0; v < n && !built; ++v) {
        if (m[v] == 0) continue;
        const Monomial prev = Monomial::variable(n, v).quotient_of(m);
        auto it = value.find(prev);
        if (it != value.end()) {
          mm = t.mat(v) * it->second;
          built = true;
        }
      }
      if (!built) throw std::logic_error("annihilator walk reached a monomial with no standard predecessor");
    }

    if (auto dep = eb.insert_or_express(mm.entries())) {
      MultiPoly g = MultiPoly::term(k.one(), m);
      for (std::size_t j = 0; j < dep->size(); ++j) g.add_term(-(*dep)[j], standard[j]);
      leading.push_back(m);
      gens.push_back(std::move(g));
    } else {
      standard.push_back(m);
      for (std::size_t v = 0; v < n; ++v) candidates.insert(m * Monomial::variable(n, v));
      value.emplace(m, std::move(mm));
    }
  }
  return Ideal::from_reduced_basis(k, n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Radical

InvariantSubmodule radical_submodule(const CommutingTuple& t) {
  Subspace acc(t.field(), t.dim());
  if (t.dim() != 0) {
    for (const auto& m : t.mats()) {
      const UniPoly s = squarefree_part(minimal_polynomial(m));
      acc = acc.sum(image(eval_poly_at_matrix(s, m)));
    }
  }
  return InvariantSubmodule::make(t, std::move(acc));
}

std::vector<CommutingTuple> radical_filtration(const CommutingTuple& t) {
  std::vector<CommutingTuple> layers;
  CommutingTuple current = t;
  while (current.dim() != 0) {
    const InvariantSubmodule rad = radical_submodule(current);
    if (rad.dim() == current.dim()) throw std::logic_error("radical did not shrink the module");
    layers.push_back(quotient_by(current, rad));
    current = restrict_to(current, rad);
  }
  return layers;
}

// ---------------------------------------------------------------------------
// Locality and primary decomposition

namespace {

// Matrix of a polynomial in the tuple's matrices.
Matrix evaluate(const MultiPoly& g, const CommutingTuple& t) { return eval_poly_at_matrix(g, t.mats()); }

bool has_single_irreducible(const UniPoly& minpoly, Rng& rng) {
  return irreducible_factors(minpoly, rng).size() <= 1;
}

MultiPoly combination(const Field& k, std::size_t nvars, const std::vector<Monomial>& basis, const Vector& coeffs) {
  MultiPoly g(k, nvars);
  for (std::size_t j = 0; j < basis.size(); ++j) g.add_term(coeffs[j], basis[j]);
  return g;
}

std::optional<MultiPoly> splitting_element_prime(const CommutingTuple& ss, const Ideal& ann) {
  // Berlekamp: the Frobenius-fixed subalgebra of a reduced algebra has one
  // dimension per simple factor.
  const Field& k = ss.field();
  const auto& basis = ann.standard_monomials();
  const std::size_t r = basis.size();
  if (r <= 1) return std::nullopt;
  EchelonBasis eb(k, ss.dim() * ss.dim());
  std::vector<Matrix> values;
  for (const auto& m : basis) {
    values.push_back(evaluate(MultiPoly::term(k.one(), m), ss));
    if (eb.insert_or_express(values.back().entries())) {
      throw std::logic_error("standard monomials act dependently");
    }
  }
  const mpz_class p(static_cast<unsigned long>(k.characteristic()));
  Matrix frob_minus_id(k, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    // values[j]^p, by repeated squaring on the bits of p
    Matrix acc = Matrix::identity(k, ss.dim());
    const std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    for (std::size_t b = bits; b-- > 0;) {
      acc = acc * acc;
      if (mpz_tstbit(p.get_mpz_t(), b) != 0) acc = acc * values[j];
    }
    auto coords = eb.express(acc.entries());
    if (!coords) throw std::logic_error("Frobenius image left the algebra");
    for (std::size_t i = 0; i < r; ++i) frob_minus_id(i, j) = (*coords)[i];
    frob_minus_id(j, j) -= k.one();
  }
  const Subspace fixed = kernel_basis(frob_minus_id);
  if (fixed.dim() <= 1) return std::nullopt;
  // basis[0] is the monomial 1; any fixed vector off the scalars splits.
  for (const auto& v : fixed.basis()) {
    bool scalar = true;
    for (std::size_t i = 1; i < r; ++i) scalar = scalar && v[i].is_zero();
    if (!scalar) return combination(k, ss.nvars(), basis, v);
  }
  throw std::logic_error("Frobenius-fixed subalgebra has no non-scalar element");
}

std::optional<MultiPoly> splitting_element_rational(const CommutingTuple& ss, const Ideal& ann, Rng& rng) {
  // Characteristic zero: some element generates the whole algebra, and the
  // algebra is a field iff that element's minimal polynomial is irreducible.
  const Field& k = ss.field();
  const auto& basis = ann.standard_monomials();
  const std::size_t r = basis.size();
  if (r <= 1) return std::nullopt;
  enum class Verdict { Splits, Field, Unknown };
  auto judge = [&](const MultiPoly& g) {
    const UniPoly mu = minimal_polynomial(evaluate(g, ss));
    if (irreducible_factors(mu, rng).size() >= 2) return Verdict::Splits;
    if (static_cast<std::size_t>(mu.degree()) == r) return Verdict::Field;
    return Verdict::Unknown;
  };
  auto try_candidate = [&](const MultiPoly& g, std::optional<MultiPoly>& out) {
    switch (judge(g)) {
      case Verdict::Splits:
        out = g;
        return true;
      case Verdict::Field:
        out.reset();
        return true;
      case Verdict::Unknown:
        break;
    }
    return false;
  };
  std::optional<MultiPoly> result;
  for (const auto& m : basis) {
    if (try_candidate(MultiPoly::term(k.one(), m), result)) return result;
  }
  long long range = 2;
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::uniform_int_distribution<long long> dist(-range, range);
    Vector c;
    for (std::size_t j = 0; j < r; ++j) c.push_back(k.from_int(dist(rng)));
    if (try_candidate(combination(k, ss.nvars(), basis, c), result)) return result;
    if (attempt % 20 == 19) range *= 4;
  }
  throw std::logic_error("no primitive element found for the residue algebra");
}

struct Piece {
  InvariantSubmodule submodule;
  CommutingTuple action;
};

// Splits a piece along the distinct irreducible factors of g's minimal
// polynomial. Returns an empty list when g's action is primary.
std::vector<Piece> split_by(const CommutingTuple& whole, const Piece& piece, const Matrix& g, Rng& rng) {
  const Factorization fac = factor(minimal_polynomial(g), rng);
  if (fac.factors.size() <= 1) return {};
  std::vector<Piece> out;
  const auto& basis = piece.submodule.space().basis();
  for (const auto& [q, e] : fac.factors) {
    const Subspace ker = kernel_basis(eval_poly_at_matrix(q.pow(static_cast<unsigned>(e)), g));
    std::vector<Vector> ambient;
    for (const auto& coords : ker.basis()) {
      Vector v = zero_vector(whole.field(), whole.dim());
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords[j] * basis[j][i];
      }
      ambient.push_back(std::move(v));
    }
    InvariantSubmodule sub = InvariantSubmodule::make(whole, Subspace::span(whole.field(), whole.dim(), ambient));
    CommutingTuple action = restrict_to(whole, sub);
    out.push_back({std::move(sub), std::move(action)});
  }
  return out;
}

struct LocalVerdict {
  std::optional<Matrix> splitter;  // set when the piece is not local
  std::optional<Ideal> residue;    // annihilator of the semisimple quotient when local
};

LocalVerdict examine(const CommutingTuple& t, Rng& rng) {
  for (const auto& m : t.mats()) {
    if (!has_single_irreducible(minimal_polynomial(m), rng)) return {m, std::nullopt};
  }
  const CommutingTuple ss = quotient_by(t, radical_submodule(t));
  Ideal ann = annihilator_ideal(ss);
  if (auto g = detail::splitting_element(ss, ann, rng)) return {evaluate(*g, t), std::nullopt};
  return {std::nullopt, std::move(ann)};
}

}  // namespace

namespace detail {

std::optional<MultiPoly> splitting_element(const CommutingTuple& ss, const Ideal& ann, Rng& rng) {
  if (ss.field().is_prime_field()) return splitting_element_prime(ss, ann);
  return splitting_element_rational(ss, ann, rng);
}

}  // namespace detail

MaximalIdealKey maximal_ideal_key(const CommutingTuple& t, Rng& rng) {
  if (t.dim() == 0) throw NotLocalError("the zero module has no maximal ideal");
  LocalVerdict verdict = examine(t, rng);
  if (!verdict.residue) throw NotLocalError("module is supported at more than one maximal ideal");
  MaximalIdealKey key(std::move(*verdict.residue));
  const std::size_t top = quotient_by(t, radical_submodule(t)).dim();
  if (top % key.residue_degree() != 0) {
    throw std::logic_error("semisimple quotient dimension is not a multiple of the residue degree");
  }
  return key;
}

MaximalIdealKey maximal_ideal_key(const CommutingTuple& t) {
  Rng rng(kDefaultSeed);
  return maximal_ideal_key(t, rng);
}

std::vector<PrimaryComponent> primary_decomposition(const CommutingTuple& t, Rng& rng) {
  std::vector<PrimaryComponent> done;
  if (t.dim() == 0) return done;
  std::vector<Piece> work;
  work.push_back({InvariantSubmodule::make(t, Subspace::full(t.field(), t.dim())), t});
  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    LocalVerdict verdict = examine(piece.action, rng);
    if (verdict.residue) {
      done.push_back({std::move(piece.submodule), std::move(piece.action), MaximalIdealKey(std::move(*verdict.residue))});
      continue;
    }
    auto parts = split_by(t, piece, *verdict.splitter, rng);
    if (parts.size() < 2) throw std::logic_error("splitting element failed to split");
    for (auto& p : parts) work.push_back(std::move(p));
  }
  std::sort(done.begin(), done.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.key < b.key; });
  return done;
}

std::vector<PrimaryComponent> primary_decomposition(const CommutingTuple& t) {
  Rng rng(kDefaultSeed);
  return primary_decomposition(t, rng);
}

}  // namespace kcomm
