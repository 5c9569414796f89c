#include <gtest/gtest.h>

#include <algorithm>

#include "kcomm/kzero.hpp"
#include "kcomm/text.hpp"
#include "support/generators.hpp"

namespace kcomm {
namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

Matrix M(const char* text, const Field& k) { return parse_matrix(text, k); }
UniPoly up(const char* text, const Field& k) { return parse_unipoly(text, k); }

CommutingTuple single(const char* text, const Field& k) {
  Matrix m = M(text, k);
  const std::size_t d = m.rows();
  return CommutingTuple::make(k, 1, d, {std::move(m)});
}

MaximalIdealKey key1(const char* gen, const Field& k) {
  return MaximalIdealKey(Ideal::from_reduced_basis(k, 1, {parse_polynomial(gen, k, 1)}));
}

GrothendieckClass cls(const Field& k, std::initializer_list<std::pair<const char*, long long>> entries) {
  GrothendieckClass c(k, 1);
  for (const auto& [gen, mult] : entries) c.add(key1(gen, k), mult);
  return c;
}

TildeClass tilde(const char* text, const Field& k) {
  auto [num, den] = parse_rational_function(text, k);
  return TildeClass(num, den);
}

TEST(KZero, ClassExamples) {
  EXPECT_EQ(k0_class(single("[[0,0];[0,0]]", Q)), cls(Q, {{"t", 2}}));
  EXPECT_EQ(k0_class(single("[[0,0];[0,1]]", Q)), cls(Q, {{"t", 1}, {"t - 1", 1}}));
  EXPECT_EQ(k0_class(single("[[0,-1];[1,0]]", F3)), cls(F3, {{"t^2 + 1", 1}}));

  const CommutingTuple pair = CommutingTuple::make(F2, 2, 2, {M("[[0,1];[0,0]]", F2), Matrix(F2, 2, 2)});
  const GrothendieckClass c = k0_class(pair);
  EXPECT_EQ(c.to_string(), "2 * [t1, t2]");
  EXPECT_EQ(c.total_dimension(), 2);
}

TEST(KZero, ClassOfZeroModule) {
  EXPECT_TRUE(k0_class(CommutingTuple::zero(Q, 2)).is_zero());
  EXPECT_EQ(k0_class(CommutingTuple::zero(Q, 2)).to_string(), "");
}

TEST(KZero, ClassArithmetic) {
  EXPECT_TRUE((cls(Q, {{"t", 2}}) + cls(Q, {{"t", -2}})).is_zero());
  EXPECT_EQ(cls(Q, {{"t", 1}}) + cls(Q, {{"t - 1", 1}}), cls(Q, {{"t", 1}, {"t - 1", 1}}));
  EXPECT_EQ(cls(Q, {{"t", 3}}) - cls(Q, {{"t", 1}}), cls(Q, {{"t", 2}}));
  EXPECT_THROW(cls(Q, {{"t", 1}}) + cls(F2, {{"t", 1}}), FieldError);
  EXPECT_THROW(cls(Q, {{"t", 1}}) + GrothendieckClass(Q, 2), PolyError);
  EXPECT_FALSE(cls(Q, {{"t", 1}, {"t - 1", -1}}).is_effective());
}

TEST(KZero, DirectSumAdditivity) {
  Rng rng(61);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + i % 3;
      const CommutingTuple a = testgen::random_tuple(k, n, 4, rng);
      const CommutingTuple b = testgen::random_tuple(k, n, 3, rng);
      EXPECT_EQ(k0_class(CommutingTuple::block_diagonal(a, b), rng), k0_class(a, rng) + k0_class(b, rng));
    }
  }
}

TEST(KZero, DimensionBookkeepingAndEffectivity) {
  Rng rng(67);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 40; ++i) {
      const CommutingTuple t = testgen::random_tuple(k, 1 + i % 3, 6, rng);
      const GrothendieckClass c = k0_class(t, rng);
      EXPECT_EQ(c.total_dimension(), static_cast<long long>(t.dim()));
      EXPECT_TRUE(c.is_effective());
    }
  }
}

TEST(KZero, LambdaT) {
  EXPECT_EQ(lambda_t(Matrix(Q, 3, 3)), up("1", Q));
  EXPECT_EQ(lambda_t(Matrix::identity(Q, 2)), up("1 + 2*t + t^2", Q));
  EXPECT_EQ(lambda_t(M("[[0,-1];[1,0]]", Q)), up("1 + t^2", Q));
  EXPECT_THROW(lambda_t(Matrix(Q, 2, 3)), DimensionError);
}

// det(I + t f) expanded over permutations, entries in k[t].
UniPoly det_one_plus_tf(const Matrix& f) {
  const Field& k = f.field();
  const std::size_t d = f.rows();
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  UniPoly total(k);
  do {
    UniPoly term = UniPoly::constant(k.one());
    for (std::size_t i = 0; i < d; ++i) {
      UniPoly entry = UniPoly::monomial(f(i, perm[i]), 1);
      if (i == perm[i]) entry += UniPoly::constant(k.one());
      term *= entry;
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    total += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(KZero, LambdaTMatchesDeterminantExpansion) {
  Rng rng(71);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 30; ++i) {
      const Matrix f = testgen::any_random_matrix(k, 1 + i % 5, rng);
      EXPECT_EQ(lambda_t(f), det_one_plus_tf(f)) << f.to_string();
    }
  }
}

TEST(KZero, LambdaTMultiplicativeAndKillsNilpotents) {
  Rng rng(73);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 30; ++i) {
      const Matrix f = testgen::any_random_matrix(k, 1 + i % 4, rng);
      const Matrix g = testgen::any_random_matrix(k, 1 + i % 3, rng);
      EXPECT_EQ(lambda_t(Matrix::block_diagonal(f, g)), lambda_t(f) * lambda_t(g));
    }
    Matrix n(k, 4, 4);  // strictly upper triangular
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) n(a, b) = testgen::random_scalar(k, rng);
    EXPECT_TRUE(lambda_t(n).is_one());
  }
}

TEST(KZero, KelleySpanierExamples) {
  const KelleySpanierSplit diag = kelley_spanier_split(single("[[0,0];[0,1]]", Q));
  EXPECT_EQ(diag.rank, 2);
  EXPECT_EQ(diag.tilde, tilde("1 + t", Q));
  const KelleySpanierSplit j = kelley_spanier_split(single("[[0,1];[0,0]]", Q));
  EXPECT_EQ(j.rank, 2);
  EXPECT_TRUE(j.tilde.is_one());
  const KelleySpanierSplit c = kelley_spanier_split(single("[[0,-1];[1,0]]", F3));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.tilde, tilde("1 + t^2", F3));
  EXPECT_THROW(kelley_spanier_split(CommutingTuple::zero(Q, 2)), DimensionError);
}

TEST(KZero, TildeGroup) {
  EXPECT_TRUE((tilde("1 + t", Q) * tilde("1/(1 + t)", Q)).is_one());
  EXPECT_EQ(tilde("(1 + 2*t + t^2)/(1 + t)", Q), tilde("1 + t", Q));
  const TildeClass inv = tilde("1 + t", Q).inverse();
  EXPECT_EQ(inv.numerator(), up("1", Q));
  EXPECT_EQ(inv.denominator(), up("1 + t", Q));
  EXPECT_EQ(inv.to_string(), "1 / (1 + t)");
  EXPECT_EQ(tilde("(2 + 2*t)/(4 - 4*t^2)", Q).to_string(), "1 / (1 - t)");
  EXPECT_THROW(tilde("t", Q), PolyError);
  EXPECT_THROW(tilde("1 + t", Q) * tilde("1 + t", F5), FieldError);
}

TEST(KZero, TildeToFreeAbelianExamples) {
  EXPECT_TRUE(tilde_to_free_abelian(TildeClass(Q)).is_zero());
  // 1 + t is the signed reversal of the monic t - 1 (eigenvalue 1).
  EXPECT_EQ(tilde_to_free_abelian(tilde("1 + t", Q)), cls(Q, {{"t - 1", 1}}));
  EXPECT_EQ(tilde_to_free_abelian(tilde("(1 + 2*t + t^2)/(1 + t)", Q)), cls(Q, {{"t - 1", 1}}));
  EXPECT_EQ(tilde_to_free_abelian(tilde("(1 + t^2)/(1 - t)^2", F3)), cls(F3, {{"t^2 + 1", 1}, {"t + 1", -2}}));
}

TEST(KZero, FreeAbelianToTildeExamples) {
  EXPECT_TRUE(free_abelian_to_tilde(GrothendieckClass(Q, 1)).is_one());
  EXPECT_EQ(free_abelian_to_tilde(cls(Q, {{"t - 1", 1}})), tilde("1 + t", Q));
  EXPECT_EQ(free_abelian_to_tilde(cls(Q, {{"t + 1", -1}})), tilde("1/(1 - t)", Q));
  EXPECT_THROW(free_abelian_to_tilde(cls(Q, {{"t", 1}})), PolyError);
  EXPECT_THROW(free_abelian_to_tilde(GrothendieckClass(Q, 2)), PolyError);
}

TEST(KZero, CompareSplittingsExamples) {
  EXPECT_TRUE(compare_splittings(single("[[0,0];[0,1]]", Q)));
  EXPECT_TRUE(compare_splittings(single("[[0,1];[0,0]]", Q)));
  EXPECT_TRUE(compare_splittings(single("[[0,-1];[1,0]]", F3)));
  const KelleySpanierSplit img = comparison_image(cls(Q, {{"t", 1}, {"t - 1", 1}}));
  EXPECT_EQ(img.rank, 2);
  EXPECT_EQ(img.tilde, tilde("1 + t", Q));
  EXPECT_THROW(compare_splittings(CommutingTuple::zero(Q, 2)), DimensionError);
}

TEST(KZero, VerifyAdditivityExamples) {
  const CommutingTuple j = single("[[0,1];[0,0]]", Q);
  EXPECT_TRUE(verify_additivity(j, generated_submodule(j, {})));
  EXPECT_TRUE(verify_additivity(j, InvariantSubmodule::make(j, Subspace::full(Q, 2))));
  const InvariantSubmodule line = generated_submodule(j, {unit_vector(Q, 2, 0)});
  EXPECT_TRUE(verify_additivity(j, line));
  EXPECT_EQ(k0_class(restrict_to(j, line)), cls(Q, {{"t", 1}}));
}

TEST(KZero, DevissageOnRandomTuples) {
  Rng rng(79);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 25; ++i) {
      const CommutingTuple t = testgen::random_tuple(k, 1 + i % 3, 6, rng);
      GrothendieckClass layers(k, t.nvars());
      for (const auto& layer : radical_filtration(t)) layers += k0_class(layer, rng);
      EXPECT_EQ(layers, k0_class(t, rng));
    }
  }
}

TEST(KZero, TildeHomomorphismAndRoundTrips) {
  Rng rng(83);
  for (const Field& k : {Q, F5}) {
    for (int i = 0; i < 40; ++i) {
      auto random_tilde = [&] {
        UniPoly num = testgen::random_poly(k, 1 + i % 8, rng);
        UniPoly den = testgen::random_poly(k, i % 5, rng);
        num += UniPoly::constant(k.one()) - UniPoly::constant(num.constant_term());
        den += UniPoly::constant(k.one()) - UniPoly::constant(den.constant_term());
        return TildeClass(num, den);
      };
      const TildeClass a = random_tilde();
      const TildeClass b = random_tilde();
      EXPECT_EQ(tilde_to_free_abelian(a * b, rng), tilde_to_free_abelian(a, rng) + tilde_to_free_abelian(b, rng));
      EXPECT_EQ(free_abelian_to_tilde(tilde_to_free_abelian(a, rng)), a);
      const GrothendieckClass v = tilde_to_free_abelian(b, rng);
      EXPECT_EQ(tilde_to_free_abelian(free_abelian_to_tilde(v), rng), v);
    }
  }
}

}  // namespace
}  // namespace kcomm
