// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kcomm/factor.hpp"
#include "kcomm/kzero.hpp"
#include "kcomm/oracle.hpp"
#include "support/generators.hpp"

namespace {

using namespace kcomm;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;

  void fail(const std::string& what) {
    if (ok) detail = what;  // keep the first counterexample
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 means no time limit
  std::function<Outcome()> run;
};

// Random element of the centralizer of a, so (a, b) is a commuting pair that
// need not lie in k[a].
Matrix random_commuting_partner(const Matrix& a, Rng& rng) {
  const Field& k = a.field();
  const std::size_t d = a.rows();
  // Column (i,j) of the map X -> AX - XA applied to the elementary matrix E_ij.
  Matrix op(k, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix e(k, d, d);
      e(i, j) = k.one();
      const Matrix c = a * e - e * a;
      for (std::size_t r = 0; r < d * d; ++r) op(r, i * d + j) = c(r / d, r % d);
    }
  }
  Matrix b(k, d, d);
  const Subspace centralizer = kernel_basis(op);
  for (const Vector& v : centralizer.basis()) {
    const FieldElement s = testgen::random_scalar(k, rng, 2);
    for (std::size_t r = 0; r < d * d; ++r) b(r / d, r % d) += s * v[r];
  }
  return b;
}

Outcome oracle_agreement() {
  Outcome out;
  const Field f2 = Field::prime(2);
  for (std::uint64_t code = 0; code < 512; ++code) {
    const CommutingTuple t = CommutingTuple::make(f2, 1, 3, {testgen::matrix_from_code(f2, 3, code)});
    ++out.checked;
    if (k0_class(t) != oracle::k0_class_oracle(t)) out.fail("3x3 matrix code " + std::to_string(code));
  }
  Rng rng(1001);
  for (int i = 0; i < 100; ++i) {
    const Field k = Field::prime(i % 2 == 0 ? 2 : 3);
    const std::size_t d = 1 + static_cast<std::size_t>(i) % 4;
    CommutingTuple t = testgen::random_tuple(k, 2, 4, rng);
    if (i % 2 == 1) {
      const Matrix a = testgen::any_random_matrix(k, d, rng);
      t = CommutingTuple::make(k, 2, d, {a, random_commuting_partner(a, rng)});
    }
    ++out.checked;
    if (k0_class(t, rng) != oracle::k0_class_oracle(t)) {
      out.fail("pair over " + k.name() + ": " + t.mat(0).to_string() + " " + t.mat(1).to_string());
    }
  }
  return out;
}

Outcome dimension_identity() {
  Outcome out;
  Rng rng(1002);
  const std::vector<Field> fields = testgen::small_fields();
  for (int i = 0; i < 500; ++i) {
    const Field& k = fields[static_cast<std::size_t>(i) % fields.size()];
    const CommutingTuple t = testgen::random_tuple(k, 1 + static_cast<std::size_t>(i / 4) % 3, 6, rng);
    const GrothendieckClass c = k0_class(t, rng);
    ++out.checked;
    if (c.total_dimension() != static_cast<long long>(t.dim()) || !c.is_effective()) {
      out.fail(k.name() + " tuple of dim " + std::to_string(t.dim()) + " gives " + c.to_string());
    }
  }
  return out;
}

// The 200 tuples shared by the additivity and devissage criteria.
std::vector<CommutingTuple> shared_tuples() {
  Rng rng(1003);
  const std::vector<Field> fields = testgen::small_fields();
  std::vector<CommutingTuple> ts;
  for (int i = 0; i < 200; ++i) {
    const Field& k = fields[static_cast<std::size_t>(i) % fields.size()];
    ts.push_back(testgen::random_tuple(k, 1 + static_cast<std::size_t>(i / 4) % 3, 6, rng));
  }
  return ts;
}

Outcome additivity() {
  Outcome out;
  Rng rng(1004);
  for (const CommutingTuple& t : shared_tuples()) {
    std::vector<Vector> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(testgen::random_vector(t.field(), t.dim(), rng));
    const InvariantSubmodule s = generated_submodule(t, gens);
    ++out.checked;
    if (!verify_additivity(t, s, rng)) out.fail(t.field().name() + " submodule of dim " + std::to_string(s.dim()));
  }
  return out;
}

Outcome devissage() {
  Outcome out;
  Rng rng(1005);
  for (const CommutingTuple& t : shared_tuples()) {
    GrothendieckClass layers(t.field(), t.nvars());
    bool semisimple = true;
    for (const CommutingTuple& layer : radical_filtration(t)) {
      layers += k0_class(layer, rng);
      semisimple = semisimple && radical_submodule(layer).dim() == 0;
    }
    ++out.checked;
    if (!semisimple) out.fail("a radical layer is not semisimple");
    if (layers != k0_class(t, rng)) out.fail(t.field().name() + " layers sum to " + layers.to_string());
  }
  return out;
}

Matrix random_nilpotent(const Field& k, std::size_t d, Rng& rng) {
  Matrix n(k, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) n(i, j) = testgen::random_scalar(k, rng, 2);
  // Conjugate by a unipotent lower triangular matrix and its explicit inverse.
  Matrix l = Matrix::identity(k, d);
  if (d >= 2) l(d - 1, 0) = testgen::random_scalar(k, rng, 2);
  Matrix l_inv = Matrix::identity(k, d);
  if (d >= 2) l_inv(d - 1, 0) = -l(d - 1, 0);
  return l * n * l_inv;
}

Outcome splitting_comparison() {
  Outcome out;
  Rng rng(1006);
  for (const Field& k : testgen::small_fields()) {
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = static_cast<std::size_t>(i) % 7;
      const Matrix a = testgen::any_random_matrix(k, d, rng);
      const CommutingTuple t = CommutingTuple::make(k, 1, d, {a});
      ++out.checked;
      if (!compare_splittings(t, rng)) out.fail(k.name() + " matrix " + a.to_string());

      const Matrix b = testgen::any_random_matrix(k, 1 + static_cast<std::size_t>(i) % 4, rng);
      if (lambda_t(Matrix::block_diagonal(a, b)) != lambda_t(a) * lambda_t(b)) {
        out.fail(k.name() + " lambda_t not multiplicative on " + a.to_string() + " (+) " + b.to_string());
      }
      const Matrix n = random_nilpotent(k, 1 + static_cast<std::size_t>(i) % 6, rng);
      if (!lambda_t(n).is_one()) out.fail(k.name() + " lambda_t of nilpotent " + n.to_string());
    }
  }
  return out;
}

TildeClass random_tilde(const Field& k, Rng& rng) {
  auto unit_constant = [&](int degree) {
    UniPoly p = testgen::random_poly(k, degree, rng);
    return p + UniPoly::constant(k.one()) - UniPoly::constant(p.constant_term());
  };
  std::uniform_int_distribution<int> deg(0, 8);
  return TildeClass(unit_constant(deg(rng)), unit_constant(deg(rng)));
}

Outcome tilde_correspondence() {
  Outcome out;
  Rng rng(1007);
  for (const Field& k : {Field::rationals(), Field::prime(5)}) {
    for (int i = 0; i < 200; ++i) {
      const TildeClass a = random_tilde(k, rng);
      const TildeClass b = random_tilde(k, rng);
      const GrothendieckClass va = tilde_to_free_abelian(a, rng);
      const GrothendieckClass vb = tilde_to_free_abelian(b, rng);
      ++out.checked;
      if (tilde_to_free_abelian(a * b, rng) != va + vb) {
        out.fail(k.name() + " product " + a.to_string() + " * " + b.to_string());
      }
      if (free_abelian_to_tilde(va) != a) out.fail(k.name() + " round trip of " + a.to_string());
      if (tilde_to_free_abelian(free_abelian_to_tilde(vb), rng) != vb) {
        out.fail(k.name() + " round trip of " + vb.to_string());
      }
      if (tilde_to_free_abelian(a.inverse(), rng) != GrothendieckClass(k, 1) - va) {
        out.fail(k.name() + " inverse of " + a.to_string());
      }
    }
  }
  return out;
}

bool has_root(const UniPoly& f, const std::vector<FieldElement>& candidates) {
  for (const auto& x : candidates)
    if (f(x).is_zero()) return true;
  return false;
}

std::vector<FieldElement> field_elements(const Field& k) {
  std::vector<FieldElement> xs;
  for (std::uint64_t a = 0; a < k.characteristic(); ++a) xs.push_back(k.from_int(static_cast<long long>(a)));
  return xs;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Candidate rational roots of f over Q: +-a/b with a | c0 and b | lc after
// clearing denominators. A root at 0 is caught separately.
std::vector<FieldElement> rational_root_candidates(const UniPoly& f) {
  const Field& k = f.field();
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, mpz_class(c.rational().get_den()));
  mpz_class c0;
  int low = 0;
  while (f.coeff(low).is_zero()) ++low;
  c0 = mpz_class(f.coeff(low).rational() * den);
  const mpz_class lc = mpz_class(f.leading().rational() * den);
  std::vector<FieldElement> xs{k.zero()};
  for (const auto& a : positive_divisors(c0)) {
    for (const auto& b : positive_divisors(lc)) {
      xs.push_back(k.from_mpq(mpq_class(a, b)));
      xs.push_back(k.from_mpq(mpq_class(-a, b)));
    }
  }
  return xs;
}

// Rabin's test over F_p.
bool irreducible_mod_p(const UniPoly& f) {
  const Field& k = f.field();
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const UniPoly x = UniPoly::monomial(k.one(), 1);
  const mpz_class p(static_cast<unsigned long>(k.characteristic()));
  auto frobenius = [&](int times) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(times));
    return powmod(x, e, f);
  };
  if (frobenius(n) != x % f) return false;
  for (int q = 2; q <= n; ++q) {
    bool prime = true;
    for (int r = 2; r * r <= q; ++r) prime = prime && q % r != 0;
    if (!prime || n % q != 0) continue;
    if (gcd(frobenius(n / q) - x, f).degree() != 0) return false;
  }
  return true;
}

// Degrees a rational factor of f could have, judged from its factorizations
// modulo small primes. If only 0 and deg f survive, f is irreducible over Q.
bool irreducible_over_q(const UniPoly& f, Rng& rng) {
  const int n = f.degree();
  if (n <= 3) return n == 1 || !has_root(f, rational_root_candidates(f));
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  int usable = 0;
  for (std::uint64_t p = 3; p < 2000 && usable < 40; p += 2) {
    bool prime = true;
    for (std::uint64_t r = 3; r * r <= p; r += 2) prime = prime && p % r != 0;
    if (!prime) continue;
    const Field fp = Field::prime(p);
    std::vector<FieldElement> cs;
    bool ok = true;
    for (const auto& c : f.coeffs()) {
      if (mpz_divisible_ui_p(c.rational().get_den_mpz_t(), static_cast<unsigned long>(p)) != 0) ok = false;
      if (ok) cs.push_back(fp.from_mpq(c.rational()));
    }
    if (!ok) continue;
    const UniPoly g(fp, std::move(cs));
    if (g.degree() != n || gcd(g, g.derivative()).degree() != 0) continue;
    ++usable;
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (const auto& factor : factor(g, rng).factors) {
      const auto d = static_cast<std::size_t>(factor.poly.degree());
      for (std::size_t s = static_cast<std::size_t>(n); s >= d; --s) sums[s] = sums[s] || sums[s - d];
    }
    bool only_trivial = true;
    for (std::size_t s = 1; s < static_cast<std::size_t>(n); ++s) {
      possible[s] = possible[s] && sums[s];
      only_trivial = only_trivial && !possible[s];
    }
    if (only_trivial) return true;
  }
  return false;
}

bool certified_irreducible(const UniPoly& f, Rng& rng) {
  if (f.field().is_prime_field()) {
    if (f.degree() <= 3) return f.degree() == 1 || (f.degree() > 1 && !has_root(f, field_elements(f.field())));
    return irreducible_mod_p(f);
  }
  return irreducible_over_q(f, rng);
}

// A random irreducible of the given degree: rejection sampling, except over Q
// in degree >= 4 where an Eisenstein polynomial at 2 is used.
UniPoly random_irreducible(const Field& k, int degree, Rng& rng) {
  if (k.is_rationals() && degree >= 4) {
    std::vector<FieldElement> cs;
    std::uniform_int_distribution<long long> dist(-2, 2);
    cs.push_back(k.from_int(2 * (2 * dist(rng) + 1)));
    for (int i = 1; i < degree; ++i) cs.push_back(k.from_int(2 * dist(rng)));
    cs.push_back(k.one());
    return UniPoly(k, std::move(cs));
  }
  for (;;) {
    const UniPoly f = testgen::random_poly_exact(k, degree, rng).monic();
    if (certified_irreducible(f, rng)) return f;
  }
}

std::string check_factorization(const UniPoly& f, const Factorization& fac, Rng& rng) {
  if (fac.expand() != f) return "product does not reconstruct " + f.to_string();
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    const UniPoly& g = fac.factors[i].poly;
    if (!g.is_monic() || fac.factors[i].multiplicity < 1) return "bad factor " + g.to_string();
    if (i > 0 && !(fac.factors[i - 1].poly < g)) return "factors out of order in " + f.to_string();
    if (!certified_irreducible(g, rng)) return "factor " + g.to_string() + " of " + f.to_string() + " not certified";
  }
  return "";
}

Outcome factorization() {
  Outcome out;
  Rng rng(1008);
  const std::vector<Field> fields = testgen::small_fields();

  // Every monic polynomial of degree 1..3 over the prime fields: a single
  // simple factor exactly when it is linear or has no root.
  for (const Field& k : fields) {
    if (!k.is_prime_field()) continue;
    const auto elems = field_elements(k);
    const std::uint64_t p = k.characteristic();
    for (int degree = 1; degree <= 3; ++degree) {
      std::uint64_t count = 1;
      for (int i = 0; i < degree; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FieldElement> cs;
        std::uint64_t c = code;
        for (int i = 0; i < degree; ++i, c /= p) cs.push_back(k.from_int(static_cast<long long>(c % p)));
        cs.push_back(k.one());
        const UniPoly f(k, std::move(cs));
        const Factorization fac = factor(f, rng);
        const bool says_irreducible = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
        ++out.checked;
        if (says_irreducible != (degree == 1 || !has_root(f, elems))) out.fail(k.name() + " sweep disagrees on " + f.to_string());
      }
    }
  }

  for (const Field& k : fields) {
    for (int i = 0; i < 500; ++i) {
      ++out.checked;
      if (i % 2 == 0) {
        const UniPoly f = testgen::random_poly_exact(k, 1 + i / 2 % 12, rng);
        const std::string err = check_factorization(f, factor(f, rng), rng);
        if (!err.empty()) out.fail(k.name() + ": " + err);
        continue;
      }
      // Known factorization: distinct random irreducibles with multiplicities.
      std::map<UniPoly, int> expected;
      int total = 0;
      std::uniform_int_distribution<int> deg(1, 5);
      std::uniform_int_distribution<int> mult(1, 3);
      for (int tries = 0; tries < 8; ++tries) {
        const int d = deg(rng);
        const int m = mult(rng);
        if (total + d * m > 12) continue;
        const UniPoly g = random_irreducible(k, d, rng);
        if (expected.contains(g)) continue;
        expected[g] = m;
        total += d * m;
      }
      UniPoly f = UniPoly::constant(testgen::random_scalar(k, rng) + k.from_int(7));
      if (f.is_zero()) f = UniPoly::constant(k.one());
      for (const auto& [g, m] : expected) f *= g.pow(static_cast<unsigned>(m));
      const Factorization fac = factor(f, rng);
      std::vector<Factor> want;
      for (const auto& [g, m] : expected) want.push_back({g, m});
      if (fac.factors != want || fac.expand() != f) out.fail(k.name() + ": wrong factorization of " + f.to_string());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome golden_outputs() {
  Outcome out;
#ifdef KCOMM_TOOL_PATH
  struct Case {
    const char* command;
    const char* input;
    const char* expected;
  };
  const std::array<Case, 4> cases{{
      {"class", "diag01_q.txt", "class_diag01_q.out"},
      {"split", "jordan2_q.txt", "split_jordan2_q.out"},
      {"class", "jordan_pair_f2.txt", "class_jordan_pair_f2.out"},
      {"class", "companion_f3.txt", "class_companion_f3.out"},
  }};
  for (const Case& c : cases) {
    const std::string cmd = std::string("\"") + KCOMM_TOOL_PATH + "\" " + c.command + " \"" + KCOMM_TEST_DATA + "/" +
                            c.input + "\"";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      out.fail("cannot run " + cmd);
      continue;
    }
    std::string got;
    std::array<char, 256> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) got.append(buf.data(), n);
    const int status = pclose(pipe);
    ++out.checked;
    if (status != 0) out.fail(std::string(c.command) + " " + c.input + " exited with status " + std::to_string(status));
    if (got != read_file(std::string(KCOMM_GOLDEN_DIR) + "/" + c.expected)) {
      out.fail(std::string(c.command) + " " + c.input + " printed:\n" + got);
    }
  }
#else
  out.fail("the command-line tool was not built (KCOMM_BUILD_TOOLS=OFF)");
#endif
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle agreement: all 3x3 matrices over F2, 100 commuting pairs over F2/F3", 60, oracle_agreement},
      {2, "sum of multiplicity * degree equals dimension on 500 tuples", 0, dimension_identity},
      {3, "additivity for submodules generated by 3 random vectors on 200 tuples", 0, additivity},
      {4, "devissage through the radical filtration on the same 200 tuples", 0, devissage},
      {5, "splitting comparison on 200 matrices per field, lambda_t multiplicative and 1 on nilpotents", 0,
       splitting_comparison},
      {6, "tilde homomorphism and round trips on 200 pairs over Q and F5", 0, tilde_correspondence},
      {7, "factorization reconstruction on 500 polynomials per field with irreducibility certificates", 120,
       factorization},
      {8, "golden command-line outputs are byte-identical", 0, golden_outputs},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    all = all && o.ok;
    std::printf("[%s] criterion %d: %s (%zu checks, %.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.checked,
                seconds);
    if (!o.ok) std::printf("       %s\n", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
