#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pyramidal/linear.hpp"

using namespace pyr;

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 .. c_k

// Schoolbook product reduced by a monic modulus, all coefficients mod p.
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  const std::size_t e = mod.size() - 1;
  std::vector<std::uint64_t> r(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t k = r.size(); k-- > e;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) r[k - e + i] = (r[k - e + i] + (p - c) * mod[i]) % p;
  }
  return Poly(r.begin(), r.begin() + static_cast<long>(e));
}

bool has_factor_of_degree(const Poly& f, std::uint32_t p, unsigned d) {
  // enumerate monic g of degree d and test divisibility by long division
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly g(d + 1, 0);
    std::uint64_t x = k;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    g[d] = 1;
    std::vector<std::int64_t> r(f.begin(), f.end());
    for (std::size_t top = r.size(); top-- > d;) {
      const std::int64_t c = ((r[top] % p) + p) % p;
      for (unsigned i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
    }
    bool zero = true;
    for (unsigned i = 0; i < d; ++i) zero = zero && r[i] % p == 0;
    if (zero) return true;
  }
  return false;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= e / 2; ++d)
    if (has_factor_of_degree(f, p, d)) return false;
  return true;
}

std::uint64_t brute_matrix_order(const FqMatrix& a) {
  const FqMatrix id = FqMatrix::identity(a.field(), a.dim());
  FqMatrix x = a;
  std::uint64_t k = 1;
  while (!(x == id)) {
    x = x * a;
    ++k;
  }
  return k;
}

FqMatrix random_matrix(std::mt19937& rng, const FiniteField& f, std::size_t n) {
  FqMatrix m(f, n);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = {pick(rng)};
  return m;
}

}  // namespace

TEST(FiniteField, Examples) {
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(f3.size(), 3u);
  EXPECT_EQ(f3.modulus().size(), 2u);
  const auto f4 = make_field(2, 2);
  EXPECT_EQ(f4.modulus(), (Poly{1, 1, 1}));
  const auto f32 = make_field(2, 5);
  for (std::uint32_t v = 1; v < 32; ++v) {
    const std::uint64_t o = f32.order({v});
    EXPECT_EQ(31 % o, 0u);
  }
  EXPECT_EQ(f32.order(f32.primitive_element()), 31u);
  EXPECT_THROW(make_field(4, 1), Error);
  EXPECT_THROW(make_field(2, 21), Error);
}

TEST(FiniteField, ModulusIsLeastIrreducible) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto f = make_field(p, e);
    const Poly& mod = f.modulus();
    ASSERT_EQ(mod.size(), e + 1);
    EXPECT_EQ(mod[e], 1u);
    EXPECT_TRUE(irreducible(mod, p));
    // every monic polynomial with a smaller base-p index (top coefficient first) is reducible
    auto index = [&](const Poly& g) {
      std::uint64_t k = 0;
      for (unsigned i = e; i-- > 0;) k = k * p + g[i];
      return k;
    };
    for (std::uint64_t k = 0; k < index(mod); ++k) {
      Poly g(e + 1, 0);
      std::uint64_t x = k;
      for (unsigned i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[e] = 1;
      EXPECT_FALSE(irreducible(g, p)) << "p=" << p << " e=" << e << " k=" << k;
    }
  }
}

TEST(FiniteField, MultiplicationMatchesPolynomialOracle) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}, {3, 3}}) {
    const auto f = make_field(p, e);
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        const Poly expect = poly_mul_mod(f.coefficients({a}), f.coefficients({b}), f.modulus(), p);
        ASSERT_EQ(f.coefficients(f.mul({a}, {b})), expect) << p << "^" << e << " " << a << "*" << b;
        Poly sum(e);
        const auto ca = f.coefficients({a}), cb = f.coefficients({b});
        for (unsigned i = 0; i < e; ++i) sum[i] = (ca[i] + cb[i]) % p;
        ASSERT_EQ(f.coefficients(f.add({a}, {b})), sum);
      }
  }
}

TEST(FiniteField, AxiomsOnRandomSamples) {
  std::mt19937 rng(31);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 5}, {5, 3}, {7, 2}, {31, 1}, {2, 13}}) {
    const auto f = make_field(p, e);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
      EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
      if (a != f.zero()) {
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
        EXPECT_EQ(f.pow(a, f.size() - 1), f.one());
      }
    }
  }
}

TEST(FqMatrix, DeterminantIsMultiplicative) {
  std::mt19937 rng(37);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const auto f = make_field(p, e);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const auto a = random_matrix(rng, f, n), b = random_matrix(rng, f, n);
      EXPECT_EQ((a * b).det(), f.mul(a.det(), b.det()));
    }
  }
}

TEST(FqMatrix, SingularOrderThrows) {
  const auto f = make_field(3, 1);
  try {
    (void)FqMatrix(f, 2, {1, 1, 1, 1}).order();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::singular_matrix);
  }
  EXPECT_THROW(matrix_permutation(FqMatrix(f, 2, {1, 2, 2, 1})), Error);
}

TEST(Singer, OrderAndTransitivity) {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto s = singer_matrix(n);
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    EXPECT_EQ(s.order(), m);
    EXPECT_EQ(brute_matrix_order(s), m);
    const auto f2 = make_field(2, 1);
    const std::vector<FqMatrix> gens{s};
    const auto g = linear_to_perm(gens, n, f2);
    EXPECT_EQ(g.order(), m);
    // orbit of e_0 under <s> covers every nonzero vector
    std::set<Point> orbit;
    for (const auto& x : g.elements()) orbit.insert(x[1]);
    EXPECT_EQ(orbit.size(), m);
    EXPECT_EQ(orbit.count(0), 0u);
  }
  EXPECT_EQ(singer_matrix(5).order(), 31u);
  EXPECT_THROW(singer_matrix(1), Error);
}

TEST(Singer, TwoByTwoIsThreeCycleFixingZero) {
  const auto f2 = make_field(2, 1);
  const std::vector<FqMatrix> gens{singer_matrix(2)};
  const auto g = linear_to_perm(gens, 2, f2);
  ASSERT_EQ(g.order(), 3u);
  const auto& c = g.generators().front();
  EXPECT_EQ(c[0], 0u);
  EXPECT_EQ(c.order(), 3u);
  EXPECT_EQ(c.fixed_points(), (std::vector<Point>{0}));
}

TEST(Sl2, GeneratedOrders) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    const auto mats = sl2(q);
    for (const auto& a : mats) EXPECT_EQ(a.det(), a.field().one());
    const auto g = linear_to_perm(mats, 2, mats.front().field());
    EXPECT_EQ(g.order(), q * (q - 1) * (q + 1)) << "q=" << q;
    // -I is present
    const FqMatrix minus = FqMatrix(mats.front().field(), 2, {-1, 0, 0, -1});
    EXPECT_TRUE(g.contains(matrix_permutation(minus)));
  }
  EXPECT_THROW(sl2(8), Error);
  EXPECT_THROW(sl2(15), Error);
}

TEST(LinearToPerm, IdentityAndHomomorphism) {
  const auto f3 = make_field(3, 1);
  const std::vector<FqMatrix> id{FqMatrix::identity(f3, 2)};
  EXPECT_EQ(linear_to_perm(id, 2, f3).order(), 1u);
  EXPECT_EQ(linear_to_perm(id, 2, f3).degree(), 9u);
  std::mt19937 rng(41);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 1}, {2, 2}, {5, 1}}) {
    const auto f = make_field(p, e);
    int done = 0;
    while (done < 50) {
      const auto a = random_matrix(rng, f, 2), b = random_matrix(rng, f, 2);
      if (!a.is_invertible() || !b.is_invertible()) continue;
      EXPECT_EQ(matrix_permutation(a * b), matrix_permutation(a) * matrix_permutation(b));
      ++done;
    }
  }
  const auto g = linear_to_perm(sl2(3), 2, f3);
  EXPECT_EQ(g.degree(), 9u);
  EXPECT_EQ(g.order(), 24u);
}

TEST(AffineToPerm, Examples) {
  const auto f3 = make_field(3, 1);
  const auto basis = standard_basis(f3, 2);
  const auto t = affine_to_perm(std::vector<FqMatrix>{}, basis, 2, f3);
  EXPECT_EQ(t.order(), 9u);
  EXPECT_TRUE(is_abelian(t));
  for (const auto& x : t.elements())
    if (!x.is_identity()) EXPECT_EQ(x.order(), 3u);
  EXPECT_EQ(affine_to_perm(sl2(3), basis, 2, f3).order(), 216u);
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(affine_to_perm(sl2(5), standard_basis(f5, 2), 2, f5).order(), 3000u);
}

TEST(SingerLift, Examples) {
  const auto g12 = singer_lift(1, 2);
  EXPECT_EQ(g12.order(), 3u);
  const auto s2 = singer_matrix(2);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) EXPECT_EQ(g12.at(i, j), s2.at(i, j).value);
  const auto g22 = singer_lift(2, 2);
  EXPECT_EQ(g22.order(), 3u);
  EXPECT_EQ(g22.reduce_mod2().order(), 3u);
  EXPECT_EQ(singer_lift(1, 5).order(), 31u);
  EXPECT_THROW(singer_lift(1, 4), Error);
  EXPECT_THROW(singer_lift(6, 4), Error);
}

TEST(SingerLift, PropertiesOverRange) {
  for (auto [l, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {1, 3}, {2, 3}, {1, 5}, {3, 3}}) {
    const auto gamma = singer_lift(l, n);
    const std::uint64_t m = (std::uint64_t{1} << n) - 1;
    EXPECT_TRUE(gamma.pow(m).is_identity());
    EXPECT_EQ(gamma.order(), m);
    // reduction mod 2 is a nontrivial power of the Singer matrix
    const auto red = gamma.reduce_mod2();
    const auto s = singer_matrix(n);
    bool is_power = false;
    for (std::uint64_t k = 1; k < m && !is_power; ++k) {
      const auto sk = s.pow(k);
      bool eq = true;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) eq = eq && red.at(i, j) == sk.at(i, j).value;
      is_power = eq;
    }
    EXPECT_TRUE(is_power);
    // on the order-2 subgroup (vectors with entries in {0, 2^(l-1)}) only 0 is fixed
    const Permutation perm = modular_matrix_permutation(gamma);
    const std::uint64_t half = std::uint64_t{1} << (l - 1);
    for (std::size_t bits = 1; bits < (std::size_t{1} << n); ++bits) {
      std::vector<std::uint64_t> v(n);
      for (unsigned i = 0; i < n; ++i) v[i] = (bits >> i) & 1 ? half : 0;
      EXPECT_NE(perm[encode_modular(v, l)], encode_modular(v, l));
    }
  }
}

TEST(ModularEncoding, RoundTrip) {
  for (unsigned l = 1; l <= 3; ++l)
    for (std::size_t i = 0; i < (std::size_t{1} << (3 * l)); ++i) EXPECT_EQ(encode_modular(decode_modular(i, l, 3), l), i);
  const auto f = make_field(3, 2);
  for (std::size_t i = 0; i < 81; ++i) EXPECT_EQ(encode_vector(f, decode_vector(f, 2, i)), i);
}
