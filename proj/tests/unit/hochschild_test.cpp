#include <random>

#include <gtest/gtest.h>

#include "dgcell/expression.hpp"
#include "dgcell/hochschild.hpp"
#include "dgcell/rewriting.hpp"
#include "oracles.hpp"

using namespace dgcell;

namespace {

using Vec = FiniteDimAlgebra::Vector;

// Unreduced Hochschild complex C_n = B^{(x)(n+1)} with the usual b, built
// densely. Returns HH_0..HH_{n_max}.
std::vector<std::size_t> hh_unreduced(const FiniteDimAlgebra& B, std::size_t n_max) {
  const std::size_t d = B.dim();
  auto pow = [&](std::size_t k) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= d;
    return p;
  };
  auto digits = [&](std::size_t idx, std::size_t len) {
    std::vector<std::size_t> out(len);
    for (std::size_t i = len; i-- > 0;) {
      out[i] = idx % d;
      idx /= d;
    }
    return out;
  };
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (auto x : t) idx = idx * d + x;
    return idx;
  };
  const auto& c = B.structure();
  // matrix of b_n : C_n -> C_{n-1}, rows = sources
  auto b = [&](std::size_t n) {
    oracle::Matrix m(pow(n + 1), std::vector<Rational>(pow(n)));
    for (std::size_t src = 0; src < pow(n + 1); ++src) {
      auto t = digits(src, n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        Rational sign = i % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < d; ++k) {
          if (c[t[i]][t[i + 1]][k] == 0) continue;
          std::vector<std::size_t> u(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
          u.push_back(k);
          u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 2), t.end());
          m[src][encode(u)] += sign * c[t[i]][t[i + 1]][k];
        }
      }
      Rational sign = n % 2 == 0 ? 1 : -1;
      for (std::size_t k = 0; k < d; ++k) {
        if (c[t[n]][t[0]][k] == 0) continue;
        std::vector<std::size_t> u{k};
        u.insert(u.end(), t.begin() + 1, t.begin() + static_cast<std::ptrdiff_t>(n));
        m[src][encode(u)] += sign * c[t[n]][t[0]][k];
      }
    }
    return m;
  };
  std::vector<std::size_t> rank(n_max + 2, 0);
  for (std::size_t n = 1; n <= n_max + 1; ++n) rank[n] = oracle::dense_rank(b(n));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(pow(n + 1) - rank[n] - rank[n + 1]);
  return out;
}

std::size_t commutator_quotient_dim(const FiniteDimAlgebra& B) {
  oracle::Matrix m;
  for (std::size_t i = 0; i < B.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      Vec ab = B.multiply(B.basis_vector(i), B.basis_vector(j));
      Vec ba = B.multiply(B.basis_vector(j), B.basis_vector(i));
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
      m.push_back(ab);
    }
  return B.dim() - oracle::dense_rank(m);
}

FiniteDimAlgebra group_algebra_z2() {
  // basis 1, g with g^2 = 1
  FiniteDimAlgebra::Structure c(2, std::vector<Vec>(2, Vec(2)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][0][1] = 1;
  c[1][1][0] = 1;
  return FiniteDimAlgebra({"1", "g"}, c, {1, 0});
}

FiniteDimAlgebra truncated_poly(std::size_t m) {
  // k[x]/(x^m), basis x^0..x^{m-1}
  FiniteDimAlgebra::Structure c(m, std::vector<Vec>(m, Vec(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j) c[i][j][i + j] = 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
  Vec unit(m);
  unit[0] = 1;
  return FiniteDimAlgebra(labels, c, unit);
}

FiniteDimAlgebra upper_triangular() {
  // e11, e12, e22
  FiniteDimAlgebra::Structure c(3, std::vector<Vec>(3, Vec(3)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][2][1] = 1;
  c[2][2][2] = 1;
  return FiniteDimAlgebra({"e11", "e12", "e22"}, c, {1, 0, 1});
}

SignaturePtr weyl_sig() {
  return make_signature({{"x1", 1, 0, 1}, {"x2", 2, 0, 1}, {"x3", 3, -1, 2}});
}

Polynomial to_poly(const SignaturePtr& sig, const WeylElement& a) {
  Polynomial p(sig);
  for (const auto& [key, c] : a.terms())
    p.add_term(power(1, static_cast<std::size_t>(key.first)) * power(0, static_cast<std::size_t>(key.second)), c);
  return p;
}

WeylElement random_weyl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4), n(1, 4);
  WeylElement a;
  int terms = n(rng);
  for (int t = 0; t < terms; ++t) a.add_term(e(rng), e(rng), c(rng));
  return a;
}

}  // namespace

TEST(Algebra, ValidatesStructure) {
  FiniteDimAlgebra::Structure c(2, std::vector<Vec>(2, Vec(2)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][0][1] = 1;
  c[1][1][0] = 1;
  c[1][1][1] = 1;  // g^2 = 1 + g is still associative and unital
  EXPECT_NO_THROW(FiniteDimAlgebra({"1", "g"}, c, {1, 0}));
  try {
    FiniteDimAlgebra({"1", "g"}, c, {0, 1});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraError::Kind::NoUnit);
  }

  // e0 e0 = e1 and every other product zero but e1 e0 = e0: not associative
  FiniteDimAlgebra::Structure bad(2, std::vector<Vec>(2, Vec(2)));
  bad[0][0][1] = 1;
  bad[1][0][0] = 1;
  try {
    FiniteDimAlgebra({"a", "b"}, bad, {0, 0});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraError::Kind::NonAssociative);
  }
  EXPECT_THROW(FiniteDimAlgebra({"a"}, bad, {1}), AlgebraError);
}

TEST(HHBar, KnownAlgebras) {
  EXPECT_EQ(hh_bar(dual_numbers(), 4).dims(), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(hh_bar(split_semisimple(), 4).dims(), (std::vector<std::size_t>{2, 0, 0, 0, 0}));
  EXPECT_EQ(hh_bar(ground_field(), 5).dims(), (std::vector<std::size_t>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(hh_bar(group_algebra_z2(), 3).dims(), (std::vector<std::size_t>{2, 0, 0, 0}));
  EXPECT_EQ(hh_bar(upper_triangular(), 3).dims(), (std::vector<std::size_t>{2, 0, 0, 0}));
}

TEST(HHBar, AgreesWithUnreducedComplex) {
  for (const auto& B : {dual_numbers(), split_semisimple(), group_algebra_z2(), upper_triangular(),
                        truncated_poly(3), split_semisimple(3)}) {
    std::size_t n_max = B.dim() <= 2 ? 3 : 2;
    auto reduced = hh_bar(B, n_max, {}, 2).dims();
    EXPECT_EQ(reduced, hh_unreduced(B, n_max)) << B.labels().front() << " dim " << B.dim();
    EXPECT_EQ(reduced[0], commutator_quotient_dim(B));
  }
}

TEST(HHBar, UnitNeedNotBeFirstBasisVector) {
  // k x k presented with basis (e1, 1)
  FiniteDimAlgebra::Structure c(2, std::vector<Vec>(2, Vec(2)));
  c[0][0] = {1, 0};
  c[0][1] = {1, 0};
  c[1][0] = {1, 0};
  c[1][1] = {0, 1};
  FiniteDimAlgebra B({"e1", "1"}, c, {0, 1});
  EXPECT_EQ(hh_bar(B, 3).dims(), (std::vector<std::size_t>{2, 0, 0, 0}));
}

TEST(HHBar, GuardsAreEnforced) {
  try {
    hh_bar(dual_numbers(), 9);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), AlgebraError::Kind::GuardExceeded);
  }
  EXPECT_THROW(hh_bar(split_semisimple(7), 1), AlgebraError);
  EXPECT_NO_THROW(hh_bar(split_semisimple(7), 1, {8, 8}));
}

TEST(Weyl, CommutatorValues) {
  auto x1 = WeylElement::generator(1), x2 = WeylElement::generator(2);
  EXPECT_EQ(weyl_commutator(1, x2), WeylElement::monomial(0, 0));
  EXPECT_EQ(weyl_commutator(1, x2 * x2), WeylElement::monomial(1, 0, 2));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      auto m = WeylElement::monomial(i, j);
      // [x2, x2^i x1^j] = -j x2^i x1^{j-1}, [x1, x2^i x1^j] = i x2^{i-1} x1^j
      EXPECT_EQ(weyl_commutator(2, m), j ? WeylElement::monomial(i, j - 1, -j) : WeylElement());
      EXPECT_EQ(weyl_commutator(1, m), i ? WeylElement::monomial(i - 1, j, i) : WeylElement());
    }
  EXPECT_EQ(x1 * x2 - x2 * x1, WeylElement::monomial(0, 0));
}

TEST(Weyl, ProductMatchesRewriting) {
  auto sig = weyl_sig();
  auto rs = weyl_rewrite_system(sig);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    auto a = random_weyl(rng), b = random_weyl(rng), c = random_weyl(rng);
    ASSERT_EQ(to_poly(sig, a * b), normal_form(rs, to_poly(sig, a) * to_poly(sig, b))) << to_string(a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Weyl, CommutatorIsADerivation) {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 100; ++t) {
    auto a = random_weyl(rng), b = random_weyl(rng);
    for (int g : {1, 2})
      EXPECT_EQ(weyl_commutator(g, a * b), weyl_commutator(g, a) * b + a * weyl_commutator(g, b));
  }
}

TEST(Weyl, HomologyIsConcentratedInDegreeTwo) {
  auto res = hh_weyl(10, 2);
  EXPECT_EQ(res.table.dims(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_TRUE(res.d_squared_zero);
  EXPECT_TRUE(res.hh0_vanishes);
  ASSERT_EQ(res.pieces.size(), 11u);
  for (const auto& p : res.pieces) {
    EXPECT_EQ(p.c2, static_cast<std::size_t>(p.m + 1));
    EXPECT_EQ(p.c1, static_cast<std::size_t>(2 * p.m));
    EXPECT_EQ(p.c0, static_cast<std::size_t>(p.m > 0 ? p.m - 1 : 0));
    EXPECT_EQ(static_cast<long>(p.hh2) - static_cast<long>(p.hh1) + static_cast<long>(p.hh0),
              static_cast<long>(p.c2) - static_cast<long>(p.c1) + static_cast<long>(p.c0));
    EXPECT_EQ(p.hh2, p.m == 0 ? 1u : 0u);
  }
}

TEST(Les, ExceptionalAmbientOverWeyl) {
  HHTable ambient{{{4, true}}};
  auto quotient = hh_weyl(6).table;
  auto k = hh_from_les(ambient, quotient);
  EXPECT_EQ(k.dims(), (std::vector<std::size_t>{4, 1, 0}));
}

TEST(Les, NeedsRanksWhenNotForced) {
  HHTable one{{{1, true}}};
  try {
    hh_from_les(one, one);
    FAIL();
  } catch (const LesError& e) {
    EXPECT_EQ(e.kind(), LesError::Kind::Underdetermined);
  }
  EXPECT_EQ(hh_from_les(one, one, {{0, 1}}).dims(), (std::vector<std::size_t>{0}));
  EXPECT_THROW(hh_from_les(one, one, {{0, 0}}), LesError);
  EXPECT_THROW(hh_from_les(one, one, {{0, 2}}), LesError);
  EXPECT_THROW(hh_from_les(HHTable{{{0, true}}}, one), LesError);
}

TEST(Les, EulerCharacteristicIsAdditive) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(0, 3);
  for (int t = 0; t < 100; ++t) {
    HHTable C, Q;
    std::map<std::size_t, std::size_t> ranks;
    for (std::size_t n = 0; n < 4; ++n) {
      std::size_t c = static_cast<std::size_t>(dim(rng)), q = static_cast<std::size_t>(dim(rng));
      if (n == 0) q = std::min(c, q);  // Q_0 must be hit
      C.entries.push_back({c, true});
      Q.entries.push_back({q, true});
      if (c && q) ranks[n] = n == 0 ? q : std::uniform_int_distribution<std::size_t>(0, std::min(c, q))(rng);
    }
    auto K = hh_from_les(C, Q, ranks);
    auto chi = [](const HHTable& T) {
      long s = 0;
      for (std::size_t n = 0; n < T.entries.size(); ++n) s += (n % 2 ? -1 : 1) * static_cast<long>(T.entries[n].dim);
      return s;
    };
    EXPECT_EQ(chi(K), chi(C) - chi(Q));
  }
}
