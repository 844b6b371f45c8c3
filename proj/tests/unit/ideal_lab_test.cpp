#include <gtest/gtest.h>

#include "dgcell/expression.hpp"
#include "dgcell/ideal_lab.hpp"
#include "oracles.hpp"

using namespace dgcell;

namespace {

struct Setup {
  SignaturePtr sig;
  FiniteCellDGA A;
  GeneratorPair pair;
  BasisFamily V;
};

Setup weyl() {
  auto sig = make_signature({{"x1", 1, 0, 1}, {"x2", 2, 0, 1}, {"x3", 3, -1, 2}});
  auto delta = parse_expression("x1*x2 - x2*x1 - 1", sig);
  auto A = build_dga(sig, {{2, delta}});
  auto pair = make_generator_pair(A, parse_expression("x3", sig), delta);
  return {sig, A, pair, BasisFamily::normal_words(1, 0)};
}

Setup naive() {
  auto sig = make_signature({{"x1", 1, 0, 1}, {"x2", 2, -1, 1}, {"x3", 3, 0, 1}});
  auto A = build_dga(sig, {{1, parse_expression("x1", sig)}});
  auto pair = make_generator_pair(A, parse_expression("x2", sig), parse_expression("x1", sig));
  return {sig, A, pair, BasisFamily::avoid({0, 1})};
}

Setup nonacyclic() {
  auto sig = make_signature({{"x1", 1, 0, 1}, {"x2", 2, -1, 2}});
  auto A = build_dga(sig, {{1, parse_expression("x1^2", sig)}});
  auto pair = make_generator_pair(A, parse_expression("x2", sig), parse_expression("x1^2", sig));
  return {sig, A, pair, BasisFamily::explicit_list({Word{}, Word{0}})};
}

oracle::Matrix dense(const WordIndex& index, const std::vector<Polynomial>& polys) {
  oracle::Matrix m(polys.size(), std::vector<Rational>(index.size()));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [w, c] : polys[i].terms()) m[i][*index.col(w)] = c;
  return m;
}

oracle::Matrix stack(oracle::Matrix a, const oracle::Matrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// dim span{ a beta b } by brute force over all word pairs
std::size_t ideal_dim_oracle(const Setup& s, int N) {
  auto words = words_up_to_weight(*s.sig, N);
  std::vector<Polynomial> gens;
  for (const auto* beta : {&s.pair.r, &s.pair.delta})
    for (const auto& a : words)
      for (const auto& b : words)
        if (weight(*s.sig, a) + beta->weight() + weight(*s.sig, b) <= N)
          gens.push_back(Polynomial::monomial(s.sig, a) * *beta * Polynomial::monomial(s.sig, b));
  auto index = WordIndex::up_to_weight(OrderKind::DegreeOrder, s.sig, N);
  return oracle::dense_rank(dense(index, gens));
}

}  // namespace

TEST(GeneratorPair, Validation) {
  auto s = weyl();
  EXPECT_TRUE(s.pair.delta_is_dr);
  auto x1 = parse_expression("x1", s.sig);
  EXPECT_THROW(make_generator_pair(s.A, x1, x1), std::invalid_argument);
  EXPECT_THROW(make_generator_pair(s.A, Polynomial(s.sig), x1), std::invalid_argument);
  EXPECT_THROW(make_generator_pair(s.A, parse_expression("x1 + x3", s.sig), x1), std::invalid_argument);
  EXPECT_FALSE(make_generator_pair(s.A, x1, parse_expression("x2", s.sig)).delta_is_dr);
}

TEST(BasisFamily, Enumeration) {
  auto s = weyl();
  auto normal = BasisFamily::normal_words(1, 0).enumerate(*s.sig, 2);
  std::vector<Word> expected{Word{}, Word{1}, Word{0}, Word{1, 1}, Word{1, 0}, Word{0, 0}};
  EXPECT_EQ(normal, expected);
  EXPECT_TRUE(BasisFamily::normal_words(1, 0).contains(Word{1, 1, 0}));
  EXPECT_FALSE(BasisFamily::normal_words(1, 0).contains(Word{0, 1}));

  auto avoid = BasisFamily::avoid({0, 1});
  EXPECT_EQ(avoid.enumerate(*s.sig, 5).size(), 3u);  // 1, x3, x3^2
  EXPECT_FALSE(avoid.contains(Word{2, 0}));

  auto list = BasisFamily::explicit_list({Word{0}, Word{}, Word{0}});
  EXPECT_EQ(list.enumerate(*s.sig, 3).size(), 2u);
}

TEST(IdealSlice, NaiveWeightOne) {
  auto s = naive();
  auto slice = ideal_slice(s.A, s.pair, 1);
  ASSERT_EQ(slice.dim(), 2u);
  EXPECT_EQ(tip_set(OrderKind::DegreeOrder, slice.basis), (std::vector<Word>{Word{0}, Word{1}}));
}

TEST(IdealSlice, DimensionsMatchBruteForce) {
  for (int N = 0; N <= 4; ++N) {
    for (const auto& s : {weyl(), naive(), nonacyclic()})
      EXPECT_EQ(ideal_slice(s.A, s.pair, N).dim(), ideal_dim_oracle(s, N)) << "N = " << N;
  }
}

TEST(IdealSlice, WeylQuotientDimension) {
  auto s = weyl();
  for (int N = 0; N <= 6; ++N) {
    std::size_t ambient = words_up_to_weight(*s.sig, N).size();
    EXPECT_EQ(ambient - ideal_slice(s.A, s.pair, N).dim(), static_cast<std::size_t>((N + 1) * (N + 2) / 2));
  }
}

TEST(Uop, WeylPassesUnderDegreeOrder) {
  auto s = weyl();
  for (int N : {2, 4, 6}) {
    auto rep = check_unique_order_property(s.A, s.pair, OrderKind::DegreeOrder, s.V, N, {2});
    EXPECT_TRUE(rep.all_pass()) << rep.cond_i.detail << " / " << rep.cond_ii.detail << " / " << rep.cond_iii.detail;
    EXPECT_EQ(rep.basis_family_dim, static_cast<std::size_t>((N + 1) * (N + 2) / 2));
    EXPECT_EQ(rep.ambient_dim, rep.ideal_dim + rep.basis_family_dim);
    EXPECT_EQ(rep.collision_count, 0u);
  }
}

TEST(Uop, WeylFailsUnderRightLex) {
  auto s = weyl();
  auto rep = check_unique_order_property(s.A, s.pair, OrderKind::RightLex, s.V, 4);
  EXPECT_EQ(rep.cond_i.verdict, Verdict::Pass);
  EXPECT_EQ(rep.cond_ii.verdict, Verdict::Counterexample);
  ASSERT_TRUE(rep.collision);
  EXPECT_EQ(rep.collision->tip, (Word{2}));
  EXPECT_NE(rep.collision->first.beta, rep.collision->second.beta);
  EXPECT_EQ(rep.cond_iii.verdict, Verdict::Counterexample);
  ASSERT_TRUE(rep.cond_iii_witness);
  EXPECT_EQ(*rep.cond_iii_witness, (Word{1, 1}));
}

TEST(Uop, NaivePassesUnderBothOrders) {
  auto s = naive();
  for (auto order : {OrderKind::RightLex, OrderKind::DegreeOrder}) {
    auto rep = check_unique_order_property(s.A, s.pair, order, s.V, 5);
    EXPECT_TRUE(rep.all_pass()) << rep.cond_ii.detail;
  }
}

TEST(Uop, NonacyclicViolatesUniqueness) {
  auto s = nonacyclic();
  auto ok = check_unique_order_property(s.A, s.pair, OrderKind::DegreeOrder, s.V, 2);
  EXPECT_TRUE(ok.all_pass());
  auto rep = check_unique_order_property(s.A, s.pair, OrderKind::DegreeOrder, s.V, 3);
  EXPECT_EQ(rep.cond_i.verdict, Verdict::Pass);
  EXPECT_EQ(rep.cond_iii.verdict, Verdict::Pass);
  ASSERT_EQ(rep.cond_ii.verdict, Verdict::Counterexample);
  EXPECT_EQ(rep.collision->tip, (Word{0, 0, 0}));
}

TEST(Uop, IntersectingBasisFamilyFailsConditionOne) {
  auto s = nonacyclic();
  auto rep = check_unique_order_property(s.A, s.pair, OrderKind::DegreeOrder,
                                         BasisFamily::avoid({1}), 3);
  EXPECT_EQ(rep.cond_i.verdict, Verdict::Counterexample);
}

TEST(Uop, ThreadCountDoesNotChangeTheReport) {
  auto s = weyl();
  auto a = check_unique_order_property(s.A, s.pair, OrderKind::RightLex, s.V, 5, {1});
  auto b = check_unique_order_property(s.A, s.pair, OrderKind::RightLex, s.V, 5, {4});
  EXPECT_EQ(a.cond_ii.detail, b.cond_ii.detail);
  EXPECT_EQ(a.collision_count, b.collision_count);
  EXPECT_EQ(a.collision->tip, b.collision->tip);
}

TEST(Decomposition, WeylIsDirect) {
  auto s = weyl();
  for (int N = 2; N <= 6; N += 2) {
    auto rep = check_left_decomposition(s.A, s.pair, s.V, N);
    EXPECT_TRUE(rep.pass) << "N = " << N;
    EXPECT_EQ(rep.summand_dim_sum, rep.ideal_dim);
    EXPECT_EQ(rep.joint_rank, rep.ideal_dim);
  }
}

TEST(Decomposition, NonacyclicOverlaps) {
  auto s = nonacyclic();
  auto rep = check_left_decomposition(s.A, s.pair, s.V, 4);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.summand_dim_sum, rep.joint_rank);
}

TEST(SubmoduleM, WeylDimensions) {
  auto s = weyl();
  const std::vector<std::size_t> m_dims{1, 17, 130}, plus_dims{2, 34, 260};
  for (int k = 0; k < 3; ++k) {
    int N = 2 + 2 * k;
    auto M = submodule_M(s.A, s.pair, s.V, N);
    EXPECT_EQ(M.dim(), m_dims[static_cast<std::size_t>(k)]);
    EXPECT_EQ(m_plus(s.A, M).dim(), plus_dims[static_cast<std::size_t>(k)]);
    EXPECT_EQ(m_minus(s.A, M).dim(), 0u);
  }
}

// dim{ m in M : d m in M } = dim M - (rank[dM; M] - rank M)
TEST(SubmoduleM, MinusMatchesDenseOracle) {
  for (const auto& s : {weyl(), naive(), nonacyclic()}) {
    for (int N = 2; N <= 5; ++N) {
      auto M = submodule_M(s.A, s.pair, s.V, N);
      auto index = WordIndex::up_to_weight(OrderKind::DegreeOrder, s.sig, N);
      std::vector<Polynomial> dM;
      for (const auto& b : M.basis) dM.push_back(apply_d(s.A, b));
      auto m = dense(index, M.basis);
      std::size_t rm = oracle::dense_rank(m);
      std::size_t expected = M.dim() - (oracle::dense_rank(stack(dense(index, dM), m)) - rm);
      auto minus = m_minus(s.A, M);
      EXPECT_EQ(minus.dim(), expected) << "N = " << N;
      for (const auto& b : minus.basis) {
        EXPECT_EQ(oracle::dense_rank(stack(dense(index, {b}), m)), rm);
        EXPECT_EQ(oracle::dense_rank(stack(dense(index, {apply_d(s.A, b)}), m)), rm);
      }
    }
  }
}

TEST(SubmoduleM, PlusIsDStable) {
  auto s = naive();
  auto plus = m_plus(s.A, submodule_M(s.A, s.pair, s.V, 4));
  auto index = WordIndex::up_to_weight(OrderKind::DegreeOrder, s.sig, 4);
  auto base = dense(index, plus.basis);
  std::size_t r = oracle::dense_rank(base);
  EXPECT_EQ(r, plus.dim());
  for (const auto& b : plus.basis) EXPECT_EQ(oracle::dense_rank(stack(dense(index, {apply_d(s.A, b)}), base)), r);
}
