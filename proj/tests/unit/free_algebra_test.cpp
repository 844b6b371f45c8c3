#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dgcell/expression.hpp"
#include "dgcell/free_algebra.hpp"
#include "dgcell/monomial_orders.hpp"
#include "oracles.hpp"

using namespace dgcell;

namespace {

SignaturePtr weyl_sig() {
  return make_signature({{"x1", 1, 0, 1}, {"x2", 2, 0, 1}, {"x3", 3, -1, 2}});
}

Polynomial random_poly(std::mt19937_64& rng, const SignaturePtr& sig) {
  std::uniform_int_distribution<int> nterms(0, 5), len(0, 4), letter(0, static_cast<int>(sig->size()) - 1);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  Polynomial p(sig);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = letter(rng);
    p.add_term(Word(w), Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Signature, RejectsBadGenerators) {
  EXPECT_THROW(make_signature({}), InvalidSignature);
  EXPECT_THROW(make_signature({{"x1", 1, 0, 0}}), InvalidSignature);
  EXPECT_THROW(make_signature({{"x1", 1, 0, 1}, {"x1", 2, 0, 1}}), InvalidSignature);
  EXPECT_THROW(make_signature({{"2x", 1, 0, 1}}), InvalidSignature);
  EXPECT_THROW(make_signature({{"x1", 2, 0, 1}}), InvalidSignature);
}

TEST(Signature, FillsIndicesAndFindsNames) {
  auto sig = make_signature({{"a", 0, 0, 1}, {"b", 0, 1, 3}});
  EXPECT_EQ(sig->generator(1).index, 2);
  EXPECT_EQ(sig->find("b"), 1);
  EXPECT_FALSE(sig->find("c"));
}

TEST(Word, GradingAndWeight) {
  auto sig = weyl_sig();
  Word u{0, 0, 1, 2, 2, 2};
  EXPECT_EQ(cohom_degree(*sig, u), -3);
  EXPECT_EQ(weight(*sig, u), 9);
  EXPECT_EQ(degree_vector(*sig, u), (DegreeVector{2, 1, 3}));
  EXPECT_EQ(weight(*sig, Word{}), 0);
  EXPECT_EQ(u.subword(2, 2), (Word{1, 2}));
  EXPECT_EQ(Word({0}) * Word({1, 2}), (Word{0, 1, 2}));
}

TEST(Word, CountsUpToWeightMatchRecurrence) {
  // With weights (1, 1, 2): a(n) = 2 a(n-1) + a(n-2).
  auto sig = weyl_sig();
  std::vector<std::size_t> per_weight{1, 2};
  for (int n = 2; n <= 8; ++n) per_weight.push_back(2 * per_weight[n - 1] + per_weight[n - 2]);
  std::size_t total = 0;
  for (int n = 0; n <= 8; ++n) {
    total += per_weight[static_cast<std::size_t>(n)];
    EXPECT_EQ(words_up_to_weight(*sig, n).size(), total) << "N = " << n;
  }
  EXPECT_EQ(total, 1681u);
}

TEST(Word, EnumerationAgreesWithIndependentGenerator) {
  auto sig = make_signature({{"a", 0, 0, 1}, {"b", 0, 0, 1}, {"c", 0, 0, 1}});
  auto mine = words_up_to_weight(*sig, 4);
  auto ref = oracle::all_words(3, 4);
  ASSERT_EQ(mine.size(), ref.size());
  std::set<Word> a(mine.begin(), mine.end());
  for (const auto& w : ref) EXPECT_TRUE(a.count(Word(w)));
}

TEST(Polynomial, ArithmeticIsExact) {
  auto sig = weyl_sig();
  auto x1 = Polynomial::generator(sig, 0);
  auto x2 = Polynomial::generator(sig, 1);
  auto comm = x1 * x2 - x2 * x1;
  EXPECT_EQ(comm.size(), 2u);
  EXPECT_EQ(comm.coefficient(Word{0, 1}), 1);
  EXPECT_EQ(comm.coefficient(Word{1, 0}), -1);
  EXPECT_TRUE((comm - comm).is_zero());
  auto third = x1 * Rational(1, 3);
  EXPECT_EQ((third * Rational(3)), x1);
  EXPECT_EQ((x1 + x2) * (x1 + x2), x1 * x1 + x1 * x2 + x2 * x1 + x2 * x2);
}

TEST(Polynomial, SignatureMismatchIsRejected) {
  auto a = weyl_sig();
  auto b = make_signature({{"y", 1, 0, 1}});
  EXPECT_THROW(Polynomial::generator(a, 0) + Polynomial::generator(b, 0), SignatureMismatch);
}

TEST(Polynomial, Homogeneity) {
  auto sig = weyl_sig();
  EXPECT_EQ(is_homogeneous(parse_expression("x1*x2 - x2*x1 - 1", sig)), 0);
  EXPECT_EQ(is_homogeneous(parse_expression("x3*x1", sig)), -1);
  EXPECT_FALSE(is_homogeneous(parse_expression("x3 + x1", sig)));
  EXPECT_FALSE(is_homogeneous(Polynomial(sig)));
}

TEST(Expression, ParsesTheGrammar) {
  auto sig = weyl_sig();
  auto delta = parse_expression("x1*x2 - x2*x1 - 1", sig);
  EXPECT_EQ(delta.coefficient(Word{}), -1);
  EXPECT_EQ(delta.size(), 3u);

  auto u = parse_expression("x1^2 x2 x3^3", sig);
  EXPECT_EQ(u, Polynomial::monomial(sig, Word{0, 0, 1, 2, 2, 2}));
  EXPECT_TRUE(parse_expression("0", sig).is_zero());
  EXPECT_EQ(parse_expression(" - 3/4 x1 x2 + 2*x3", sig).coefficient(Word{0, 1}), Rational(-3, 4));
  EXPECT_EQ(parse_expression("1", sig), Polynomial::constant(sig, 1));
}

TEST(Expression, ReportsPositions) {
  auto sig = weyl_sig();
  try {
    parse_expression("x1 + y7", sig);
    FAIL() << "unknown generator accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_expression("x1 +", sig), ParseError);
  EXPECT_THROW(parse_expression("x1^0", sig), ParseError);
  EXPECT_THROW(parse_expression("3/0 x1", sig), ParseError);
  EXPECT_THROW(parse_expression("(x1)", sig), ParseError);
}

TEST(Expression, FormatParseRoundTrip) {
  auto sig = weyl_sig();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = random_poly(rng, sig);
    for (auto order : {OrderKind::RightLex, OrderKind::DegreeOrder}) {
      std::string text = to_string(p, order);
      EXPECT_EQ(parse_expression(text, sig), p) << text;
    }
  }
}

TEST(Expression, CanonicalPrinting) {
  auto sig = weyl_sig();
  EXPECT_EQ(to_string(parse_expression("-1 - x2*x1 + x1*x2", sig)), "x1*x2 - x2*x1 - 1");
  EXPECT_EQ(to_string(Polynomial(sig)), "0");
  EXPECT_EQ(to_string(parse_expression("-3/2 x1^2", sig)), "-3/2*x1^2");
}
